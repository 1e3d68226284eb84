"""Closed braid diagrams as linking matrices, with exact link invariants.

Braid words are strings like ``"4: 3 -2 1 -2 1"`` (strand count, then signed
generator indices bottom-to-top); matrices are lists of integer rows.
"""

from ._core import (
    BraidParseError,
    MatrixValidationError,
    MovePatternError,
    alexander_oracle,
    apply_matrix_move,
    apply_move,
    b0_normal_form,
    chord_svg,
    component_count,
    correction_matrix,
    decode,
    encode,
    fuzz,
    gauss,
    gl_form,
    intersection_form,
    invariants,
    restore_from_gl,
    seifert_matrix,
    seifert_pairing,
    validate,
    verify_commuting,
)

__all__ = [
    "BraidParseError",
    "MatrixValidationError",
    "MovePatternError",
    "alexander_oracle",
    "apply_matrix_move",
    "apply_move",
    "b0_normal_form",
    "chord_svg",
    "component_count",
    "correction_matrix",
    "decode",
    "encode",
    "fuzz",
    "gauss",
    "gl_form",
    "intersection_form",
    "invariants",
    "restore_from_gl",
    "seifert_matrix",
    "seifert_pairing",
    "validate",
    "verify_commuting",
]
