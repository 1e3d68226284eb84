import pytest

import laundrybraids as lb

FIG8 = "4: 3 -2 1 -2 1"


def test_normal_form():
    assert lb.b0_normal_form("4: 1 3 1") == "4: 1 1 3"
    assert lb.component_count("3: 1 1 2 2") == 3


def test_encode_decode_roundtrip():
    m = lb.encode("2: 1")
    assert m == [[0, 1, 0], [1, 1, -1], [0, -1, 0]]
    assert lb.decode(m) == "2: 1"
    assert lb.decode(lb.encode(FIG8)) == FIG8
    assert lb.validate(lb.encode(FIG8)) == []
    assert lb.validate([[1]]) != []


def test_matrix_tower():
    gl = lb.gl_form(lb.encode("2: 1"))
    assert gl == [[0, 1], [1, 1]]
    assert lb.restore_from_gl(gl) == lb.encode("2: 1")
    s = lb.seifert_matrix("2: 1")
    assert len(s) == 2


def test_invariants():
    inv = lb.invariants("2: 1 1 1")
    assert inv["det"] == 3
    assert abs(inv["signature"]) == 2
    assert inv["alexander"] == [1, -1, 1]
    assert lb.alexander_oracle("2: 1 1 1") == [1, -1, 1]
    assert lb.invariants(FIG8)["alexander"] == [1, -3, 1]


def test_moves():
    assert lb.apply_move("1:", "stab:+") == "2: 1"
    assert lb.verify_commuting("3: 1 2 1", "r3:1:r")
    out, witness = lb.apply_matrix_move(lb.encode("3: 1 2 1"), "r3:1:r")
    assert out == lb.encode("3: 2 1 2")
    assert witness is not None
    with pytest.raises(ValueError):
        lb.apply_move("2: 1 1", "destab")


def test_gauss_and_svg():
    g = lb.gauss(FIG8)
    assert g["chords"] == 9
    assert len(g["endpoints"]) == 20
    assert g["endpoints"][0] == "a0" and g["endpoints"][-1] == "b0"
    assert lb.chord_svg("2: 1").startswith("<svg")


def test_fuzz_harness():
    ok, report = lb.fuzz(1, 5)
    assert ok, report
