#pragma once

#include <optional>
#include <string>
#include <variant>

#include "laundry/braid.hpp"
#include "laundry/linking.hpp"
#include "laundry/matrix.hpp"

namespace laundry {

// Matrix-level counterparts of the diagram moves, applied as direct surgery
// on a valid linking matrix. Heights refer to the canonical word the matrix
// encodes.
struct M1Insert {
    int column = 1;
    int height = 1;
    int upper_sign = 1;
};
struct M1Delete {
    int band_a = 0;  // matrix positions of the canceling pair
    int band_b = 0;
};
struct M2Stabilize {
    int sign = 1;
};
struct M2Destabilize {};
struct M3Conjugate {};
struct M4 {
    int height = 1;
    char direction = 'r';
};

using MatrixMoveSpec =
    std::variant<M1Insert, M1Delete, M2Stabilize, M2Destabilize, M3Conjugate, M4>;

struct MoveResult {
    IntMat matrix;
    // Congruence witness P with P^T M P = matrix; present for the
    // size-preserving moves (conjugation and the triple-point move).
    std::optional<IntMat> witness;
};

MoveResult apply_matrix_move(const IntMat& m, const MatrixMoveSpec& move);

// The matrix move matching a diagram move on the given matrix.
MatrixMoveSpec to_matrix_move(const IntMat& m, const BraidMoveSpec& move);

// True iff the braid-level and matrix-level paths land on the same matrix.
bool verify_commuting(const ClosedBraidDiagram& d, const BraidMoveSpec& move);

bool is_unimodular(const IntMat& p);

// Stabilization assembled the long way: a tube pair (two parallel bands with
// opposite twists) is inserted at the stabilization site, then the basis
// change C_new = X_1 - X_2 with the position swap turns the second band into
// the new circle. Returns the tube matrix and the congruence; conjugating
// the former by the latter reproduces the stabilization surgery.
struct TubeStabilization {
    IntMat tube;
    IntMat congruence;
};
TubeStabilization m2_stabilize_via_tube(const IntMat& m, int sign);

// CLI grammar: r2-insert:<col>:<height>:<+|->, r2-delete:<height>,
// stab:<+|->, destab, conj, r3:<height>:<l|r>.
BraidMoveSpec parse_move(const std::string& text);

}  // namespace laundry
