#pragma once

#include <string>
#include <vector>

#include "laundry/braid.hpp"
#include "laundry/matrix.hpp"

namespace laundry {

// One basis cycle of the spanning surface: a Seifert-circle band or a
// crossing band, identified by the crossing's height and column.
struct CycleLabel {
    bool is_circle = true;
    int circle = 0;  // circle index, 1..n (circles only)
    int height = 0;  // crossing height in the canonical word (bands only)
    int column = 0;  // crossing column (bands only)

    static CycleLabel circle_label(int i) { return {true, i, 0, 0}; }
    static CycleLabel band_label(int height, int column) { return {false, 0, height, column}; }

    bool operator==(const CycleLabel&) const = default;
};

// Column c lies between circles c and c+1; exactly one of those is even.
inline int even_circle_of(int column) { return column % 2 == 0 ? column : column + 1; }
inline int odd_circle_of(int column) { return column % 2 == 0 ? column + 1 : column; }

// The laundry ordering of the surface cycles: even circles ascending, each
// followed by the bands whose first feet lie on it (by increasing height),
// then the odd circles in decreasing order ending at circle 1.
std::vector<CycleLabel> laundry_order(const ClosedBraidDiagram& d);

// The linking matrix of the diagram over the laundry order: diagonal is the
// crossing sign for bands and zero for circles, a band in column c pairs -1
// with circle c and +1 with circle c+1, and two bands in adjacent columns
// pair 1 exactly when the left-column band sits above the right-column one.
IntMat encode(const ClosedBraidDiagram& d);

struct ValidityReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

// Checks every linking-matrix rule plus decode-consistency: the reconstructed
// diagram must reproduce the matrix exactly.
ValidityReport validate(const IntMat& m);

// Inverse of encode; requires validate(m) to pass.
ClosedBraidDiagram decode(const IntMat& m);

namespace detail {

// Structural view of a valid linking matrix, shared by decode and the
// matrix-level moves: which positions are circles, and each band's column,
// sign and canonical height recovered from the order constraints.
struct MatrixStructure {
    int n = 0;  // circles
    std::vector<int> circle_pos;    // position of circle i at circle_pos[i-1]
    std::vector<int> band_pos;      // band positions ascending
    std::vector<int> band_column;   // parallel to band_pos
    std::vector<long long> band_sign;
    std::vector<int> band_height;   // canonical heights, 1-based
};

// Returns violations; on success fills the structure.
std::vector<std::string> analyze(const IntMat& m, MatrixStructure& out);

}  // namespace detail

}  // namespace laundry
