#pragma once

#include <vector>

#include "laundry/braid.hpp"
#include "laundry/linking.hpp"
#include "laundry/matrix.hpp"

namespace laundry {

// N: 1 on band-band positions (including the diagonal), 0 elsewhere.
IntMat correction_matrix(const std::vector<CycleLabel>& order);
IntMat correction_matrix(const ClosedBraidDiagram& d);

// Antisymmetric intersection form of the cycle basis on the orientable
// surface (the one with the extra twisted band at the head of the laundry
// line). Entries lie in {-1,0,1}; the support is exactly where M - N is odd.
IntMat intersection_form(const ClosedBraidDiagram& d);

// The Seifert pairing on the orientable surface: (M - N + A) / 2. Satisfies
// M' + M'^T + N = M exactly.
IntMat seifert_pairing(const ClosedBraidDiagram& d);

// Delete the last row and column (the first circle); [[0]] becomes empty.
IntMat gl_form(const IntMat& linking);

// The Seifert pairing with the last row and column deleted.
IntMat seifert_matrix(const ClosedBraidDiagram& d);

// Append a row/column equal to minus the sum of the zero-diagonal rows,
// recovering the linking matrix a GL form came from. Validates the result.
IntMat restore_from_gl(const IntMat& f);

// F = S + S^T + N with N reduced by its last row/column.
IntMat gl_from_seifert(const IntMat& s, const std::vector<CycleLabel>& order);

namespace detail {

// Layout of the extra band's strand clusters at the head of the laundry
// line; used to fix the residual sign conventions once, by test.
struct TLayout {
    bool exit_first = true;   // exit cluster sits left of the entry cluster
    bool entry_ascending = true;  // entry cluster in laundry order left-to-right
    int t_sign = -1;          // sign of each crossing inside the extra band
};

IntMat intersection_form_with_layout(const ClosedBraidDiagram& d, const TLayout& layout);

}  // namespace detail

}  // namespace laundry
