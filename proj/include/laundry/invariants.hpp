#pragma once

#include <string>
#include <vector>

#include "laundry/braid.hpp"
#include "laundry/matrix.hpp"
#include "laundry/poly.hpp"

namespace laundry {

// |det(S + S^T)|, exactly; 1 for the empty matrix.
long long link_determinant(const IntMat& seifert);

// Signature of S + S^T by exact congruence diagonalization.
int link_signature(const IntMat& seifert);

// det(S - t S^T), unit-normalized; 1 for the empty matrix, 0 if singular.
LaurentPoly alexander(const IntMat& seifert);

// Independent oracle: the Alexander polynomial of the closure through the
// reduced Burau representation, det(B(w) - I) = units * Delta * (1+t+...+t^{n-1}).
LaurentPoly alexander_oracle(const BraidWord& w);

struct InvarianceStep {
    std::string move;
    long long det = 0;
    long long abs_signature = 0;
    LaurentPoly alex;
};

struct InvarianceReport {
    bool constant = true;
    std::vector<InvarianceStep> steps;  // steps[0] is the starting diagram
    std::vector<std::string> changes;
};

// Applies the moves in order, recomputing (determinant, |signature|,
// normalized Alexander) after each; any change is recorded.
InvarianceReport invariance_check(const ClosedBraidDiagram& d,
                                  const std::vector<BraidMoveSpec>& moves);

}  // namespace laundry
