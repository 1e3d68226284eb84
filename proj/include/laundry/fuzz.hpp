#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laundry/braid.hpp"
#include "laundry/rng.hpp"

namespace laundry {

// A random move applicable to d. Biased towards shrinking moves once the
// word grows past a small cap so move sequences stay bounded.
BraidMoveSpec random_applicable_move(Rng& rng, const ClosedBraidDiagram& d);

struct FuzzReport {
    uint64_t seed = 0;
    int cases = 0;
    struct Check {
        std::string name;
        int passed = 0;
    };
    std::vector<Check> checks;
    std::vector<std::string> failures;
    bool all_pass() const { return failures.empty(); }
    std::string to_string() const;
};

// Runs the whole property suite on `cases` seeded random diagrams:
// round-trips, commutation invariance of the encoding, the matrix-tower
// identities, the Seifert/Burau cross-check, move commutation with
// witnesses, and the chord-model invariants. Deterministic per seed.
FuzzReport run_fuzz(uint64_t seed, int cases);

}  // namespace laundry
