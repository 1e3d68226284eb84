// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fig3.hpp"
#include "laundry/braid.hpp"
#include "laundry/errors.hpp"
#include "laundry/forms.hpp"
#include "laundry/fuzz.hpp"
#include "laundry/gauss.hpp"
#include "laundry/invariants.hpp"
#include "laundry/linking.hpp"
#include "laundry/moves.hpp"
#include "laundry/rng.hpp"

using namespace laundry;

namespace {

int failures = 0;
std::vector<std::string> notes;

void expect(bool ok, const std::string& what) {
    if (!ok) notes.push_back(what);
}

ClosedBraidDiagram diag(const std::string& s) { return ClosedBraidDiagram(parse_braid(s)); }

std::vector<ClosedBraidDiagram> seeded_diagrams(uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<ClosedBraidDiagram> out;
    while ((int)out.size() < count) out.push_back(ClosedBraidDiagram(random_word(rng)));
    return out;
}

void run(int index, const char* label, double budget_seconds, const std::function<void()>& body) {
    notes.clear();
    auto t0 = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_seconds)
        notes.push_back("over time budget (" + std::to_string(budget_seconds) + "s)");
    bool pass = notes.empty();
    if (!pass) ++failures;
    std::printf("criterion %d [%s]: %s (%.3fs)\n", index, label, pass ? "PASS" : "FAIL", secs);
    for (const auto& n : notes) std::printf("    - %s\n", n.c_str());
}

// ---- criterion bodies ----

void golden_matrix() {
    ClosedBraidDiagram d = diag(fig3_word());
    expect(encode(d) == fig3_matrix(), "encode does not reproduce the 9x9 matrix");
    expect(decode(fig3_matrix()) == d, "decode does not return the canonical word");
}

void encode_decode_bijection() {
    auto diagrams = seeded_diagrams(1001, 500);
    for (const auto& d : diagrams) {
        IntMat m = encode(d);
        if (!(decode(m) == d)) {
            expect(false, "decode(encode(d)) != d for " + format_braid(d.word()));
            return;
        }
        if (encode(decode(m)) != m) {
            expect(false, "encode(decode(M)) != M for " + format_braid(d.word()));
            return;
        }
    }
    Rng rng(1002);
    int swaps = 0;
    while (swaps < 100) {
        BraidWord w = random_word(rng);
        std::vector<int> spots;
        for (int j = 0; j + 1 < (int)w.letters.size(); ++j)
            if (std::abs(w.letters[j].column - w.letters[j + 1].column) >= 2) spots.push_back(j);
        if (spots.empty()) continue;
        BraidWord v = w;
        int j = spots[rng.below(spots.size())];
        std::swap(v.letters[j], v.letters[j + 1]);
        if (encode(ClosedBraidDiagram(v)) != encode(ClosedBraidDiagram(w))) {
            expect(false, "encoding changed under a distant commutation of " + format_braid(w));
            return;
        }
        ++swaps;
    }
}

void matrix_tower_identities() {
    for (const auto& d : seeded_diagrams(1001, 500)) {
        IntMat m = encode(d), n = correction_matrix(d);
        IntMat a = intersection_form(d), p = seifert_pairing(d);
        if (!(p + p.transposed() + n == m)) {
            expect(false, "M' + M'^T + N != M for " + format_braid(d.word()));
            return;
        }
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if ((m.at(i, j) - n.at(i, j) + a.at(i, j)) % 2 != 0) {
                    expect(false, "M - N + A has an odd entry for " + format_braid(d.word()));
                    return;
                }
        IntMat f = gl_form(m);
        if (restore_from_gl(f) != m || gl_form(restore_from_gl(f)) != f) {
            expect(false, "GL restore round trip failed for " + format_braid(d.word()));
            return;
        }
        if (gl_from_seifert(seifert_matrix(d), laundry_order(d)) != f) {
            expect(false, "S + S^T + N != F for " + format_braid(d.word()));
            return;
        }
    }
}

void seifert_correctness() {
    std::vector<ClosedBraidDiagram> all = seeded_diagrams(1001, 500);
    for (const char* w : {"1:", "2: 1 1 1", "4: 3 -2 1 -2 1", "2: 1 1", "3: 1 1"})
        all.push_back(diag(w));
    for (const auto& d : all) {
        if (!(alexander(seifert_matrix(d)) == alexander_oracle(d.word()))) {
            expect(false, "Seifert route disagrees with the Burau oracle on " +
                              format_braid(d.word()));
            return;
        }
    }
}

void named_invariants() {
    auto check = [&](const char* w, long long det, long long abs_sig, const char* alex) {
        IntMat s = seifert_matrix(diag(w));
        expect(link_determinant(s) == det, std::string(w) + ": determinant");
        expect(std::abs(link_signature(s)) == abs_sig, std::string(w) + ": signature");
        expect(alexander(s).to_string() == alex, std::string(w) + ": alexander");
    };
    check("1:", 1, 0, "1");
    check("2: 1 1 1", 3, 2, "1 -1 1");
    check("4: 3 -2 1 -2 1", 5, 0, "1 -3 1");
    expect(alexander(seifert_matrix(diag("3: 1 1"))).is_zero(), "split link: alexander");
}

void commuting_square_sweep() {
    // version sweep: every family in its even/odd-circle and twist variants
    struct Fixed {
        const char* word;
        BraidMoveSpec mv;
    };
    std::vector<Fixed> fixed = {
        {"3: 1 2", R2Insert{1, 1, 1}},   {"3: 1 2", R2Insert{1, 1, -1}},
        {"3: 1 2", R2Insert{2, 2, 1}},   {"3: 1 2", R2Insert{2, 2, -1}},
        {"2: 1 -1", R2Delete{1}},        {"2: -1 1", R2Delete{1}},
        {"3: 2 -2", R2Delete{1}},        {"3: -2 2", R2Delete{1}},
        {"2: 1", Stabilize{1}},          {"2: 1", Stabilize{-1}},
        {"3: 2 1", Stabilize{1}},        {"3: 2 1", Stabilize{-1}},
        {"3: 2 1", Destabilize{}},       {"4: 3 2 1", Destabilize{}},
        {"3: 1 2", ConjugateRotate{}},   {"3: -1 2", ConjugateRotate{}},
        {"3: 2 1", ConjugateRotate{}},   {"3: -2 1", ConjugateRotate{}},
        {"3: 1 2 1", R3{1, 'r'}},        {"3: -1 -2 -1", R3{1, 'r'}},
        {"3: 2 1 2", R3{1, 'l'}},        {"3: -2 -1 -2", R3{1, 'l'}},
        {"4: 2 3 2", R3{1, 'r'}},        {"4: -3 -2 -3", R3{1, 'l'}},
    };
    int pairs = 0;
    auto run_pair = [&](const ClosedBraidDiagram& d, const BraidMoveSpec& mv) {
        if (!verify_commuting(d, mv)) {
            expect(false, "commuting square failed: " + format_braid(d.word()) + " with " +
                              describe(mv));
            return false;
        }
        IntMat m = encode(d);
        MoveResult r = apply_matrix_move(m, to_matrix_move(m, mv));
        if (r.witness) {
            if (!is_unimodular(*r.witness) ||
                r.witness->transposed() * m * *r.witness != r.matrix) {
                expect(false, "witness failed: " + format_braid(d.word()) + " with " +
                                  describe(mv));
                return false;
            }
        }
        ++pairs;
        return true;
    };
    for (const auto& f : fixed)
        if (!run_pair(diag(f.word), f.mv)) return;
    Rng rng(1003);
    while (pairs < 200) {
        ClosedBraidDiagram d(random_word(rng));
        if (!run_pair(d, random_applicable_move(rng, d))) return;
    }
}

void move_invariance() {
    Rng seeds(1004);
    for (int d0 = 0; d0 < 20; ++d0) {
        ClosedBraidDiagram start(random_word(seeds));
        for (int s = 0; s < 50; ++s) {
            Rng rng(seeds.next());
            ClosedBraidDiagram cur = start;
            std::vector<BraidMoveSpec> moves;
            for (int k = 0; k < 10; ++k) {
                BraidMoveSpec mv = random_applicable_move(rng, cur);
                moves.push_back(mv);
                cur = apply_braid_move(cur, mv);
            }
            InvarianceReport rep = invariance_check(start, moves);
            if (!rep.constant) {
                expect(false, "invariants drifted from " + format_braid(start.word()) + ": " +
                                  rep.changes.front());
                return;
            }
        }
    }
}

void worked_chord_example() {
    ClosedBraidDiagram d = diag(fig3_word());
    CircleWithChords c = circle_with_chords(d);
    std::vector<int> twisted;
    for (int i = 1; i <= c.chords; ++i)
        if (!c.labels[i - 1].is_circle) twisted.push_back(i);
    expect(twisted == std::vector<int>{2, 3, 4, 5, 7}, "twisted-band chords are not {2,3,4,5,7}");

    OverlapGraph g = overlap_graph(remove_chords(c, {2, 3, 4, 5, 7}));
    expect(g.vertices == 4 && g.edges.empty(), "reduced overlap graph is not 4 vertices, 0 edges");

    for (const auto& [edge, v] : braid_turns(c))
        expect(v == 0, "a braid turn is nonzero");

    EquivalenceCertificate cert = certificate(d);
    expect(certificates_equal(cert, certificate(d)), "certificate is not reflexive");
    expect(!certificates_equal(certificate(diag("2: 1")), certificate(diag("2: -1"))),
           "certificate does not see a twist flip");
}

}  // namespace

int main() {
    run(1, "matrix of the reference diagram, bit-exact", 0.1, golden_matrix);
    run(2, "encode/decode bijection on 500 random diagrams", 5.0, encode_decode_bijection);
    run(3, "matrix tower identities", 5.0, matrix_tower_identities);
    run(4, "Seifert matrices match the Burau oracle", 30.0, seifert_correctness);
    run(5, "named invariant values", 1.0, named_invariants);
    run(6, "commuting squares and unimodular witnesses", 10.0, commuting_square_sweep);
    run(7, "invariants constant along move sequences", 60.0, move_invariance);
    run(8, "chord-diagram worked example", 0.1, worked_chord_example);
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 8 criteria passed\n");
    return failures ? 1 : 0;
}
