#include "laundry/fuzz.hpp"

#include <sstream>

#include "laundry/errors.hpp"
#include "laundry/forms.hpp"
#include "laundry/gauss.hpp"
#include "laundry/invariants.hpp"
#include "laundry/linking.hpp"
#include "laundry/moves.hpp"

namespace laundry {

BraidMoveSpec random_applicable_move(Rng& rng, const ClosedBraidDiagram& d) {
    const BraidWord& w = d.word();
    int len = (int)w.letters.size();

    std::vector<BraidMoveSpec> shrink, neutral;
    for (int h = 1; h <= len; ++h) {
        try {
            apply_braid_move(d, R2Delete{h});
            shrink.push_back(R2Delete{h});
        } catch (const MoveError&) {}
        for (char dir : {'l', 'r'}) {
            try {
                apply_braid_move(d, R3{h, dir});
                neutral.push_back(R3{h, dir});
            } catch (const MoveError&) {}
        }
    }
    try {
        apply_braid_move(d, Destabilize{});
        shrink.push_back(Destabilize{});
    } catch (const MoveError&) {}
    if (len) neutral.push_back(ConjugateRotate{});

    bool cap = len >= 14 || w.strands >= 7;
    std::vector<BraidMoveSpec> pool;
    if (cap && !shrink.empty()) {
        pool = shrink;
        if (!neutral.empty() && rng.below(3) == 0) pool = neutral;
    } else {
        pool = shrink;
        pool.insert(pool.end(), neutral.begin(), neutral.end());
        if (!cap) {
            if (w.strands >= 2)
                pool.push_back(R2Insert{1 + (int)rng.below(w.strands - 1),
                                        1 + (int)rng.below(len + 1), rng.sign()});
            pool.push_back(Stabilize{rng.sign()});
        }
    }
    if (pool.empty()) pool.push_back(Stabilize{rng.sign()});
    return pool[rng.below(pool.size())];
}

namespace {

// one distant-commutation swap applied to the raw letter sequence
BraidWord random_b0_swap(Rng& rng, const BraidWord& w) {
    std::vector<int> spots;
    for (int i = 0; i + 1 < (int)w.letters.size(); ++i)
        if (std::abs(w.letters[i].column - w.letters[i + 1].column) >= 2) spots.push_back(i);
    BraidWord out = w;
    if (!spots.empty()) {
        int i = spots[rng.below(spots.size())];
        std::swap(out.letters[i], out.letters[i + 1]);
    }
    return out;
}

}  // namespace

std::string FuzzReport::to_string() const {
    std::ostringstream os;
    os << "fuzz seed=" << seed << " cases=" << cases << '\n';
    for (const auto& c : checks) os << c.name << ": " << c.passed << '/' << cases << '\n';
    for (const auto& f : failures) os << "FAIL " << f << '\n';
    if (all_pass()) os << "ALL PASS (" << cases << " cases)\n";
    else os << "FAILED (" << failures.size() << " failures)\n";
    return os.str();
}

FuzzReport run_fuzz(uint64_t seed, int cases) {
    FuzzReport rep;
    rep.seed = seed;
    rep.cases = cases;
    rep.checks = {{"round-trip", 0},  {"b0-invariance", 0},       {"matrix-tower", 0},
                  {"seifert-vs-oracle", 0}, {"determinant-at-minus-one", 0},
                  {"move-commutation", 0},  {"chord-model", 0}};
    auto& rt = rep.checks[0];
    auto& b0 = rep.checks[1];
    auto& cor = rep.checks[2];
    auto& ora = rep.checks[3];
    auto& dm1 = rep.checks[4];
    auto& mvc = rep.checks[5];
    auto& chm = rep.checks[6];

    Rng master(seed);
    for (int k = 0; k < cases; ++k) {
        Rng rng(master.next());
        BraidWord raw = random_word(rng);
        ClosedBraidDiagram d(raw);
        std::string tag = "case " + std::to_string(k) + " [" + format_braid(d.word()) + "] ";
        try {
            IntMat M = encode(d);
            // round trips both ways
            bool ok = validate(M).valid() && decode(M) == d && encode(decode(M)) == M;
            if (ok) ++rt.passed; else rep.failures.push_back(tag + "round-trip");

            // the encoding only reads commutation-invariant data
            BraidWord swapped = random_b0_swap(rng, raw);
            bool inv = b0_normal_form(swapped) == d && encode(b0_normal_form(swapped)) == M;
            if (inv) ++b0.passed; else rep.failures.push_back(tag + "b0-invariance");

            // matrix tower identities
            IntMat N = correction_matrix(d);
            IntMat A = intersection_form(d);
            IntMat P = seifert_pairing(d);
            bool tower = (P + P.transposed() + N == M) && A.is_antisymmetric();
            for (int i = 0; i < M.rows() && tower; ++i)
                for (int j = 0; j < M.cols(); ++j)
                    if ((M.at(i, j) - N.at(i, j) + A.at(i, j)) % 2 != 0) { tower = false; break; }
            IntMat F = gl_form(M);
            tower = tower && restore_from_gl(F) == M && gl_form(restore_from_gl(F)) == F;
            IntMat S = seifert_matrix(d);
            tower = tower && gl_from_seifert(S, laundry_order(d)) == F;
            if (tower) ++cor.passed; else rep.failures.push_back(tag + "matrix-tower");

            // Seifert matrix against the Burau oracle
            LaurentPoly mine = alexander(S);
            LaurentPoly oracle = alexander_oracle(d.word());
            if (mine == oracle) ++ora.passed; else rep.failures.push_back(tag + "seifert-vs-oracle");

            long long det = link_determinant(S);
            long long at_m1 = mine.is_zero() ? 0 : std::abs(mine.eval(-1));
            if (det == at_m1) ++dm1.passed; else rep.failures.push_back(tag + "determinant-at-minus-one");

            // one random applicable move: commutation + witness + invariance
            BraidMoveSpec mv = random_applicable_move(rng, d);
            bool commutes = verify_commuting(d, mv);
            auto res = apply_matrix_move(M, to_matrix_move(M, mv));
            if (res.witness) commutes = commutes && is_unimodular(*res.witness);
            InvarianceReport ir = invariance_check(d, {mv});
            commutes = commutes && ir.constant;
            if (commutes) ++mvc.passed; else rep.failures.push_back(tag + "move-commutation (" + describe(mv) + ")");

            // chord-model invariants
            CircleWithChords c = circle_with_chords(d);
            bool gd = c.chords == d.strands() + d.crossings() &&
                      (int)c.seq.size() == 2 * c.chords + 2;
            for (int i = 1; i <= c.chords && gd; ++i) {
                if (c.position_of(i, false) > c.position_of(i, true)) gd = false;
                if (i > 1 && c.position_of(i - 1, false) > c.position_of(i, false)) gd = false;
            }
            gd = gd && c.labels == laundry_order(d);
            for (const auto& [edge, turn] : braid_turns(c))
                if (turn != 0) gd = false;
            gd = gd && certificates_equal(certificate(d), certificate(d));
            if (gd) ++chm.passed; else rep.failures.push_back(tag + "chord-model");
        } catch (const std::exception& e) {
            rep.failures.push_back(tag + "exception: " + e.what());
        }
    }
    return rep;
}

}  // namespace laundry
