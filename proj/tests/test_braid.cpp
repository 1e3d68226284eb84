#include <doctest.h>

#include "laundry/braid.hpp"
#include "laundry/errors.hpp"
#include "laundry/rng.hpp"

using namespace laundry;

namespace {
ClosedBraidDiagram diag(const char* s) { return ClosedBraidDiagram(parse_braid(s)); }
}

TEST_CASE("parse_braid reads the word grammar") {
    BraidWord w = parse_braid("1:");
    CHECK(w.strands == 1);
    CHECK(w.letters.empty());

    w = parse_braid("4: 3 -2 1 -2 1");
    CHECK(w.strands == 4);
    REQUIRE(w.letters.size() == 5);
    CHECK(w.letters[0] == BraidLetter{3, 1});
    CHECK(w.letters[1] == BraidLetter{2, -1});
    CHECK(w.letters[2] == BraidLetter{1, 1});
    CHECK(w.letters[3] == BraidLetter{2, -1});
    CHECK(w.letters[4] == BraidLetter{1, 1});

    w = parse_braid("2: 1 1 1");
    CHECK(w.strands == 2);
    CHECK(w.letters == std::vector<BraidLetter>{{1, 1}, {1, 1}, {1, 1}});

    CHECK(parse_braid("  3 :  1   2 ").letters.size() == 2);
}

TEST_CASE("parse_braid rejects malformed input") {
    CHECK_THROWS_AS(parse_braid("2: x"), ParseError);
    CHECK_THROWS_AS(parse_braid("2: 0"), ParseError);
    CHECK_THROWS_AS(parse_braid("2: 2"), ParseError);
    CHECK_THROWS_AS(parse_braid("0:"), ParseError);
    CHECK_THROWS_AS(parse_braid("2 1 1"), ParseError);
    CHECK_THROWS_AS(parse_braid(""), ParseError);
}

TEST_CASE("format_braid inverts parse_braid") {
    CHECK(format_braid({1, {}}) == "1:");
    CHECK(format_braid({2, {{1, 1}}}) == "2: 1");
    CHECK(format_braid(parse_braid("4: 3 -2 1 -2 1")) == "4: 3 -2 1 -2 1");

    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        BraidWord w = random_word(rng);
        CHECK(parse_braid(format_braid(w)) == w);
    }
}

TEST_CASE("b0 normal form") {
    CHECK(format_braid(diag("4: 1 3 1").word()) == "4: 1 1 3");
    CHECK(format_braid(diag("3: 1 2").word()) == "3: 1 2");
    CHECK(format_braid(diag("4: 3 1").word()) == "4: 1 3");
}

TEST_CASE("b0 normal form is idempotent and constant on commutation orbits") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        BraidWord w = random_word(rng);
        ClosedBraidDiagram d(w);
        CHECK(ClosedBraidDiagram(d.word()) == d);
        // one distant swap
        for (int j = 0; j + 1 < (int)w.letters.size(); ++j)
            if (std::abs(w.letters[j].column - w.letters[j + 1].column) >= 2) {
                BraidWord v = w;
                std::swap(v.letters[j], v.letters[j + 1]);
                CHECK(ClosedBraidDiagram(v) == d);
                break;
            }
    }
}

TEST_CASE("component_count") {
    CHECK(component_count(parse_braid("2: 1")) == 1);
    CHECK(component_count(parse_braid("2:")) == 2);
    CHECK(component_count(parse_braid("3: 1 1 2 2")) == 3);
}

TEST_CASE("component_count is invariant under every move") {
    Rng rng(13);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        ClosedBraidDiagram d(random_word(rng));
        int c = component_count(d.word());
        auto try_move = [&](const BraidMoveSpec& mv) {
            ClosedBraidDiagram moved;
            try {
                moved = apply_braid_move(d, mv);
            } catch (const MoveError&) {
                return;
            }
            CHECK(component_count(moved.word()) == c);
            ++checked;
        };
        if (d.strands() >= 2)
            try_move(R2Insert{1 + (int)rng.below(d.strands() - 1),
                              1 + (int)rng.below(d.crossings() + 1), rng.sign()});
        try_move(Stabilize{rng.sign()});
        try_move(Destabilize{});
        try_move(ConjugateRotate{});
        for (int h = 1; h <= d.crossings(); ++h) {
            try_move(R2Delete{h});
            try_move(R3{h, 'l'});
            try_move(R3{h, 'r'});
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("braid moves") {
    CHECK(format_braid(apply_braid_move(diag("1:"), Stabilize{1}).word()) == "2: 1");
    CHECK(apply_braid_move(diag("2: 1 1 1"), ConjugateRotate{}) == diag("2: 1 1 1"));
    CHECK(format_braid(apply_braid_move(diag("3: 1 2 1"), R3{1, 'r'}).word()) == "3: 2 1 2");
    CHECK(format_braid(apply_braid_move(diag("3: 2 1 2"), R3{1, 'l'}).word()) == "3: 1 2 1");

    CHECK_THROWS_AS(apply_braid_move(diag("2: 1 1"), R2Delete{1}), MoveError);
    CHECK_THROWS_AS(apply_braid_move(diag("3: 1 2"), R3{1, 'r'}), MoveError);
    CHECK_THROWS_AS(apply_braid_move(diag("1:"), Destabilize{}), MoveError);
    CHECK_THROWS_AS(apply_braid_move(diag("2: 1 1"), Destabilize{}), MoveError);
}

TEST_CASE("moves undo exactly") {
    Rng rng(14);
    for (int i = 0; i < 100; ++i) {
        ClosedBraidDiagram d(random_word(rng));
        if (d.strands() >= 2) {
            int col = 1 + (int)rng.below(d.strands() - 1);
            int h = 1 + (int)rng.below(d.crossings() + 1);
            ClosedBraidDiagram ins = apply_braid_move(d, R2Insert{col, h, 1});
            bool undone = false;
            for (int hh = 1; hh <= ins.crossings() && !undone; ++hh) {
                try {
                    if (apply_braid_move(ins, R2Delete{hh}) == d) undone = true;
                } catch (const MoveError&) {}
            }
            CHECK(undone);
        }
        CHECK(apply_braid_move(apply_braid_move(d, Stabilize{-1}), Destabilize{}) == d);
        for (int h = 1; h <= d.crossings(); ++h) {
            try {
                ClosedBraidDiagram moved = apply_braid_move(d, R3{h, 'r'});
                // the rewritten pattern starts at the same height, mirrored
                CHECK(apply_braid_move(moved, R3{h, 'l'}) == d);
                break;
            } catch (const MoveError&) {}
        }
    }
}

TEST_CASE("rotation cycles through the whole word when no distant commutation exists") {
    // On at most three strands every pair of letters interacts, so the
    // canonical form cannot shuffle the seam and |word| rotations are exact.
    Rng rng(15);
    for (int i = 0; i < 100; ++i) {
        BraidWord w = random_word(rng, 3, 10);
        ClosedBraidDiagram d(w);
        if (!d.crossings()) continue;
        ClosedBraidDiagram cur = d;
        for (int k = 0; k < d.crossings(); ++k) cur = apply_braid_move(cur, ConjugateRotate{});
        CHECK(cur == d);
    }
}
