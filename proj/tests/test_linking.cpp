#include <doctest.h>

#include "fig3.hpp"
#include "laundry/errors.hpp"
#include "laundry/linking.hpp"
#include "laundry/rng.hpp"

using namespace laundry;

namespace {
ClosedBraidDiagram diag(const char* s) { return ClosedBraidDiagram(parse_braid(s)); }
}

TEST_CASE("laundry order") {
    auto o = laundry_order(diag("1:"));
    REQUIRE(o.size() == 1);
    CHECK(o[0] == CycleLabel::circle_label(1));

    o = laundry_order(diag("2: 1"));
    REQUIRE(o.size() == 3);
    CHECK(o[0] == CycleLabel::circle_label(2));
    CHECK(o[1] == CycleLabel::band_label(1, 1));
    CHECK(o[2] == CycleLabel::circle_label(1));

    o = laundry_order(diag(fig3_word()));
    REQUIRE(o.size() == 9);
    CHECK(o[0] == CycleLabel::circle_label(2));
    CHECK(o[1] == CycleLabel::band_label(2, 2));
    CHECK(o[2] == CycleLabel::band_label(3, 1));
    CHECK(o[3] == CycleLabel::band_label(4, 2));
    CHECK(o[4] == CycleLabel::band_label(5, 1));
    CHECK(o[5] == CycleLabel::circle_label(4));
    CHECK(o[6] == CycleLabel::band_label(1, 3));
    CHECK(o[7] == CycleLabel::circle_label(3));
    CHECK(o[8] == CycleLabel::circle_label(1));
}

TEST_CASE("encode small diagrams") {
    IntMat m = encode(diag("1:"));
    CHECK(m.rows() == 1);
    CHECK(m.at(0, 0) == 0);

    m = encode(diag("2: 1"));
    IntMat want = mat_from_text("3\n0 1 0\n1 1 -1\n0 -1 0\n");
    CHECK(m == want);
}

TEST_CASE("encode reproduces the reference 9x9 matrix bit-exactly") {
    CHECK(encode(diag(fig3_word())) == fig3_matrix());
}

TEST_CASE("circle rows of the reference matrix sum to zero") {
    IntMat m = fig3_matrix();
    for (int j = 0; j < 9; ++j) {
        long long s = 0;
        for (int i : {0, 5, 7, 8}) s += m.at(i, j);
        CHECK(s == 0);
    }
}

TEST_CASE("validate") {
    CHECK(validate(fig3_matrix()).valid());
    CHECK(validate(mat_from_text("1\n0\n")).valid());

    ValidityReport r = validate(mat_from_text("1\n1\n"));
    REQUIRE_FALSE(r.valid());
    CHECK(r.violations.front() == "no circle rows / band with no L1 circle entries");

    IntMat bad = fig3_matrix();
    bad.at(0, 1) = 5;
    CHECK_FALSE(validate(bad).valid());

    bad = fig3_matrix();
    bad.at(2, 8) = 1;  // breaks the band's circle pairing
    bad.at(8, 2) = 1;
    CHECK_FALSE(validate(bad).valid());
}

TEST_CASE("decode") {
    CHECK(format_braid(decode(mat_from_text("1\n0\n")).word()) == "1:");
    CHECK(format_braid(decode(mat_from_text("3\n0 1 0\n1 1 -1\n0 -1 0\n")).word()) == "2: 1");
    CHECK(decode(fig3_matrix()) == diag(fig3_word()));
    CHECK_THROWS_AS(decode(mat_from_text("1\n1\n")), ValidationError);
}

TEST_CASE("round trips on seeded random diagrams") {
    Rng rng(20260810);
    for (int i = 0; i < 500; ++i) {
        ClosedBraidDiagram d(random_word(rng));
        IntMat m = encode(d);
        CHECK(m.rows() == d.strands() + d.crossings());
        CHECK(m.is_symmetric());
        CHECK(validate(m).valid());
        CHECK(decode(m) == d);
        CHECK(encode(decode(m)) == m);
    }
}

TEST_CASE("encoding only reads commutation-invariant data") {
    Rng rng(21);
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
        CHECK(encode(ClosedBraidDiagram(v)) == encode(ClosedBraidDiagram(w)));
        ++swaps;
    }
}

TEST_CASE("matrix text format round trips") {
    IntMat m = fig3_matrix();
    CHECK(mat_from_text(to_text(m)) == m);
    CHECK(to_text(IntMat()) == "0\n");
    CHECK(mat_from_text("0\n").empty());
    CHECK_THROWS_AS(mat_from_text("2\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(mat_from_text("2\n1 2 3 4 5\n"), ParseError);
    CHECK_THROWS_AS(mat_from_text("x"), ParseError);
}
