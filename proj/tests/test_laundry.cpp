#include <doctest.h>

#include <sstream>

#include "fig3.hpp"
#include "laundry/gauss.hpp"
#include "laundry/rng.hpp"
#include "laundry/svg.hpp"

using namespace laundry;

namespace {

ClosedBraidDiagram diag(const char* s) { return ClosedBraidDiagram(parse_braid(s)); }

std::string tokens(const CircleWithChords& c) {
    std::ostringstream os;
    for (size_t i = 0; i < c.seq.size(); ++i) {
        if (i) os << ' ';
        os << token(c.seq[i]);
    }
    return os.str();
}

std::vector<int> twisted_chords(const CircleWithChords& c) {
    std::vector<int> out;
    for (int i = 1; i <= c.chords; ++i)
        if (!c.labels[i - 1].is_circle) out.push_back(i);
    return out;
}

}  // namespace

TEST_CASE("chords of the unknot diagram") {
    CircleWithChords c = circle_with_chords(diag("1:"));
    CHECK(c.chords == 1);
    CHECK(tokens(c) == "a0 a1 b1 b0");
}

TEST_CASE("chord endpoints of the reference diagram follow the laundry order") {
    CircleWithChords c = circle_with_chords(diag(fig3_word()));
    CHECK(c.chords == 9);
    CHECK(twisted_chords(c) == std::vector<int>{2, 3, 4, 5, 7});
    CHECK(tokens(c) ==
          "a0 a1 a2 a3 a4 a5 b1 a6 a7 b6 a8 b4 b2 b7 b8 a9 b5 b3 b9 b0");
    CHECK(c.labels == laundry_order(diag(fig3_word())));
}

TEST_CASE("overlap graph") {
    // removing the twisted-band chords leaves four isolated circle chords
    CircleWithChords c = circle_with_chords(diag(fig3_word()));
    CircleWithChords reduced = remove_chords(c, {2, 3, 4, 5, 7});
    OverlapGraph g = overlap_graph(reduced);
    CHECK(g.vertices == 4);
    CHECK(g.edges.empty());

    CHECK(overlap_graph(chords_from_text("2\na0 a1 a2 b2 b1 b0\n")).edges.empty());
    CHECK(overlap_graph(chords_from_text("2\na0 a1 a2 b1 b2 b0\n")).edges ==
          std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("containment and overlap exclude each other") {
    Rng rng(61);
    for (int k = 0; k < 50; ++k) {
        CircleWithChords c = circle_with_chords(ClosedBraidDiagram(random_word(rng)));
        OverlapGraph g = overlap_graph(c);
        for (auto [i, j] : g.edges) {
            CHECK(i < j);
            int ai = c.position_of(i, false), bi = c.position_of(i, true);
            int aj = c.position_of(j, false), bj = c.position_of(j, true);
            CHECK_FALSE((ai < aj && bj < bi));  // not nested
            CHECK_FALSE((aj < ai && bi < bj));
        }
    }
}

TEST_CASE("interior first-edges") {
    CHECK(interior_first_edges(circle_with_chords(diag("1:"))).empty());
    CHECK(interior_first_edges(chords_from_text("2\na0 a1 a2 b1 b2 b0\n")).empty());

    CircleWithChords reduced =
        remove_chords(circle_with_chords(diag(fig3_word())), {2, 3, 4, 5, 7});
    auto edges = interior_first_edges(reduced);
    REQUIRE(edges.size() == 3);
    // the middle one is the seam between the second and third circle chords
    CHECK(token(reduced.seq[edges[1].first]) == "b2");
    CHECK(token(reduced.seq[edges[1].second]) == "a3");
}

TEST_CASE("braid surfaces turn nowhere") {
    CHECK(braid_turns(circle_with_chords(diag("1:"))).empty());
    CircleWithChords c = circle_with_chords(diag(fig3_word()));
    auto t = braid_turns(c);
    CHECK(t.size() == interior_first_edges(c).size());
    for (const auto& [edge, v] : t) CHECK(v == 0);

    CircleWithChords reduced = remove_chords(c, {2, 3, 4, 5, 7});
    auto tr = braid_turns(reduced);
    CHECK(tr.size() == 3);
    for (const auto& [edge, v] : tr) CHECK(v == 0);
}

TEST_CASE("certificates") {
    EquivalenceCertificate a = certificate(diag("2: 1"));
    EquivalenceCertificate b = certificate(diag("2: 1"));
    CHECK(certificates_equal(a, b));

    // a twist flip shows up on the band diagonal
    EquivalenceCertificate m = certificate(diag("2: -1"));
    CHECK_FALSE(certificates_equal(a, m));
    CHECK(m.graph == a.graph);

    // same graph and matrix, one turn flipped: the four-circle diagram has
    // three interior first-edges
    EquivalenceCertificate c4 = certificate(diag("4:"));
    REQUIRE(c4.turns.size() == 3);
    TurnAssignment flipped = c4.turns;
    flipped.begin()->second = 1;
    EquivalenceCertificate c4f = certificate(c4.graph, c4.matrix, flipped);
    CHECK_FALSE(certificates_equal(c4, c4f));

    // the augmented matrix carries a zero first row and column
    for (int j = 0; j < c4.matrix.cols(); ++j) {
        CHECK(c4.matrix.at(0, j) == 0);
        CHECK(c4.matrix.at(j, 0) == 0);
    }
    CHECK_THROWS(certificate(c4.graph, c4.matrix, TurnAssignment{}));
}

TEST_CASE("certificate equality is an equivalence relation on generated certificates") {
    Rng rng(62);
    std::vector<EquivalenceCertificate> cs;
    for (int i = 0; i < 12; ++i) cs.push_back(certificate(ClosedBraidDiagram(random_word(rng))));
    for (const auto& x : cs) CHECK(certificates_equal(x, x));
    for (const auto& x : cs)
        for (const auto& y : cs) {
            CHECK(certificates_equal(x, y) == certificates_equal(y, x));
            for (const auto& z : cs)
                if (certificates_equal(x, y) && certificates_equal(y, z))
                    CHECK(certificates_equal(x, z));
        }
}

TEST_CASE("meeting order along a chord in the canonical drawing") {
    CHECK(condition6_check(circle_with_chords(diag("1:"))));
    CHECK(condition6_check(chords_from_text("2\na0 a1 a2 b1 b2 b0\n")));
    // three mutually interleaved chords; frozen value under the semicircle drawing
    CHECK(condition6_check(chords_from_text("3\na0 a1 a2 a3 b1 b2 b3 b0\n")));

    // exploratory only: tally the braid-derived diagrams that pass; the
    // drawing is canonical but nothing pins the answer, so assert stability
    // rather than a value.
    Rng rng(63);
    int pass = 0, total = 0;
    for (int i = 0; i < 40; ++i) {
        CircleWithChords c = circle_with_chords(ClosedBraidDiagram(random_word(rng)));
        bool r1 = condition6_check(c);
        CHECK(r1 == condition6_check(c));
        pass += r1;
        ++total;
    }
    CHECK(total == 40);
    CHECK(pass >= 0);
}

TEST_CASE("chord text format round trips") {
    CircleWithChords c = circle_with_chords(diag(fig3_word()));
    CircleWithChords back = chords_from_text(to_text(c));
    CHECK(back == c);
    CHECK_THROWS(chords_from_text("1\na0 a1 a1 b0\n"));
    CHECK_THROWS(chords_from_text("1\nb0 a1 b1 a0\n"));
}

TEST_CASE("svg rendering mentions every endpoint") {
    CircleWithChords c = circle_with_chords(diag("2: 1"));
    std::string svg = chord_diagram_svg(c);
    CHECK(svg.find("<svg") != std::string::npos);
    for (const auto& e : c.seq) CHECK(svg.find(">" + token(e) + "<") != std::string::npos);
}
