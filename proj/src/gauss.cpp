#include "laundry/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "laundry/errors.hpp"

namespace laundry {

int CircleWithChords::position_of(int chord, bool second) const {
    for (int i = 0; i < (int)seq.size(); ++i)
        if (seq[i].chord == chord && seq[i].second == second) return i;
    throw InternalError("chord endpoint missing from the sequence");
}

std::string token(const ChordEndpoint& e) {
    return (e.second ? "b" : "a") + std::to_string(e.chord);
}

std::string to_text(const CircleWithChords& c) {
    std::ostringstream os;
    os << c.chords << '\n';
    for (size_t i = 0; i < c.seq.size(); ++i) {
        if (i) os << ' ';
        os << token(c.seq[i]);
    }
    os << '\n';
    return os.str();
}

CircleWithChords chords_from_text(const std::string& text) {
    std::istringstream is(text);
    long long n;
    if (!(is >> n) || n < 0) throw ParseError("expected a chord count");
    CircleWithChords c;
    c.chords = (int)n;
    std::string tok;
    for (int i = 0; i < 2 * (int)n + 2; ++i) {
        if (!(is >> tok)) throw ParseError("endpoint tokens missing");
        if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'b'))
            throw ParseError("malformed endpoint token '" + tok + "'");
        for (size_t k = 1; k < tok.size(); ++k)
            if (!std::isdigit((unsigned char)tok[k]))
                throw ParseError("malformed endpoint token '" + tok + "'");
        int chord = std::atoi(tok.c_str() + 1);
        if (chord > n) throw ParseError("endpoint token out of range '" + tok + "'");
        c.seq.push_back({chord, tok[0] == 'b'});
    }
    if (is >> tok) throw ParseError("trailing tokens after endpoint sequence");
    // structural sanity
    std::vector<int> seen(2 * (n + 1), 0);
    for (const auto& e : c.seq) ++seen[2 * e.chord + (e.second ? 1 : 0)];
    for (int v : seen)
        if (v != 1) throw ParseError("every endpoint must appear exactly once");
    if (c.seq.front() != ChordEndpoint{0, false} || c.seq.back() != ChordEndpoint{0, true})
        throw ParseError("sequence must start at a0 and end at b0");
    int prev_a = 0;
    for (int i = 1; i <= n; ++i) {
        int p = c.position_of(i, false);
        if (p < prev_a) throw ParseError("first endpoints must be in index order");
        if (c.position_of(i, true) < p) throw ParseError("a_i must precede b_i");
        prev_a = p;
    }
    return c;
}

CircleWithChords circle_with_chords(const ClosedBraidDiagram& d) {
    const BraidWord& w = d.word();
    auto order = laundry_order(d);
    int m = (int)order.size();
    int n = w.strands;

    // chord index per cycle = 1 + laundry position
    std::vector<int> chord_of_circle(n + 1, 0);
    std::vector<int> chord_of_letter(w.letters.size(), 0);
    for (int i = 0; i < m; ++i) {
        if (order[i].is_circle) chord_of_circle[order[i].circle] = i + 1;
        else chord_of_letter[order[i].height - 1] = i + 1;
    }

    std::vector<std::vector<int>> even_block(n + 2), odd_block(n + 2);
    for (int i = 0; i < (int)w.letters.size(); ++i) {
        even_block[even_circle_of(w.letters[i].column)].push_back(i);
        odd_block[odd_circle_of(w.letters[i].column)].push_back(i);
    }

    CircleWithChords c;
    c.chords = m;
    c.labels = order;
    c.seq.push_back({0, false});
    for (int e = 2; e <= n; e += 2) {
        c.seq.push_back({chord_of_circle[e], false});
        for (int idx : even_block[e]) c.seq.push_back({chord_of_letter[idx], false});
        c.seq.push_back({chord_of_circle[e], true});
    }
    for (int o = n % 2 ? n : n - 1; o >= 1; o -= 2) {
        c.seq.push_back({chord_of_circle[o], false});
        auto& blk = odd_block[o];
        for (auto it = blk.rbegin(); it != blk.rend(); ++it)  // traveling down: decreasing height
            c.seq.push_back({chord_of_letter[*it], true});
        c.seq.push_back({chord_of_circle[o], true});
    }
    c.seq.push_back({0, true});
    return c;
}

CircleWithChords remove_chords(const CircleWithChords& c, const std::set<int>& drop) {
    std::vector<int> renumber(c.chords + 1, 0);
    int next = 0;
    for (int i = 1; i <= c.chords; ++i)
        if (!drop.count(i)) renumber[i] = ++next;
    CircleWithChords out;
    out.chords = next;
    for (const auto& e : c.seq) {
        if (e.chord != 0 && drop.count(e.chord)) continue;
        out.seq.push_back({e.chord == 0 ? 0 : renumber[e.chord], e.second});
    }
    if (!c.labels.empty())
        for (int i = 1; i <= c.chords; ++i)
            if (!drop.count(i)) out.labels.push_back(c.labels[i - 1]);
    return out;
}

OverlapGraph overlap_graph(const CircleWithChords& c) {
    OverlapGraph g;
    g.vertices = c.chords;
    std::vector<int> a(c.chords + 1), b(c.chords + 1);
    for (int i = 1; i <= c.chords; ++i) {
        a[i] = c.position_of(i, false);
        b[i] = c.position_of(i, true);
    }
    for (int i = 1; i <= c.chords; ++i)
        for (int j = i + 1; j <= c.chords; ++j)
            if (a[i] < a[j] && a[j] < b[i] && b[i] < b[j]) g.edges.push_back({i, j});
    return g;
}

std::vector<JEdge> interior_first_edges(const CircleWithChords& c) {
    OverlapGraph g = overlap_graph(c);
    std::vector<int> comp(c.chords + 1, 0);
    int ncomp = 0;
    std::vector<std::vector<int>> adj(c.chords + 1);
    for (auto [i, j] : g.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (int i = 1; i <= c.chords; ++i) {
        if (comp[i]) continue;
        ++ncomp;
        std::vector<int> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v])
                if (!comp[u]) { comp[u] = ncomp; stack.push_back(u); }
        }
    }
    std::vector<JEdge> edges;
    for (int k = 1; k <= ncomp; ++k) {
        int min_chord = 0;
        for (int i = 1; i <= c.chords; ++i)
            if (comp[i] == k) { min_chord = i; break; }
        if (min_chord == 0 || comp[1] == k) continue;
        int p = c.position_of(min_chord, false);
        edges.push_back({p - 1, p});
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

TurnAssignment braid_turns(const CircleWithChords& c) {
    TurnAssignment t;
    for (const JEdge& e : interior_first_edges(c)) t[e] = 0;
    return t;
}

EquivalenceCertificate certificate(const CircleWithChords& c, const IntMat& augmented,
                                   const TurnAssignment& t) {
    if (augmented.rows() != c.chords + 1)
        throw std::invalid_argument("certificate: matrix size must be chord count plus one");
    for (int j = 0; j < augmented.cols(); ++j)
        if (augmented.at(0, j) != 0 || augmented.at(j, 0) != 0)
            throw std::invalid_argument("certificate: the outer cycle row must be zero");
    auto edges = interior_first_edges(c);
    if (edges.size() != t.size())
        throw std::invalid_argument("certificate: turn keys must be the interior first-edges");
    for (const JEdge& e : edges)
        if (!t.count(e))
            throw std::invalid_argument("certificate: turn keys must be the interior first-edges");
    return {c, augmented, t};
}

EquivalenceCertificate certificate(const ClosedBraidDiagram& d) {
    CircleWithChords c = circle_with_chords(d);
    IntMat m = encode(d);
    IntMat aug(m.rows() + 1, m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) aug.at(i + 1, j + 1) = m.at(i, j);
    return certificate(c, aug, braid_turns(c));
}

bool certificates_equal(const EquivalenceCertificate& x, const EquivalenceCertificate& y) {
    return x.graph == y.graph && x.matrix == y.matrix && x.turns == y.turns;
}

bool condition6_check(const CircleWithChords& c) {
    std::vector<long long> a(c.chords + 1), b(c.chords + 1);
    for (int i = 1; i <= c.chords; ++i) {
        a[i] = c.position_of(i, false);
        b[i] = c.position_of(i, true);
    }
    auto interleaved = [&](int i, int j) {
        return (a[i] < a[j] && a[j] < b[i] && b[i] < b[j]) ||
               (a[j] < a[i] && a[i] < b[j] && b[j] < b[i]);
    };
    // Semicircle crossing point of chords i and j along the x-axis:
    // (a_i b_i - a_j b_j) / ((a_i + b_i) - (a_j + b_j)), exact rational.
    for (int i = 1; i <= c.chords; ++i) {
        std::vector<int> met;
        for (int j = i + 1; j <= c.chords; ++j)
            if (interleaved(i, j)) met.push_back(j);
        auto cross_less = [&](int j, int k) {
            __int128 pj = __int128(a[i]) * b[i] - __int128(a[j]) * b[j];
            __int128 qj = (a[i] + b[i]) - (a[j] + b[j]);
            __int128 pk = __int128(a[i]) * b[i] - __int128(a[k]) * b[k];
            __int128 qk = (a[i] + b[i]) - (a[k] + b[k]);
            if (qj < 0) { pj = -pj; qj = -qj; }
            if (qk < 0) { pk = -pk; qk = -qk; }
            return pj * qk < pk * qj;
        };
        for (size_t x = 0; x < met.size(); ++x)
            for (size_t y = x + 1; y < met.size(); ++y)
                if (cross_less(met[y], met[x])) return false;
    }
    return true;
}

}  // namespace laundry
