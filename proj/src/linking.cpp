#include "laundry/linking.hpp"

#include <algorithm>
#include <sstream>

#include "laundry/errors.hpp"

namespace laundry {

std::vector<CycleLabel> laundry_order(const ClosedBraidDiagram& d) {
    const BraidWord& w = d.word();
    int n = w.strands;
    std::vector<std::vector<int>> block(n + 2);  // even circle -> letter indices, ascending height
    for (int i = 0; i < (int)w.letters.size(); ++i)
        block[even_circle_of(w.letters[i].column)].push_back(i);

    std::vector<CycleLabel> order;
    order.reserve(n + w.letters.size());
    for (int e = 2; e <= n; e += 2) {
        order.push_back(CycleLabel::circle_label(e));
        for (int idx : block[e])
            order.push_back(CycleLabel::band_label(idx + 1, w.letters[idx].column));
    }
    for (int o = n % 2 ? n : n - 1; o >= 1; o -= 2)
        order.push_back(CycleLabel::circle_label(o));
    return order;
}

IntMat encode(const ClosedBraidDiagram& d) {
    auto order = laundry_order(d);
    int m = (int)order.size();
    const BraidWord& w = d.word();
    IntMat M(m, m);
    for (int i = 0; i < m; ++i)
        if (!order[i].is_circle) M.at(i, i) = w.letters[order[i].height - 1].sign;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const CycleLabel &x = order[i], &y = order[j];
            long long v = 0;
            if (!x.is_circle && !y.is_circle) {
                if (std::abs(x.column - y.column) == 1) {
                    const CycleLabel& left = x.column < y.column ? x : y;
                    const CycleLabel& right = x.column < y.column ? y : x;
                    v = left.height > right.height ? 1 : 0;
                }
            } else if (x.is_circle != y.is_circle) {
                const CycleLabel& band = x.is_circle ? y : x;
                const CycleLabel& circ = x.is_circle ? x : y;
                if (circ.circle == band.column) v = -1;
                else if (circ.circle == band.column + 1) v = 1;
            }
            M.at(i, j) = M.at(j, i) = v;
        }
    return M;
}

namespace detail {

std::vector<std::string> analyze(const IntMat& M, MatrixStructure& out) {
    std::vector<std::string> bad;
    auto fail = [&](const std::string& s) { bad.push_back(s); };

    if (!M.square() || M.rows() == 0) {
        fail("matrix must be square and nonempty");
        return bad;
    }
    int m = M.rows();
    if (!M.is_symmetric()) fail("matrix is not symmetric");
    for (int i = 0; i < m; ++i)
        if (M.at(i, i) < -1 || M.at(i, i) > 1) fail("diagonal entry outside {-1,0,1}");
    if (!bad.empty()) return bad;

    std::vector<int> circles, bands;
    for (int i = 0; i < m; ++i)
        (M.at(i, i) == 0 ? circles : bands).push_back(i);
    int n = (int)circles.size();
    if (n == 0) {
        fail("no circle rows / band with no L1 circle entries");
        return bad;
    }
    int e = n / 2;

    // Odd circles occupy the trailing positions; even blocks start at their
    // circle. Numbering: circles[0..e-1] are 2,4,... and the rest descend to 1.
    for (int k = e; k < n; ++k)
        if (circles[k] != m - (n - k)) fail("odd circles must be the trailing positions");
    if (n >= 2 && circles[0] != 0) fail("first position must be the first even circle");
    if (n == 1 && m != 1) fail("a single circle admits no bands");
    if (!bad.empty()) return bad;

    std::vector<int> circle_of_pos(m, 0);  // circle index at a circle position
    out.circle_pos.assign(n, -1);
    for (int k = 0; k < e; ++k) {
        circle_of_pos[circles[k]] = 2 * (k + 1);
        out.circle_pos[2 * (k + 1) - 1] = circles[k];
    }
    for (int k = e; k < n; ++k) {
        int c = 2 * (n - 1 - k) + 1;
        circle_of_pos[circles[k]] = c;
        out.circle_pos[c - 1] = circles[k];
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (M.at(circles[i], circles[j]) != 0) fail("circle-circle entry must be zero");

    // Each band: exactly one -1 and one +1 circle entry, at circles c, c+1.
    out.band_pos = bands;
    out.band_column.assign(bands.size(), 0);
    out.band_sign.assign(bands.size(), 0);
    for (size_t b = 0; b < bands.size(); ++b) {
        int row = bands[b];
        out.band_sign[b] = M.at(row, row);
        int minus = 0, plus = 0, minus_circle = 0, plus_circle = 0;
        bool entries_ok = true;
        for (int k = 0; k < n; ++k) {
            long long v = M.at(row, circles[k]);
            if (v == -1) { ++minus; minus_circle = circle_of_pos[circles[k]]; }
            else if (v == 1) { ++plus; plus_circle = circle_of_pos[circles[k]]; }
            else if (v != 0) entries_ok = false;
        }
        if (!entries_ok || minus != 1 || plus != 1 || plus_circle != minus_circle + 1) {
            fail("band row violates the circle pairing rule");
            continue;
        }
        out.band_column[b] = minus_circle;
    }
    if (!bad.empty()) return bad;

    // Block membership: a band sits in the block of its column's even circle.
    for (size_t b = 0; b < bands.size(); ++b) {
        int pos = bands[b];
        int block_circle = 0;
        for (int k = 0; k < e; ++k)
            if (circles[k] < pos && (k + 1 == e || circles[k + 1] > pos))
                block_circle = 2 * (k + 1);
        if (block_circle == 0 || even_circle_of(out.band_column[b]) != block_circle)
            fail("band placed in the wrong even-circle block");
    }

    for (size_t a = 0; a < bands.size(); ++a)
        for (size_t b = a + 1; b < bands.size(); ++b) {
            long long v = M.at(bands[a], bands[b]);
            int dc = std::abs(out.band_column[a] - out.band_column[b]);
            if (dc == 1) {
                if (v != 0 && v != 1) fail("adjacent-column band entry outside {0,1}");
            } else if (v != 0) {
                fail("band pair in non-adjacent columns must pair zero");
            }
        }
    if (!bad.empty()) return bad;

    // Height order: block position orders bands in the same block; an
    // adjacent-column entry of 1 puts the left-column band above the right
    // one, 0 below. A consistent assignment is a linear extension computed
    // with the same smallest-column greedy rule as the word normal form.
    size_t nb = bands.size();
    std::vector<std::vector<bool>> below(nb, std::vector<bool>(nb, false));
    auto order_pair = [&](size_t low, size_t high) { below[low][high] = true; };
    for (size_t a = 0; a < nb; ++a)
        for (size_t b = a + 1; b < nb; ++b) {
            int ca = out.band_column[a], cb = out.band_column[b];
            int dc = std::abs(ca - cb);
            if (dc == 0) {
                order_pair(a, b);  // same block, matrix order is height order
            } else if (dc == 1) {
                size_t left = ca < cb ? a : b;
                size_t right = ca < cb ? b : a;
                bool same_block = even_circle_of(ca) == even_circle_of(cb);
                bool left_above = M.at(bands[left], bands[right]) == 1;
                if (same_block) {
                    bool matrix_says_a_below = true;  // a < b in matrix order
                    bool l2_says_left_below = !left_above;
                    bool a_is_left = (left == a);
                    if ((a_is_left ? l2_says_left_below : !l2_says_left_below) != matrix_says_a_below) {
                        fail("L2 entry contradicts the block order");
                        continue;
                    }
                    order_pair(a, b);
                } else {
                    left_above ? order_pair(right, left) : order_pair(left, right);
                }
            }
        }
    if (!bad.empty()) return bad;

    out.band_height.assign(nb, 0);
    std::vector<bool> emitted(nb, false);
    for (size_t step = 0; step < nb; ++step) {
        int best = -1;
        for (size_t i = 0; i < nb; ++i) {
            if (emitted[i]) continue;
            bool ready = true;
            for (size_t j = 0; j < nb; ++j)
                if (!emitted[j] && j != i && below[j][i]) { ready = false; break; }
            if (ready && (best < 0 || out.band_column[i] < out.band_column[best])) best = (int)i;
        }
        if (best < 0) {
            fail("L2 entries define a cyclic height order");
            return bad;
        }
        emitted[best] = true;
        out.band_height[best] = (int)step + 1;
    }

    out.n = n;
    return bad;
}

}  // namespace detail

namespace {

ClosedBraidDiagram diagram_from_structure(const detail::MatrixStructure& st) {
    BraidWord w{st.n, {}};
    w.letters.resize(st.band_pos.size());
    for (size_t b = 0; b < st.band_pos.size(); ++b)
        w.letters[st.band_height[b] - 1] = {st.band_column[b], st.band_sign[b] < 0 ? -1 : 1};
    return ClosedBraidDiagram(w);
}

}  // namespace

ValidityReport validate(const IntMat& m) {
    detail::MatrixStructure st;
    ValidityReport report{detail::analyze(m, st)};
    if (!report.valid()) return report;
    if (encode(diagram_from_structure(st)) != m)
        report.violations.push_back("entries are inconsistent with the reconstructed diagram");
    return report;
}

ClosedBraidDiagram decode(const IntMat& m) {
    detail::MatrixStructure st;
    auto bad = detail::analyze(m, st);
    if (!bad.empty()) throw ValidationError(std::move(bad));
    ClosedBraidDiagram d = diagram_from_structure(st);
    if (encode(d) != m)
        throw ValidationError({"entries are inconsistent with the reconstructed diagram"});
    return d;
}

}  // namespace laundry
