#include "laundry/forms.hpp"

#include <algorithm>

#include "laundry/errors.hpp"
#include "laundry/gauss.hpp"

namespace laundry {

IntMat correction_matrix(const std::vector<CycleLabel>& order) {
    int m = (int)order.size();
    IntMat n(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (!order[i].is_circle && !order[j].is_circle) n.at(i, j) = 1;
    return n;
}

IntMat correction_matrix(const ClosedBraidDiagram& d) {
    return correction_matrix(laundry_order(d));
}

namespace {

// Signed crossing of two oriented chords of a convex region, endpoints given
// by distinct positions along the boundary. Zero unless the endpoint pairs
// interleave.
int chord_crossing(int p1, int p2, int q1, int q2) {
    int lo = std::min(p1, p2), hi = std::max(p1, p2);
    bool in1 = lo < q1 && q1 < hi;
    bool in2 = lo < q2 && q2 < hi;
    if (in1 == in2) return 0;
    return ((p1 < p2) == in1) ? 1 : -1;
}

}  // namespace

namespace detail {

IntMat intersection_form_with_layout(const ClosedBraidDiagram& d, const TLayout& layout) {
    auto order = laundry_order(d);
    int m = (int)order.size();
    CircleWithChords chords = circle_with_chords(d);

    // Feet of cycle i (0-based laundry index) sit at chord positions 1..2m.
    std::vector<int> foot_a(m), foot_b(m);
    for (int i = 0; i < m; ++i) {
        foot_a[i] = chords.position_of(i + 1, false);
        foot_b[i] = chords.position_of(i + 1, true);
    }

    // Crossing-band cycles are rerouted through the extra band; its strand
    // clusters occupy positions below 1, ordered per the layout. Strands
    // enter in one order and exit reversed (the band carries one half-twist),
    // so each pair crosses once inside it.
    std::vector<int> band_rank(m, -1);
    int nbands = 0;
    for (int i = 0; i < m; ++i)
        if (!order[i].is_circle) band_rank[i] = nbands++;
    auto entry_pos = [&](int r) {
        int off = layout.entry_ascending ? r : nbands - 1 - r;
        return (layout.exit_first ? -nbands : -2 * nbands) + off;
    };
    auto exit_pos = [&](int r) {
        int off = layout.entry_ascending ? nbands - 1 - r : r;
        return (layout.exit_first ? -2 * nbands : -nbands) + off;
    };

    // Each cycle's arcs across the disk, oriented along the cycle.
    struct Arc {
        int from, to;
    };
    std::vector<std::vector<Arc>> arcs(m);
    for (int i = 0; i < m; ++i) {
        if (order[i].is_circle) {
            arcs[i] = {{foot_b[i], foot_a[i]}};
        } else {
            int r = band_rank[i];
            arcs[i] = {{foot_b[i], entry_pos(r)}, {exit_pos(r), foot_a[i]}};
        }
    }

    IntMat a(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int v = 0;
            for (const Arc& x : arcs[i])
                for (const Arc& y : arcs[j]) v += chord_crossing(x.from, x.to, y.from, y.to);
            if (!order[i].is_circle && !order[j].is_circle) v += layout.t_sign;
            a.at(i, j) = v;
            a.at(j, i) = -v;
        }
    return a;
}

}  // namespace detail

IntMat intersection_form(const ClosedBraidDiagram& d) {
    // Frozen layout. The cluster arrangement is immaterial (those crossings
    // cancel in pairs) but the twist sign is forced: -1 is the only choice
    // that keeps entries in {-1,0,1}, satisfies the parity law, and
    // reproduces the Alexander polynomial of the unknot, trefoil, figure
    // eight and Hopf link through the Seifert matrix. The test suite re-runs
    // that selection against the Burau oracle on random words.
    IntMat a = detail::intersection_form_with_layout(d, detail::TLayout{});
    IntMat m = encode(d);
    IntMat n = correction_matrix(d);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            long long v = a.at(i, j);
            if (v < -1 || v > 1)
                throw InternalError("intersection form entry outside {-1,0,1}");
            bool odd = (m.at(i, j) - n.at(i, j)) % 2 != 0;
            if (odd != (v != 0))
                throw InternalError("intersection form support violates the parity law");
        }
    return a;
}

IntMat seifert_pairing(const ClosedBraidDiagram& d) {
    IntMat m = encode(d);
    IntMat n = correction_matrix(d);
    IntMat a = intersection_form(d);
    IntMat p(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            long long v = m.at(i, j) - n.at(i, j) + a.at(i, j);
            if (v % 2 != 0) throw InternalError("Seifert pairing parity failure");
            p.at(i, j) = v / 2;
        }
    if (p + p.transposed() + n != m)
        throw InternalError("Seifert pairing does not split the linking matrix");
    return p;
}

IntMat gl_form(const IntMat& linking) {
    ValidityReport r = validate(linking);
    if (!r.valid()) throw ValidationError(std::move(r.violations));
    if (linking.rows() == 1) return IntMat();
    return linking.without(linking.rows() - 1, linking.cols() - 1);
}

IntMat seifert_matrix(const ClosedBraidDiagram& d) {
    IntMat p = seifert_pairing(d);
    if (p.rows() == 1) return IntMat();
    return p.without(p.rows() - 1, p.cols() - 1);
}

IntMat restore_from_gl(const IntMat& f) {
    if (!f.empty() && !f.square())
        throw ValidationError({"a GL form must be square"});
    int k = f.rows();
    IntMat m(k + 1, k + 1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.at(i, j) = f.at(i, j);
    for (int j = 0; j < k; ++j) {
        long long s = 0;
        for (int i = 0; i < k; ++i)
            if (f.at(i, i) == 0) s += f.at(i, j);
        m.at(k, j) = m.at(j, k) = -s;
    }
    m.at(k, k) = 0;
    ValidityReport r = validate(m);
    if (!r.valid()) throw ValidationError(std::move(r.violations));
    return m;
}

IntMat gl_from_seifert(const IntMat& s, const std::vector<CycleLabel>& order) {
    if ((int)order.size() != s.rows() + 1)
        throw std::invalid_argument("gl_from_seifert: order size must be matrix size plus one");
    IntMat n = correction_matrix(order);
    IntMat f = s + s.transposed();
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) f.at(i, j) += n.at(i, j);
    return f;
}

}  // namespace laundry
