#include "laundry/moves.hpp"

#include <algorithm>
#include <sstream>

#include "laundry/errors.hpp"

namespace laundry {

namespace {

using detail::MatrixStructure;

struct BandMeta {
    int column = 1;
    int height = 1;
    long long sign = 1;
    int old_pos = -1;   // position in the input matrix, -1 for a new band
    bool touched = false;  // entries must be re-derived, not copied
};

struct Surgery {
    int n = 1;                      // circles after the move
    std::vector<BandMeta> bands;    // bands after the move
    std::vector<int> old_circle_pos;  // old position of circle i at [i-1], -1 if new
};

struct Rebuilt {
    IntMat matrix;
    std::vector<int> circle_pos;              // new position of circle i at [i-1]
    std::vector<int> band_pos;                // new position of bands, parallel to Surgery::bands
};

MatrixStructure analyze_or_throw(const IntMat& m) {
    MatrixStructure st;
    auto bad = detail::analyze(m, st);
    if (!bad.empty()) throw ValidationError(std::move(bad));
    return st;
}

Surgery surgery_from(const MatrixStructure& st) {
    Surgery s;
    s.n = st.n;
    s.old_circle_pos.assign(st.circle_pos.begin(), st.circle_pos.end());
    for (size_t b = 0; b < st.band_pos.size(); ++b)
        s.bands.push_back({st.band_column[b], st.band_height[b], st.band_sign[b],
                           st.band_pos[b], false});
    return s;
}

Rebuilt rebuild(const IntMat& old, const Surgery& s) {
    struct Slot {
        bool is_circle;
        int circle;   // circles
        int band;     // index into s.bands
    };
    std::vector<Slot> order;
    std::vector<std::vector<int>> block(s.n + 2);
    for (int b = 0; b < (int)s.bands.size(); ++b)
        block[even_circle_of(s.bands[b].column)].push_back(b);
    for (auto& blk : block)
        std::sort(blk.begin(), blk.end(), [&](int x, int y) {
            return s.bands[x].height < s.bands[y].height;
        });
    for (int e = 2; e <= s.n; e += 2) {
        order.push_back({true, e, -1});
        for (int b : block[e]) order.push_back({false, 0, b});
    }
    for (int o = s.n % 2 ? s.n : s.n - 1; o >= 1; o -= 2) order.push_back({true, o, -1});

    int m = (int)order.size();
    Rebuilt out{IntMat(m, m), std::vector<int>(s.n, -1), std::vector<int>(s.bands.size(), -1)};
    for (int i = 0; i < m; ++i) {
        if (order[i].is_circle) out.circle_pos[order[i].circle - 1] = i;
        else out.band_pos[order[i].band] = i;
    }

    auto old_pos = [&](const Slot& x) {
        return x.is_circle ? s.old_circle_pos[x.circle - 1] : s.bands[x.band].old_pos;
    };
    auto touched = [&](const Slot& x) { return x.is_circle ? false : s.bands[x.band].touched; };

    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            const Slot &x = order[i], &y = order[j];
            long long v;
            int ox = old_pos(x), oy = old_pos(y);
            if (ox >= 0 && oy >= 0 && !touched(x) && !touched(y)) {
                v = old.at(ox, oy);
            } else if (x.is_circle && y.is_circle) {
                v = 0;
            } else if (!x.is_circle && !y.is_circle) {
                const BandMeta &p = s.bands[x.band], &q = s.bands[y.band];
                if (i == j) {
                    v = p.sign;
                } else if (std::abs(p.column - q.column) == 1) {
                    const BandMeta& left = p.column < q.column ? p : q;
                    const BandMeta& right = p.column < q.column ? q : p;
                    v = left.height > right.height ? 1 : 0;
                } else {
                    v = 0;
                }
            } else {
                const BandMeta& band = s.bands[x.is_circle ? y.band : x.band];
                int circle = x.is_circle ? x.circle : y.circle;
                v = circle == band.column ? -1 : (circle == band.column + 1 ? 1 : 0);
            }
            out.matrix.at(i, j) = out.matrix.at(j, i) = v;
        }
    return out;
}

int band_at_height(const Surgery& s, int height) {
    for (int b = 0; b < (int)s.bands.size(); ++b)
        if (s.bands[b].height == height) return b;
    return -1;
}

int max_height(const Surgery& s) {
    int h = 0;
    for (const auto& b : s.bands) h = std::max(h, b.height);
    return h;
}

// Witness helper: identity on every cycle except one band, whose new basis
// vector is a signed combination of old cycles.
IntMat witness_matrix(const MatrixStructure& st, const Surgery& s, const Rebuilt& nu,
                      int moved_band, const std::vector<std::pair<int, long long>>& combo) {
    int m = (int)st.circle_pos.size() + (int)st.band_pos.size();
    IntMat p(m, m);
    for (int i = 1; i <= st.n; ++i) p.at(st.circle_pos[i - 1], nu.circle_pos[i - 1]) = 1;
    for (int b = 0; b < (int)s.bands.size(); ++b) {
        if (b == moved_band) continue;
        p.at(s.bands[b].old_pos, nu.band_pos[b]) = 1;
    }
    for (auto [pos, coeff] : combo) p.at(pos, nu.band_pos[moved_band]) = coeff;
    return p;
}

void check_witness(const IntMat& m, const IntMat& p, const IntMat& target) {
    if (!is_unimodular(p)) throw InternalError("move witness is not unimodular");
    if (p.transposed() * m * p != target)
        throw InternalError("move witness does not conjugate onto the output");
}

struct MatrixMoveApplier {
    const IntMat& m;
    const MatrixStructure& st;

    MoveResult operator()(const M1Insert& mv) const {
        Surgery s = surgery_from(st);
        if (st.n < 2) throw MoveError("r2-insert: needs at least two strands");
        if (mv.column < 1 || mv.column >= st.n) throw MoveError("r2-insert: column out of range");
        int len = (int)s.bands.size();
        if (mv.height < 1 || mv.height > len + 1) throw MoveError("r2-insert: height out of range");
        if (mv.upper_sign != 1 && mv.upper_sign != -1)
            throw MoveError("r2-insert: sign must be +1 or -1");
        for (auto& b : s.bands)
            if (b.height >= mv.height) b.height += 2;
        s.bands.push_back({mv.column, mv.height, -mv.upper_sign, -1, true});
        s.bands.push_back({mv.column, mv.height + 1, mv.upper_sign, -1, true});
        return {rebuild(m, s).matrix, std::nullopt};
    }

    MoveResult operator()(const M1Delete& mv) const {
        Surgery s = surgery_from(st);
        int a = -1, b = -1;
        for (int i = 0; i < (int)s.bands.size(); ++i) {
            if (s.bands[i].old_pos == mv.band_a) a = i;
            if (s.bands[i].old_pos == mv.band_b) b = i;
        }
        if (a < 0 || b < 0 || a == b) throw MoveError("r2-delete: positions are not a band pair");
        const BandMeta &p = s.bands[a], &q = s.bands[b];
        if (p.column != q.column || p.sign + q.sign != 0)
            throw MoveError("r2-delete: bands do not form a canceling pair");
        int lo = std::min(p.height, q.height), hi = std::max(p.height, q.height);
        for (int i = 0; i < (int)s.bands.size(); ++i) {
            if (i == a || i == b) continue;
            if (std::abs(s.bands[i].column - p.column) <= 1 && s.bands[i].height > lo &&
                s.bands[i].height < hi)
                throw MoveError("r2-delete: a crossing separates the pair");
        }
        s.bands.erase(s.bands.begin() + std::max(a, b));
        s.bands.erase(s.bands.begin() + std::min(a, b));
        return {rebuild(m, s).matrix, std::nullopt};
    }

    MoveResult operator()(const M2Stabilize& mv) const {
        if (mv.sign != 1 && mv.sign != -1) throw MoveError("stab: sign must be +1 or -1");
        Surgery s = surgery_from(st);
        s.n = st.n + 1;
        s.old_circle_pos.push_back(-1);
        for (auto& b : s.bands) b.height += 1;
        s.bands.push_back({st.n, 1, mv.sign, -1, true});
        return {rebuild(m, s).matrix, std::nullopt};
    }

    MoveResult operator()(const M2Destabilize&) const {
        if (st.n < 2) throw MoveError("destab: needs at least two strands");
        Surgery s = surgery_from(st);
        int found = -1;
        for (int i = 0; i < (int)s.bands.size(); ++i)
            if (s.bands[i].column == st.n - 1) {
                if (found >= 0) throw MoveError("destab: last column is not a single crossing");
                found = i;
            }
        if (found < 0) throw MoveError("destab: last column has no crossing");
        s.bands.erase(s.bands.begin() + found);
        s.n = st.n - 1;
        s.old_circle_pos.pop_back();
        return {rebuild(m, s).matrix, std::nullopt};
    }

    MoveResult operator()(const M3Conjugate&) const {
        Surgery s = surgery_from(st);
        if (s.bands.empty()) return {m, IntMat::identity(m.rows())};
        int moved = band_at_height(s, 1);
        int col = s.bands[moved].column;
        s.bands[moved].height = max_height(s) + 1;
        s.bands[moved].touched = true;
        Rebuilt nu = rebuild(m, s);
        IntMat p = witness_matrix(st, s, nu, moved,
                                  {{s.bands[moved].old_pos, 1},
                                   {st.circle_pos[col - 1], -1},
                                   {st.circle_pos[col], -1}});
        check_witness(m, p, nu.matrix);
        return {nu.matrix, p};
    }

    MoveResult operator()(const M4& mv) const {
        Surgery s = surgery_from(st);
        if (mv.direction != 'l' && mv.direction != 'r') throw MoveError("r3: direction must be l or r");
        int base = band_at_height(s, mv.height);
        if (base < 0) throw MoveError("r3: height out of range");
        int c = s.bands[base].column;
        int partner = mv.direction == 'r' ? c + 1 : c - 1;
        if (partner < 1 || partner >= st.n) throw MoveError("r3: partner column out of range");
        int lo = std::min(c, partner) - 1, hi = std::max(c, partner) + 1;
        // the two bands above the base within the interacting columns
        std::vector<int> zone;
        for (int i = 0; i < (int)s.bands.size(); ++i)
            if (s.bands[i].height > mv.height && s.bands[i].column >= lo && s.bands[i].column <= hi)
                zone.push_back(i);
        std::sort(zone.begin(), zone.end(),
                  [&](int x, int y) { return s.bands[x].height < s.bands[y].height; });
        if (zone.size() < 2) throw MoveError("r3: pattern not found");
        int mid = zone[0], top = zone[1];
        if (s.bands[mid].column != partner || s.bands[top].column != c ||
            s.bands[mid].sign != s.bands[base].sign || s.bands[top].sign != s.bands[base].sign)
            throw MoveError("r3: pattern not found");

        int h1 = s.bands[base].height, h2 = s.bands[mid].height, h3 = s.bands[top].height;
        s.bands[mid].height = h1;
        s.bands[top].height = h2;
        s.bands[base].height = h3;
        s.bands[base].column = partner;
        s.bands[base].touched = true;
        Rebuilt nu = rebuild(m, s);
        // Cycle equation: the reattached band carries mid + s*(bottom - top),
        // where s is the crossing sign flipped for the mirrored pattern.
        long long sg = s.bands[base].sign * (mv.direction == 'r' ? 1 : -1);
        IntMat p = witness_matrix(st, s, nu, base,
                                  {{s.bands[base].old_pos, sg},
                                   {s.bands[mid].old_pos, 1},
                                   {s.bands[top].old_pos, -sg}});
        check_witness(m, p, nu.matrix);
        return {nu.matrix, p};
    }
};

}  // namespace

MoveResult apply_matrix_move(const IntMat& m, const MatrixMoveSpec& move) {
    MatrixStructure st = analyze_or_throw(m);
    return std::visit(MatrixMoveApplier{m, st}, move);
}

MatrixMoveSpec to_matrix_move(const IntMat& m, const BraidMoveSpec& move) {
    if (auto* mv = std::get_if<R2Insert>(&move))
        return M1Insert{mv->column, mv->height, mv->upper_sign};
    if (auto* mv = std::get_if<Stabilize>(&move)) return M2Stabilize{mv->sign};
    if (std::get_if<Destabilize>(&move)) return M2Destabilize{};
    if (std::get_if<ConjugateRotate>(&move)) return M3Conjugate{};
    if (auto* mv = std::get_if<R3>(&move)) return M4{mv->height, mv->direction};

    const auto& mv = std::get<R2Delete>(move);
    MatrixStructure st = analyze_or_throw(m);
    int lower = -1, upper = -1;
    for (size_t b = 0; b < st.band_pos.size(); ++b)
        if (st.band_height[b] == mv.height) lower = (int)b;
    if (lower < 0) throw MoveError("r2-delete: height out of range");
    int best_h = 0;
    for (size_t b = 0; b < st.band_pos.size(); ++b) {
        if ((int)b == lower || st.band_height[b] < mv.height) continue;
        if (std::abs(st.band_column[b] - st.band_column[lower]) > 1) continue;
        if (best_h == 0 || st.band_height[b] < best_h) {
            best_h = st.band_height[b];
            upper = (int)b;
        }
    }
    if (upper < 0 || st.band_column[upper] != st.band_column[lower] ||
        st.band_sign[upper] + st.band_sign[lower] != 0)
        throw MoveError("r2-delete: no canceling pair at this height");
    return M1Delete{st.band_pos[lower], st.band_pos[upper]};
}

bool verify_commuting(const ClosedBraidDiagram& d, const BraidMoveSpec& move) {
    IntMat m = encode(d);
    IntMat braid_path = encode(apply_braid_move(d, move));
    IntMat matrix_path = apply_matrix_move(m, to_matrix_move(m, move)).matrix;
    return braid_path == matrix_path;
}

bool is_unimodular(const IntMat& p) {
    if (!p.square()) return false;
    long long d = p.det();
    return d == 1 || d == -1;
}

TubeStabilization m2_stabilize_via_tube(const IntMat& m, int sign) {
    if (sign != 1 && sign != -1) throw MoveError("stab: sign must be +1 or -1");
    MatrixStructure st = analyze_or_throw(m);
    MoveResult stab = MatrixMoveApplier{m, st}(M2Stabilize{sign});
    const IntMat& target = stab.matrix;
    int mm = target.rows();

    // Positions of the new circle and band, from the surgery bookkeeping.
    int circle_slot = -1, band_slot = -1;
    {
        Surgery s = surgery_from(st);
        s.n = st.n + 1;
        s.old_circle_pos.push_back(-1);
        for (auto& b : s.bands) b.height += 1;
        s.bands.push_back({st.n, 1, sign, -1, true});
        Rebuilt nu = rebuild(m, s);
        circle_slot = nu.circle_pos[st.n];
        band_slot = nu.band_pos.back();
    }

    // The tube: two parallel bands with opposite twists, pairing zero with
    // each other and identically with everything else.
    IntMat tube = target;
    for (int j = 0; j < mm; ++j) {
        if (j == circle_slot || j == band_slot) continue;
        tube.at(circle_slot, j) = tube.at(j, circle_slot) = target.at(band_slot, j);
    }
    tube.at(circle_slot, circle_slot) = -sign;
    tube.at(circle_slot, band_slot) = tube.at(band_slot, circle_slot) = 0;

    IntMat p = IntMat::identity(mm);
    p.at(band_slot, circle_slot) = sign;
    p.at(circle_slot, circle_slot) = -sign;
    if (!is_unimodular(p) || p.transposed() * tube * p != target)
        throw InternalError("tube stabilization congruence failed");
    return {tube, p};
}

BraidMoveSpec parse_move(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') { parts.push_back(cur); cur.clear(); }
        else cur += ch;
    }
    parts.push_back(cur);
    auto to_int = [&](const std::string& s, const char* what) {
        try {
            size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (...) {
            throw ParseError(std::string("move: expected an integer ") + what);
        }
    };
    auto to_sign = [&](const std::string& s) {
        if (s == "+") return 1;
        if (s == "-") return -1;
        throw ParseError("move: expected + or -");
    };
    const std::string& kind = parts[0];
    if (kind == "r2-insert" && parts.size() == 4)
        return R2Insert{to_int(parts[1], "column"), to_int(parts[2], "height"), to_sign(parts[3])};
    if (kind == "r2-delete" && parts.size() == 2) return R2Delete{to_int(parts[1], "height")};
    if (kind == "stab" && parts.size() == 2) return Stabilize{to_sign(parts[1])};
    if (kind == "destab" && parts.size() == 1) return Destabilize{};
    if (kind == "conj" && parts.size() == 1) return ConjugateRotate{};
    if (kind == "r3" && parts.size() == 3) {
        if (parts[2] != "l" && parts[2] != "r") throw ParseError("move: r3 direction must be l or r");
        return R3{to_int(parts[1], "height"), parts[2][0]};
    }
    throw ParseError("unknown move specification '" + text + "'");
}

}  // namespace laundry
