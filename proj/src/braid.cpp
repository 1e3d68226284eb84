#include "laundry/braid.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "laundry/errors.hpp"

namespace laundry {

BraidWord parse_braid(const std::string& text) {
    size_t pos = 0;
    int line = 1, col = 1;
    auto advance = [&] {
        if (text[pos] == '\n') { ++line; col = 1; } else { ++col; }
        ++pos;
    };
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) advance();
    };

    skip_space();
    int l0 = line, c0 = col;
    size_t start = pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) advance();
    if (pos == start) throw ParseError("expected strand count", l0, c0);
    long long n = std::strtoll(text.substr(start, pos - start).c_str(), nullptr, 10);
    if (n < 1) throw ParseError("strand count must be at least 1", l0, c0);
    if (n > 1024) throw ParseError("strand count out of range", l0, c0);
    skip_space();
    if (pos >= text.size() || text[pos] != ':')
        throw ParseError("expected ':' after strand count", line, col);
    advance();

    BraidWord w{(int)n, {}};
    while (true) {
        skip_space();
        if (pos >= text.size()) break;
        int l = line, c = col;
        start = pos;
        if (text[pos] == '-' || text[pos] == '+') advance();
        size_t digits_from = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) advance();
        if (pos == digits_from) throw ParseError("malformed letter token", l, c);
        long long v = std::strtoll(text.substr(start, pos - start).c_str(), nullptr, 10);
        if (v == 0) throw ParseError("letter value must be nonzero", l, c);
        long long column = v < 0 ? -v : v;
        if (column >= n)
            throw ParseError("letter column exceeds strand count minus one", l, c);
        w.letters.push_back({(int)column, v < 0 ? -1 : 1});
    }
    return w;
}

std::string format_braid(const BraidWord& w) {
    std::ostringstream os;
    os << w.strands << ':';
    for (const auto& l : w.letters) os << ' ' << l.sign * l.column;
    return os.str();
}

int component_count(const BraidWord& w) {
    std::vector<int> perm(w.strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& l : w.letters) std::swap(perm[l.column - 1], perm[l.column]);
    std::vector<bool> seen(w.strands, false);
    int cycles = 0;
    for (int i = 0; i < w.strands; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    return cycles;
}

namespace {

std::vector<BraidLetter> canonicalize(const std::vector<BraidLetter>& letters) {
    size_t len = letters.size();
    std::vector<bool> used(len, false);
    std::vector<BraidLetter> out;
    out.reserve(len);
    for (size_t emitted = 0; emitted < len; ++emitted) {
        int best = -1;
        for (size_t i = 0; i < len; ++i) {
            if (used[i]) continue;
            bool ready = true;
            for (size_t j = 0; j < i; ++j) {
                if (used[j]) continue;
                if (std::abs(letters[j].column - letters[i].column) <= 1) {
                    ready = false;
                    break;
                }
            }
            if (ready && (best < 0 || letters[i].column < letters[best].column)) best = (int)i;
        }
        used[best] = true;
        out.push_back(letters[best]);
    }
    return out;
}

}  // namespace

ClosedBraidDiagram::ClosedBraidDiagram(const BraidWord& w)
    : word_{w.strands, canonicalize(w.letters)} {}

ClosedBraidDiagram b0_normal_form(const BraidWord& w) { return ClosedBraidDiagram(w); }

namespace {

struct MoveApplier {
    const BraidWord& w;

    BraidWord operator()(const R2Insert& m) const {
        int len = (int)w.letters.size();
        if (m.column < 1 || m.column >= w.strands)
            throw MoveError("r2-insert: column out of range");
        if (m.height < 1 || m.height > len + 1)
            throw MoveError("r2-insert: height out of range");
        if (m.upper_sign != 1 && m.upper_sign != -1)
            throw MoveError("r2-insert: sign must be +1 or -1");
        BraidWord out = w;
        out.letters.insert(out.letters.begin() + (m.height - 1),
                           {BraidLetter{m.column, -m.upper_sign}, BraidLetter{m.column, m.upper_sign}});
        return out;
    }

    BraidWord operator()(const R2Delete& m) const {
        int len = (int)w.letters.size();
        if (m.height < 1 || m.height > len) throw MoveError("r2-delete: height out of range");
        const BraidLetter lower = w.letters[m.height - 1];
        for (int i = m.height; i < len; ++i) {
            const BraidLetter& cand = w.letters[i];
            if (std::abs(cand.column - lower.column) > 1) continue;
            if (cand.column == lower.column && cand.sign == -lower.sign) {
                BraidWord out = w;
                out.letters.erase(out.letters.begin() + i);
                out.letters.erase(out.letters.begin() + (m.height - 1));
                return out;
            }
            throw MoveError("r2-delete: no canceling pair at this height");
        }
        throw MoveError("r2-delete: no canceling pair at this height");
    }

    BraidWord operator()(const Stabilize& m) const {
        if (m.sign != 1 && m.sign != -1) throw MoveError("stab: sign must be +1 or -1");
        BraidWord out{w.strands + 1, {}};
        out.letters.push_back({w.strands, m.sign});
        out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
        return out;
    }

    BraidWord operator()(const Destabilize&) const {
        if (w.strands < 2) throw MoveError("destab: needs at least two strands");
        int col = w.strands - 1;
        int found = -1;
        for (int i = 0; i < (int)w.letters.size(); ++i)
            if (w.letters[i].column == col) {
                if (found >= 0) throw MoveError("destab: last column is not a single crossing");
                found = i;
            }
        if (found < 0) throw MoveError("destab: last column has no crossing");
        BraidWord out{w.strands - 1, w.letters};
        out.letters.erase(out.letters.begin() + found);
        return out;
    }

    BraidWord operator()(const ConjugateRotate&) const {
        BraidWord out = w;
        if (out.letters.empty()) return out;
        BraidLetter bottom = out.letters.front();
        out.letters.erase(out.letters.begin());
        out.letters.push_back(bottom);
        return out;
    }

    BraidWord operator()(const R3& m) const {
        int len = (int)w.letters.size();
        if (m.height < 1 || m.height > len) throw MoveError("r3: height out of range");
        if (m.direction != 'l' && m.direction != 'r') throw MoveError("r3: direction must be l or r");
        const BraidLetter base = w.letters[m.height - 1];
        int partner = m.direction == 'r' ? base.column + 1 : base.column - 1;
        if (partner < 1 || partner >= w.strands) throw MoveError("r3: partner column out of range");
        int lo = std::min(base.column, partner) - 1;
        int hi = std::max(base.column, partner) + 1;
        // The two letters above the base that interact with the pattern's
        // columns must complete sigma_i sigma_j sigma_i with a uniform sign.
        int idx[3] = {m.height - 1, -1, -1};
        int want = 1;
        for (int i = m.height; i < len && want < 3; ++i) {
            int c = w.letters[i].column;
            if (c < lo || c > hi) continue;
            idx[want++] = i;
        }
        if (want < 3) throw MoveError("r3: pattern not found");
        const BraidLetter mid = w.letters[idx[1]];
        const BraidLetter top = w.letters[idx[2]];
        if (mid.column != partner || top.column != base.column ||
            mid.sign != base.sign || top.sign != base.sign)
            throw MoveError("r3: pattern not found");
        BraidWord out = w;
        out.letters[idx[0]] = {partner, base.sign};
        out.letters[idx[1]] = {base.column, base.sign};
        out.letters[idx[2]] = {partner, base.sign};
        return out;
    }
};

}  // namespace

ClosedBraidDiagram apply_braid_move(const ClosedBraidDiagram& d, const BraidMoveSpec& move) {
    BraidWord out = std::visit(MoveApplier{d.word()}, move);
    return ClosedBraidDiagram(out);
}

std::string describe(const BraidMoveSpec& move) {
    std::ostringstream os;
    if (auto* m = std::get_if<R2Insert>(&move))
        os << "r2-insert:" << m->column << ':' << m->height << ':' << (m->upper_sign > 0 ? '+' : '-');
    else if (auto* m = std::get_if<R2Delete>(&move))
        os << "r2-delete:" << m->height;
    else if (auto* m = std::get_if<Stabilize>(&move))
        os << "stab:" << (m->sign > 0 ? '+' : '-');
    else if (std::get_if<Destabilize>(&move))
        os << "destab";
    else if (std::get_if<ConjugateRotate>(&move))
        os << "conj";
    else if (auto* m = std::get_if<R3>(&move))
        os << "r3:" << m->height << ':' << m->direction;
    return os.str();
}

}  // namespace laundry
