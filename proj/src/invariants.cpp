#include "laundry/invariants.hpp"

#include <numeric>

#include "laundry/errors.hpp"
#include "laundry/forms.hpp"
#include "laundry/linking.hpp"

namespace laundry {

long long link_determinant(const IntMat& seifert) {
    if (seifert.empty()) return 1;
    long long v = (seifert + seifert.transposed()).det();
    return v < 0 ? -v : v;
}

namespace {

struct Frac {
    long long num = 0, den = 1;

    static Frac make(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a == 0) a = 1;
        n /= a;
        d /= a;
        if (n > __int128(0x3fffffffffffffffLL) || n < -__int128(0x3fffffffffffffffLL) ||
            d > __int128(0x3fffffffffffffffLL))
            throw InternalError("rational overflow in signature");
        return Frac{(long long)n, (long long)d};
    }
    bool zero() const { return num == 0; }
    int sign() const { return num == 0 ? 0 : (num < 0 ? -1 : 1); }
    Frac operator+(const Frac& o) const {
        return make(__int128(num) * o.den + __int128(o.num) * den, __int128(den) * o.den);
    }
    Frac operator-(const Frac& o) const {
        return make(__int128(num) * o.den - __int128(o.num) * den, __int128(den) * o.den);
    }
    Frac operator*(const Frac& o) const {
        return make(__int128(num) * o.num, __int128(den) * o.den);
    }
    Frac operator/(const Frac& o) const {
        return make(__int128(num) * o.den, __int128(den) * o.num);
    }
};

}  // namespace

int link_signature(const IntMat& seifert) {
    if (seifert.empty()) return 0;
    IntMat q = seifert + seifert.transposed();
    int n = q.rows();
    std::vector<std::vector<Frac>> w(n, std::vector<Frac>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = Frac{q.at(i, j), 1};

    std::vector<bool> done(n, false);
    int sig = 0;
    while (true) {
        int pivot = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && !w[i][i].zero()) { pivot = i; break; }
        if (pivot < 0) {
            // All remaining diagonal entries vanish; a symmetric row/column
            // addition creates a pivot from any nonzero off-diagonal pair.
            int a = -1, b = -1;
            for (int i = 0; i < n && a < 0; ++i)
                for (int j = i + 1; j < n && a < 0; ++j)
                    if (!done[i] && !done[j] && !w[i][j].zero()) { a = i; b = j; }
            if (a < 0) break;  // zero block
            for (int k = 0; k < n; ++k)
                if (!done[k]) w[a][k] = w[a][k] + w[b][k];
            for (int k = 0; k < n; ++k)
                if (!done[k]) w[k][a] = w[k][a] + w[k][b];
            continue;
        }
        sig += w[pivot][pivot].sign();
        Frac p = w[pivot][pivot];
        for (int i = 0; i < n; ++i) {
            if (done[i] || i == pivot || w[i][pivot].zero()) continue;
            Frac f = w[i][pivot] / p;
            for (int j = 0; j < n; ++j)
                if (!done[j]) w[i][j] = w[i][j] - f * w[pivot][j];
        }
        for (int j = 0; j < n; ++j)
            if (!done[j]) w[pivot][j] = w[j][pivot] = Frac{};
        done[pivot] = true;
    }
    return sig;
}

LaurentPoly alexander(const IntMat& seifert) {
    int n = seifert.rows();
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = LaurentPoly(seifert.at(i, j)) - LaurentPoly::t(1, seifert.at(j, i));
    return laurent_det(std::move(m)).unit_normalized();
}

namespace {

using LaurentMat = std::vector<std::vector<LaurentPoly>>;

LaurentMat burau_identity(int k) {
    LaurentMat m(k, std::vector<LaurentPoly>(k));
    for (int i = 0; i < k; ++i) m[i][i] = LaurentPoly(1);
    return m;
}

// Reduced Burau matrix of sigma_column^sign on n strands (k = n-1).
LaurentMat burau_letter(int n, int column, int sign) {
    int k = n - 1;
    LaurentMat m = burau_identity(k);
    int i = column;  // 1-based
    if (sign > 0) {
        if (i > 1) m[i - 1][i - 2] = LaurentPoly::t(1);
        m[i - 1][i - 1] = LaurentPoly::t(1, -1);
        if (i < k) m[i - 1][i] = LaurentPoly(1);
    } else {
        if (i > 1) m[i - 1][i - 2] = LaurentPoly(1);
        m[i - 1][i - 1] = LaurentPoly::t(-1, -1);
        if (i < k) m[i - 1][i] = LaurentPoly::t(-1);
    }
    return m;
}

LaurentMat mul(const LaurentMat& a, const LaurentMat& b) {
    int n = (int)a.size();
    LaurentMat r(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) r[i][j] = r[i][j] + a[i][k] * b[k][j];
        }
    return r;
}

}  // namespace

LaurentPoly alexander_oracle(const BraidWord& w) {
    int k = w.strands - 1;
    LaurentMat b = burau_identity(k);
    for (const auto& l : w.letters) b = mul(b, burau_letter(w.strands, l.column, l.sign));
    for (int i = 0; i < k; ++i) b[i][i] = b[i][i] - LaurentPoly(1);
    LaurentPoly top = laurent_det(std::move(b));
    std::vector<long long> ones(w.strands, 1);
    LaurentPoly cyclotomic(0, std::move(ones));  // 1 + t + ... + t^{n-1}
    return top.divide_exact(cyclotomic).unit_normalized();
}

InvarianceReport invariance_check(const ClosedBraidDiagram& d,
                                  const std::vector<BraidMoveSpec>& moves) {
    InvarianceReport rep;
    auto measure = [](const ClosedBraidDiagram& cur, const std::string& name) {
        IntMat s = seifert_matrix(cur);
        InvarianceStep step;
        step.move = name;
        step.det = link_determinant(s);
        step.abs_signature = std::abs(link_signature(s));
        step.alex = alexander(s);
        return step;
    };
    rep.steps.push_back(measure(d, "start"));
    ClosedBraidDiagram cur = d;
    for (const auto& mv : moves) {
        cur = apply_braid_move(cur, mv);
        rep.steps.push_back(measure(cur, describe(mv)));
        const InvarianceStep &a = rep.steps.front(), &b = rep.steps.back();
        if (a.det != b.det || a.abs_signature != b.abs_signature || !(a.alex == b.alex)) {
            rep.constant = false;
            rep.changes.push_back("invariants changed after " + describe(mv));
        }
    }
    return rep;
}

}  // namespace laundry
