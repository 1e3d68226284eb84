#include "laundry/poly.hpp"

#include <sstream>

#include "laundry/errors.hpp"

namespace laundry {

namespace {

long long checked(__int128 v, const char* what) {
    if (v > __int128(0x3fffffffffffffffLL) || v < -__int128(0x3fffffffffffffffLL))
        throw InternalError(std::string("coefficient overflow in ") + what);
    return (long long)v;
}

}  // namespace

LaurentPoly::LaurentPoly(long long constant) {
    if (constant != 0) c_.push_back(constant);
}

LaurentPoly::LaurentPoly(int lo, std::vector<long long> coeffs) : lo_(lo), c_(std::move(coeffs)) {
    trim();
}

LaurentPoly LaurentPoly::t(int power, long long coeff) {
    return LaurentPoly(power, {coeff});
}

void LaurentPoly::trim() {
    size_t front = 0;
    while (front < c_.size() && c_[front] == 0) ++front;
    if (front == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    size_t back = c_.size();
    while (back > front && c_[back - 1] == 0) --back;
    c_ = std::vector<long long>(c_.begin() + front, c_.begin() + back);
    lo_ += (int)front;
}

long long LaurentPoly::coeff(int power) const {
    int i = power - lo_;
    if (i < 0 || i >= (int)c_.size()) return 0;
    return c_[i];
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int lo = std::min(lo_, o.lo_);
    int hi = std::max(this->hi(), o.hi());
    std::vector<long long> c(size_t(hi - lo + 1), 0);
    for (size_t i = 0; i < c_.size(); ++i) c[lo_ - lo + i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[o.lo_ - lo + i] += o.c_[i];
    return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return LaurentPoly();
    std::vector<long long> c(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = checked(__int128(c[i + j]) + __int128(c_[i]) * o.c_[j], "poly product");
    return LaurentPoly(lo_ + o.lo_, std::move(c));
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw InternalError("polynomial division by zero");
    if (is_zero()) return LaurentPoly();
    std::vector<long long> rem = c_;
    int qlen = (int)c_.size() - (int)d.c_.size() + 1;
    if (qlen <= 0) throw InternalError("polynomial division leaves a remainder");
    std::vector<long long> q(qlen, 0);
    long long lead = d.c_.back();
    for (int k = qlen - 1; k >= 0; --k) {
        long long num = rem[k + d.c_.size() - 1];
        if (num % lead != 0) throw InternalError("polynomial division leaves a remainder");
        long long f = num / lead;
        q[k] = f;
        if (f != 0)
            for (size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
    }
    for (long long v : rem)
        if (v != 0) throw InternalError("polynomial division leaves a remainder");
    return LaurentPoly(lo_ - d.lo_, std::move(q));
}

LaurentPoly LaurentPoly::unit_normalized() const {
    if (is_zero()) return LaurentPoly();
    LaurentPoly r = *this;
    r.lo_ = 0;
    if (r.c_.back() < 0)
        for (auto& v : r.c_) v = -v;
    return r;
}

long long LaurentPoly::eval(long long x) const {
    if (lo_ < 0) throw InternalError("evaluating a Laurent polynomial with negative exponents");
    __int128 acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    for (int k = 0; k < lo_; ++k) acc *= x;
    return checked(acc, "poly evaluation");
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ' ';
        os << c_[i];
    }
    return os.str();
}

LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m) {
    int n = (int)m.size();
    if (n == 0) return LaurentPoly(1);
    bool neg = false;
    LaurentPoly prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { p = i; break; }
            if (p < 0) return LaurentPoly();
            std::swap(m[k], m[p]);
            neg = !neg;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
            m[i][k] = LaurentPoly();
        }
        prev = m[k][k];
    }
    return neg ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace laundry
