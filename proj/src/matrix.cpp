#include "laundry/matrix.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "laundry/errors.hpp"

namespace laundry {

namespace {

long long checked(__int128 v, const char* what) {
    if (v > __int128(0x3fffffffffffffffLL) || v < -__int128(0x3fffffffffffffffLL))
        throw InternalError(std::string("integer overflow in ") + what);
    return (long long)v;
}

}  // namespace

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::operator+(const IntMat& o) const {
    IntMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
    IntMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

IntMat IntMat::operator*(const IntMat& o) const {
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            long long v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = checked(__int128(r.at(i, j)) + __int128(v) * o.at(k, j), "matrix product");
        }
    return r;
}

bool IntMat::is_symmetric() const {
    if (!square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IntMat::is_antisymmetric() const {
    if (!square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

long long IntMat::det() const {
    if (!square()) throw InternalError("determinant of a non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    std::vector<long long> w(a_);
    auto e = [&](int i, int j) -> long long& { return w[size_t(i) * n + j]; };
    long long sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (e(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (e(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(e(k, j), e(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                __int128 v = __int128(e(i, j)) * e(k, k) - __int128(e(i, k)) * e(k, j);
                long long q = checked(v, "determinant");
                // Bareiss: the division by the previous pivot is exact.
                e(i, j) = q / prev;
            }
        for (int i = k + 1; i < n; ++i) e(i, k) = 0;
        prev = e(k, k);
    }
    return sign * e(n - 1, n - 1);
}

IntMat IntMat::without(int row, int col) const {
    IntMat r(rows_ - 1, cols_ - 1);
    for (int i = 0, ri = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (int j = 0, rj = 0; j < cols_; ++j) {
            if (j == col) continue;
            r.at(ri, rj) = at(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

std::string to_text(const IntMat& m) {
    std::ostringstream os;
    os << m.rows() << '\n';
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

namespace {

struct Scanner {
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;

    void advance() {
        if (s[pos] == '\n') { ++line; col = 1; } else { ++col; }
        ++pos;
    }
    void skip_space() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) advance();
    }
    bool next_int(long long& out) {
        skip_space();
        if (pos >= s.size()) return false;
        int l = line, c = col;
        size_t start = pos;
        if (s[pos] == '-' || s[pos] == '+') advance();
        size_t digits_from = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) advance();
        if (pos == digits_from)
            throw ParseError("expected an integer", l, c);
        out = std::strtoll(s.substr(start, pos - start).c_str(), nullptr, 10);
        return true;
    }
};

}  // namespace

IntMat mat_from_text(const std::string& text) {
    Scanner sc{text};
    long long m = 0;
    if (!sc.next_int(m)) throw ParseError("empty matrix input", 1, 1);
    if (m < 0 || m > 4096) throw ParseError("matrix size out of range", 1, 1);
    IntMat r((int)m, (int)m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            long long v;
            int l = sc.line, c = sc.col;
            if (!sc.next_int(v)) throw ParseError("matrix entries missing", l, c);
            r.at(i, j) = v;
        }
    sc.skip_space();
    if (sc.pos != text.size())
        throw ParseError("trailing tokens after matrix", sc.line, sc.col);
    return r;
}

}  // namespace laundry
