#pragma once

#include <string>
#include <vector>

namespace laundry {

// Integer Laurent polynomial in one variable t. Stored as the coefficient
// vector of t^lo, t^lo+1, ... with nonzero first and last entries; the zero
// polynomial has an empty vector.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long constant);                       // constant
    LaurentPoly(int lo, std::vector<long long> coeffs);    // trims zeros

    static LaurentPoly t(int power, long long coeff = 1);

    bool is_zero() const { return c_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + (int)c_.size() - 1; }
    const std::vector<long long>& coeffs() const { return c_; }
    long long coeff(int power) const;

    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;

    // Exact division; throws InternalError if the remainder is nonzero.
    LaurentPoly divide_exact(const LaurentPoly& d) const;

    // Multiply by +-t^k so the constant term is nonzero and the leading
    // coefficient positive; zero stays zero. Makes equality-up-to-units
    // a literal equality.
    LaurentPoly unit_normalized() const;

    long long eval(long long x) const;  // evaluation at an integer, exact

    // Ascending coefficients from degree lo, space separated ("1 -1 1").
    std::string to_string() const;

private:
    int lo_ = 0;
    std::vector<long long> c_;
    void trim();
};

// Exact determinant of a square Laurent polynomial matrix (row-major),
// fraction-free elimination over the polynomial ring.
LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m);

}  // namespace laundry
