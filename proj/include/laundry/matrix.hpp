#pragma once

#include <string>
#include <vector>

namespace laundry {

// Dense integer matrix. Entries stay tiny (linking data and congruence
// witnesses), but determinants are computed exactly, so intermediates are
// range-checked against 64-bit overflow.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool square() const { return rows_ == cols_; }

    long long& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    long long at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const IntMat&) const = default;

    IntMat transposed() const;
    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat operator*(const IntMat& o) const;

    bool is_symmetric() const;
    bool is_antisymmetric() const;

    // Exact determinant (fraction-free elimination).
    long long det() const;

    // Delete one row and one column.
    IntMat without(int row, int col) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<long long> a_;
};

// Bit-exact matrix text format: first line the size m, then m lines of m
// space-separated integers. The empty matrix is the single line "0".
std::string to_text(const IntMat& m);
IntMat mat_from_text(const std::string& text);

}  // namespace laundry
