#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace torus {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense exact integer matrix, row-major.  Matrices with zero rows or zero
// columns are legal and denote maps to or from the trivial lattice.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix negated() const;
    IntMatrix power(std::size_t k) const; // square matrices only

    bool is_zero() const;
    bool is_identity() const;

    // Exact determinant via fraction-free (Bareiss) elimination.
    Int determinant() const;

    std::vector<Int> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<Int>& v);

    // Matrix acting on a single vector.
    std::vector<Int> apply(const std::vector<Int>& v) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> e_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// [a | b] and [a ; b].  Stacking against an empty matrix is allowed as long
// as the shared dimension agrees.
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

} // namespace torus
