#include "torus/int_matrix.hpp"

#include "torus/errors.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace torus {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw ValidationError("ragged initializer for IntMatrix");
        for (const auto& x : row)
            e_.push_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw ValidationError("matrix product dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ValidationError("matrix sum dimension mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        out.e_[i] = e_[i] + rhs.e_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ValidationError("matrix difference dimension mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        out.e_[i] = e_[i] - rhs.e_[i];
    return out;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        out.e_[i] = -e_[i];
    return out;
}

IntMatrix IntMatrix::power(std::size_t k) const {
    if (rows_ != cols_)
        throw ValidationError("power of a non-square matrix");
    IntMatrix acc = identity(rows_);
    for (std::size_t i = 0; i < k; ++i)
        acc = acc * (*this);
    return acc;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0)
            return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_)
        throw ValidationError("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0)
        return 1;
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t pivot = k;
            while (pivot < n && m(pivot, k) == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    Int det = m(n - 1, n - 1);
    return sign < 0 ? Int(-det) : det;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

void IntMatrix::set_column(std::size_t j, const std::vector<Int>& v) {
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = v[i];
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_)
        throw ValidationError("matrix-vector dimension mismatch");
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i] += (*this)(i, j) * v[j];
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m(i, j);
    }
    os << "] (" << m.rows() << "x" << m.cols() << ")";
    return os;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() == 0 && a.rows() == 0)
        return b;
    if (b.cols() == 0 && b.rows() == 0)
        return a;
    if (a.rows() != b.rows())
        throw ValidationError("hstack row mismatch");
    IntMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() == 0 && a.rows() == 0)
        return b;
    if (b.cols() == 0 && b.rows() == 0)
        return a;
    if (a.cols() != b.cols())
        throw ValidationError("vstack column mismatch");
    IntMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(a.rows() + i, j) = b(i, j);
    return out;
}

} // namespace torus
