#pragma once
// Exact integer/rational linear algebra. Every scalar is a GMP integer or a
// canonical GMP fraction; nothing in this layer rounds.

#include "mmpkit/errors.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace mmpkit {

using Integer = mpz_class;
using Rational = mpq_class;   // always kept canonical: den > 0, gcd(num, den) = 1

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw MathError(Errc::DimensionMismatch, "ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (rows[i].size() != m.cols_)
                throw MathError(Errc::DimensionMismatch, "ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool symmetric() const {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntVector make_int_vector(std::initializer_list<long> values);
RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

IntVector operator*(const IntMatrix& a, const IntVector& x);
RatVector operator*(const RatMatrix& a, const RatVector& x);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const IntVector& b);

/// x^T G y for a symmetric bilinear form G.
Integer bilinear(const IntMatrix& gram, const IntVector& x, const IntVector& y);

/// Solves A x = b exactly. Throws SingularMatrix when det(A) = 0.
RatVector solve_exact(const RatMatrix& a, const RatVector& b);

/// Row-reduces a possibly non-square system A x = b. Returns the unique
/// solution, or std::nullopt when the system is inconsistent. Throws
/// SingularMatrix when it is consistent but underdetermined.
std::optional<RatVector> solve_consistent(const RatMatrix& a, const RatVector& b);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& a);

/// Rank over Q.
std::size_t rank(const IntMatrix& a);

/// Leading-principal-minor test: (-1)^k * minor_k > 0 for every k.
bool is_negative_definite(const IntMatrix& a);

/// Inertia (n_plus, n_minus, n_zero) of a symmetric rational form, via
/// congruence diagonalisation.
struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};
Inertia inertia(const RatMatrix& a);

/// Invariant factors d_1 | d_2 | ... | d_r of A (nonzero ones only).
std::vector<Integer> smith_normal_form(const IntMatrix& a);

/// v / gcd(v). Throws ZeroVector on the zero vector.
IntVector primitive(const IntVector& v);
bool is_primitive(const IntVector& v);

Integer lcm_of_denominators(const RatVector& v);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const IntVector& v);
/// Parses "p/q" or "p"; throws std::invalid_argument on malformed text or a
/// zero denominator. The result is canonical.
Rational parse_rational(const std::string& text);

} // namespace mmpkit
