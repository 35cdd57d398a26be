#include "mmpkit/exact_lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mmpkit {

IntVector make_int_vector(std::initializer_list<long> values) {
    IntVector v;
    v.reserve(values.size());
    for (long x : values) v.emplace_back(x);
    return v;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

RatVector to_rational(const IntVector& v) {
    RatVector r;
    r.reserve(v.size());
    for (const auto& x : v) r.emplace_back(x);
    return r;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
    if (a.cols() != x.size()) throw MathError(Errc::DimensionMismatch, "matrix-vector product");
    IntVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
    if (a.cols() != x.size()) throw MathError(Errc::DimensionMismatch, "matrix-vector product");
    RatVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw MathError(Errc::DimensionMismatch, "matrix product");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw MathError(Errc::DimensionMismatch, "dot product");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const RatVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw MathError(Errc::DimensionMismatch, "dot product");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Integer bilinear(const IntMatrix& gram, const IntVector& x, const IntVector& y) {
    return dot(x, gram * y);
}

namespace {

// Gauss-Jordan on [A | b]. Returns the pivot columns; `m` is left in reduced
// row echelon form.
std::vector<std::size_t> reduce(RatMatrix& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

RatMatrix augment(const RatMatrix& a, const RatVector& b) {
    if (a.rows() != b.size()) throw MathError(Errc::DimensionMismatch, "right-hand side length");
    RatMatrix m(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        m(i, a.cols()) = b[i];
    }
    return m;
}

} // namespace

RatVector solve_exact(const RatMatrix& a, const RatVector& b) {
    if (!a.square()) throw MathError(Errc::DimensionMismatch, "solve_exact needs a square matrix");
    RatMatrix m = augment(a, b);
    const auto pivots = reduce(m, a.cols());
    if (pivots.size() != a.cols()) throw MathError(Errc::SingularMatrix, "determinant is zero");
    RatVector x(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) x[i] = m(i, a.cols());
    return x;
}

std::optional<RatVector> solve_consistent(const RatMatrix& a, const RatVector& b) {
    RatMatrix m = augment(a, b);
    const auto pivots = reduce(m, a.cols());
    for (std::size_t i = pivots.size(); i < m.rows(); ++i)
        if (m(i, a.cols()) != 0) return std::nullopt;
    if (pivots.size() != a.cols())
        throw MathError(Errc::SingularMatrix, "system is underdetermined");
    RatVector x(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) x[i] = m(i, a.cols());
    return x;
}

Integer determinant(const IntMatrix& a) {
    if (!a.square()) throw MathError(Errc::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) {
    RatMatrix m = to_rational(a);
    return reduce(m, m.cols()).size();
}

bool is_negative_definite(const IntMatrix& a) {
    if (!a.symmetric()) throw MathError(Errc::NotSymmetric, "intersection form must be symmetric");
    const std::size_t n = a.rows();
    // Bareiss without pivoting: after step k the (k,k) entry is the leading
    // (k+1)x(k+1) principal minor.
    IntMatrix m = a;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const Integer& minor = m(k, k);
        const int expected = (k % 2 == 0) ? -1 : 1;
        if (sgn(minor) != expected) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return true;
}

Inertia inertia(const RatMatrix& a) {
    if (!a.symmetric()) throw MathError(Errc::NotSymmetric, "inertia needs a symmetric form");
    RatMatrix m = a;
    const std::size_t n = m.rows();
    Inertia out;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && m(i, i) != 0) { p = i; break; }
        if (p == n) {
            // No usable diagonal entry: x_i <- x_i + x_j creates 2 m_ij on the diagonal.
            std::size_t bi = n, bj = n;
            for (std::size_t i = 0; i < n && bi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!done[i] && !done[j] && m(i, j) != 0) { bi = i; bj = j; break; }
            if (bi == n) break;
            for (std::size_t k = 0; k < n; ++k) m(bi, k) += m(bj, k);
            for (std::size_t k = 0; k < n; ++k) m(k, bi) += m(k, bj);
            p = bi;
        }
        const Rational piv = m(p, p);
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || i == p || m(i, p) == 0) continue;
            const Rational f = m(i, p) / piv;
            for (std::size_t k = 0; k < n; ++k) m(i, k) -= f * m(p, k);
            for (std::size_t k = 0; k < n; ++k) m(k, i) -= f * m(k, p);
        }
        done[p] = true;
        if (piv > 0) ++out.positive; else ++out.negative;
    }
    out.zero = n - out.positive - out.negative;
    return out;
}

std::vector<Integer> smith_normal_form(const IntMatrix& a) {
    IntMatrix m = a;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        auto locate = [&](std::size_t& pi, std::size_t& pj) {
            bool found = false;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m(i, j) != 0 && (!found || abs(m(i, j)) < abs(m(pi, pj)))) {
                        pi = i; pj = j; found = true;
                    }
            return found;
        };
        std::size_t pi = t, pj = t;
        if (!locate(pi, pj)) break;
        for (;;) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(pi, j), m(t, j));
            for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, pj), m(i, t));
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
                if (m(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
                if (m(t, j) != 0) clean = false;
            }
            if (clean) {
                // Divisibility: fold any entry not divisible by the pivot into row t.
                std::size_t bad = rows;
                for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (m(i, j) % m(t, t) != 0) { bad = i; break; }
                if (bad == rows) break;
                for (std::size_t j = t; j < cols; ++j) m(t, j) += m(bad, j);
            }
            pi = t; pj = t;
            locate(pi, pj);
        }
        diag.push_back(abs(m(t, t)));
    }
    return diag;
}

IntVector primitive(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) throw MathError(Errc::ZeroVector, "primitive() of the zero vector");
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

bool is_primitive(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g == 1;
}

Integer lcm_of_denominators(const RatVector& v) {
    Integer l = 1;
    for (const auto& q : v) l = lcm(l, q.get_den());
    return l;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& part) {
        std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (part.size() == start) throw std::invalid_argument("malformed rational '" + text + "'");
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw std::invalid_argument("malformed rational '" + text + "'");
        return Integer(part[0] == '+' ? part.substr(1) : part);
    };
    Integer num = parse_int(text.substr(0, slash));
    Integer den = slash == std::string::npos ? Integer(1) : parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace mmpkit
