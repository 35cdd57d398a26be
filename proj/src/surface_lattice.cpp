#include "mmpkit/surface_lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mmpkit::surface {

std::string_view to_string(Outcome o) {
    switch (o) {
    case Outcome::MinimalModel: return "MinimalModel";
    case Outcome::MoriFibreP2like: return "MoriFibreP2like";
    case Outcome::MoriFibreRuled: return "MoriFibreRuled";
    case Outcome::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

void SurfaceLattice::validate() const {
    const std::size_t rho = gram.rows();
    if (rho == 0) throw MathError(Errc::InvalidLattice, "rank must be positive");
    if (!gram.symmetric()) throw MathError(Errc::NotSymmetric, "Gram matrix is not symmetric");
    if (canonical.size() != rho)
        throw MathError(Errc::DimensionMismatch, "K has length " + std::to_string(canonical.size()) +
                                                     ", expected " + std::to_string(rho));
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (curves[i].size() != rho)
            throw MathError(Errc::DimensionMismatch, "curve " + std::to_string(i) + " has wrong length");
        adjunction_genus(*this, curves[i]);
    }
}

std::vector<std::string> SurfaceLattice::warnings() const {
    std::vector<std::string> out;
    const auto in = inertia(to_rational(gram));
    if (in.positive != 1 || in.negative + 1 != rank())
        out.push_back("intersection form has signature (" + std::to_string(in.positive) + "," +
                      std::to_string(in.negative) + ") with " + std::to_string(in.zero) +
                      " null directions, not (1," + std::to_string(rank() - 1) + ")");
    return out;
}

SurfaceLattice make_blowup_p2(std::size_t r) {
    SurfaceLattice s;
    s.gram = IntMatrix(r + 1, r + 1);
    s.gram(0, 0) = 1;
    s.canonical = IntVector(r + 1, Integer(1));
    s.canonical[0] = -3;
    for (std::size_t i = 1; i <= r; ++i) {
        s.gram(i, i) = -1;
        IntVector e(r + 1);
        e[i] = 1;
        s.curves.push_back(std::move(e));
    }
    IntVector h(r + 1);
    h[0] = 1;
    s.curves.push_back(std::move(h));
    s.label = r == 0 ? "P2" : "Bl_" + std::to_string(r) + " P2";
    return s;
}

SurfaceLattice make_quadric() {
    SurfaceLattice s;
    s.gram = IntMatrix{{0, 1}, {1, 0}};
    s.canonical = make_int_vector({-2, -2});
    s.curves = {make_int_vector({1, 0}), make_int_vector({0, 1})};
    s.label = "P1xP1";
    return s;
}

Integer adjunction_genus(const SurfaceLattice& s, const IntVector& c) {
    IntVector ck(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) ck[i] = c[i] + s.canonical[i];
    const Integer twice = s.dot(c, ck);
    if (twice % 2 != 0)
        throw MathError(Errc::NonIntegralGenus, "C.(C+K) is odd for C = " + mmpkit::to_string(c));
    return 1 + twice / 2;
}

namespace {

// Integer points x with q(x) <= radius for a positive definite rational form q,
// by Fincke–Pohst recursion on the exact decomposition
//   q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2.
std::vector<IntVector> short_vectors(const RatMatrix& form, const Rational& radius) {
    const std::size_t n = form.rows();
    RatMatrix q = form;
    for (std::size_t i = 0; i < n; ++i) {
        if (q(i, i) <= 0) throw MathError(Errc::UnboundedSearch, "search form is not positive definite");
        for (std::size_t j = i + 1; j < n; ++j) {
            q(j, i) = q(i, j);
            q(i, j) /= q(i, i);
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
    }

    std::vector<IntVector> out;
    IntVector x(n);
    std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level, const Rational& budget) {
        const std::size_t i = level - 1;
        Rational centre = 0;
        for (std::size_t j = i + 1; j < n; ++j) centre -= q(i, j) * x[j];
        auto cost = [&](const Integer& v) -> Rational {
            const Rational t = v - centre;
            return q(i, i) * t * t;
        };
        Integer start;
        mpz_fdiv_q(start.get_mpz_t(), centre.get_num_mpz_t(), centre.get_den_mpz_t());
        auto visit = [&](const Integer& v) {
            const Rational c = cost(v);
            if (c > budget) return false;
            x[i] = v;
            if (i == 0) out.push_back(x);
            else descend(i, budget - c);
            return true;
        };
        // q is convex in x_i, so admissible values form one interval around the centre.
        for (Integer v = start; visit(v); --v) {}
        for (Integer v = start + 1; visit(v); ++v) {}
    };
    if (n > 0) descend(n, radius);
    return out;
}

} // namespace

std::vector<IntVector> enumerate_minus_one_classes(const SurfaceLattice& s, std::optional<long> bound) {
    s.validate();
    const std::size_t rho = s.rank();
    const auto in = inertia(to_rational(s.gram));
    const bool hyperbolic = in.positive == 1 && in.negative + 1 == rho;
    const Integer k2 = s.square(s.canonical);

    // Choose a class h with h^2 > 0 and a cap T on |h.C|. On a hyperbolic
    // lattice P(x) = 2 (h.x)^2 / h^2 - x^2 is positive definite, and every
    // candidate has P(C) = 2 (h.C)^2 / h^2 + 1.
    IntVector h;
    Integer cap;
    if (hyperbolic && k2 > 0) {
        h = s.canonical;
        cap = 1;
    } else {
        if (!bound)
            throw MathError(Errc::UnboundedSearch,
                            "K^2 <= 0 or the form is not hyperbolic; an explicit search bound is required");
        if (!hyperbolic)
            throw MathError(Errc::UnboundedSearch, "form is not of signature (1, rho-1); cannot bound the search");
        if (*bound < 0) throw MathError(Errc::UnboundedSearch, "search bound must be nonnegative");
        IntVector e0(rho);
        e0[0] = 1;
        if (s.square(e0) > 0) {
            h = e0;
        } else {
            auto it = std::find_if(s.curves.begin(), s.curves.end(),
                                   [&](const IntVector& c) { return s.square(c) > 0; });
            if (it == s.curves.end())
                throw MathError(Errc::UnboundedSearch, "no class of positive square to polarise the search");
            h = *it;
        }
        cap = *bound;
    }
    const IntVector gh = s.gram * h;
    const Rational h2(s.square(h));
    RatMatrix form(rho, rho);
    for (std::size_t i = 0; i < rho; ++i)
        for (std::size_t j = 0; j < rho; ++j) form(i, j) = 2 * Rational(gh[i] * gh[j]) / h2 - s.gram(i, j);
    const Rational radius = 2 * Rational(cap * cap) / h2 + 1;

    std::vector<IntVector> out;
    for (auto& c : short_vectors(form, radius))
        if (s.square(c) == -1 && s.dot(s.canonical, c) == -1 && abs(s.dot(h, c)) <= cap)
            out.push_back(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
}

IntVector Contraction::push_forward(const IntVector& x) const {
    const Integer xc = bilinear(old_gram, x, contracted);
    IntVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + xc * contracted[i];
    return to_new * y;
}

Contraction castelnuovo_contract_detailed(const SurfaceLattice& s, const IntVector& c) {
    s.validate();
    if (c.size() != s.rank()) throw MathError(Errc::DimensionMismatch, "class has wrong length");
    if (s.square(c) != -1 || s.dot(s.canonical, c) != -1)
        throw MathError(Errc::NotMinusOneClass, mmpkit::to_string(c) + " does not satisfy C^2 = K.C = -1");
    const std::size_t rho = s.rank();
    const IntVector w = s.gram * c;   // C^perp = ker(w^T); gcd(w) = 1 because w.C = -1

    Contraction out;
    out.contracted = c;
    out.old_gram = s.gram;
    out.basis = IntMatrix(rho, rho - 1);
    out.to_new = IntMatrix(rho - 1, rho);

    std::size_t pivot = rho;
    for (std::size_t k = rho; k-- > 0;)
        if (abs(w[k]) == 1) { pivot = k; break; }
    if (pivot != rho) {
        // Basis e_i - w_i w_k e_k (i != k); coordinates are the entries off k.
        for (std::size_t i = 0, col = 0; i < rho; ++i) {
            if (i == pivot) continue;
            out.basis(i, col) = 1;
            out.basis(pivot, col) = -w[i] * w[pivot];
            out.to_new(col, i) = 1;
            ++col;
        }
    } else {
        // Unimodular U with w^T U = e_0^T by column Euclid; track U^{-1} too.
        IntMatrix u = IntMatrix::identity(rho), uinv = IntMatrix::identity(rho);
        IntVector r = w;
        for (;;) {
            std::size_t p = rho;
            for (std::size_t i = 0; i < rho; ++i)
                if (r[i] != 0 && (p == rho || abs(r[i]) < abs(r[p]))) p = i;
            bool single = true;
            for (std::size_t j = 0; j < rho; ++j) {
                if (j == p || r[j] == 0) continue;
                single = false;
                const Integer q = r[j] / r[p];
                r[j] -= q * r[p];
                for (std::size_t i = 0; i < rho; ++i) u(i, j) -= q * u(i, p);
                for (std::size_t i = 0; i < rho; ++i) uinv(p, i) += q * uinv(j, i);
            }
            if (single) {
                if (p != 0) {
                    std::swap(r[p], r[0]);
                    for (std::size_t i = 0; i < rho; ++i) std::swap(u(i, p), u(i, 0));
                    for (std::size_t i = 0; i < rho; ++i) std::swap(uinv(p, i), uinv(0, i));
                }
                if (r[0] < 0) {
                    r[0] = -r[0];
                    for (std::size_t i = 0; i < rho; ++i) u(i, 0) = -u(i, 0);
                    for (std::size_t i = 0; i < rho; ++i) uinv(0, i) = -uinv(0, i);
                }
                break;
            }
        }
        for (std::size_t i = 0; i < rho; ++i)
            for (std::size_t j = 1; j < rho; ++j) {
                out.basis(i, j - 1) = u(i, j);
                out.to_new(j - 1, i) = uinv(j, i);
            }
    }

    SurfaceLattice& t = out.lattice;
    t.gram = out.basis.transposed() * (s.gram * out.basis);
    IntVector kc(rho);
    for (std::size_t i = 0; i < rho; ++i) kc[i] = s.canonical[i] - c[i];   // pullback of the new K
    t.canonical = out.to_new * kc;
    for (const auto& x : s.curves) {
        if (x == c) continue;
        IntVector y = out.push_forward(x);
        if (std::all_of(y.begin(), y.end(), [](const Integer& v) { return v == 0; })) continue;
        if (std::find(t.curves.begin(), t.curves.end(), y) == t.curves.end()) t.curves.push_back(std::move(y));
    }
    t.label = s.label.empty() ? "contracted" : s.label + " / " + mmpkit::to_string(c);
    return out;
}

SurfaceLattice castelnuovo_contract(const SurfaceLattice& s, const IntVector& c) {
    return castelnuovo_contract_detailed(s, c).lattice;
}

MmpTrace run_classical_mmp(const SurfaceLattice& s, std::optional<long> bound) {
    s.validate();
    MmpTrace trace;
    SurfaceLattice cur = s;
    for (;;) {
        const auto classes = enumerate_minus_one_classes(cur, bound);
        if (classes.empty()) break;
        const std::size_t before = cur.rank();
        cur = castelnuovo_contract(cur, classes.front());
        trace.steps.push_back({classes.front(), before, cur.rank()});
    }

    for (const auto& f : cur.curves)
        if (cur.square(f) == 0 && cur.dot(cur.canonical, f) < 0) {
            trace.outcome = Outcome::MoriFibreRuled;
            trace.fibre = f;
            break;
        }
    if (trace.outcome == Outcome::Inconclusive && cur.rank() == 1 && cur.gram(0, 0) > 0 &&
        cur.canonical[0] * cur.gram(0, 0) < 0)
        trace.outcome = Outcome::MoriFibreP2like;
    if (trace.outcome == Outcome::Inconclusive &&
        std::all_of(cur.curves.begin(), cur.curves.end(),
                    [&](const IntVector& c) { return cur.dot(cur.canonical, c) >= 0; })) {
        trace.outcome = Outcome::MinimalModel;
        trace.notes.push_back("K nef relative to the supplied curve list only");
    }
    if (trace.outcome == Outcome::MoriFibreRuled && cur.rank() > 2)
        trace.notes.push_back("fibre extremality not certified above rank 2; verdict is heuristic");
    if (trace.outcome == Outcome::Inconclusive)
        trace.notes.push_back("no (-1)-class left, K not nef on known curves and no K-negative fibre class known");
    for (auto& w : cur.warnings()) trace.notes.push_back(std::move(w));
    trace.final_lattice = std::move(cur);
    return trace;
}

ConeRays cone_rays_rank2(const SurfaceLattice& s) {
    if (s.rank() != 2) throw MathError(Errc::NotRank2, "cone rays need a rank-2 lattice");
    if (s.curves.empty()) throw MathError(Errc::EmptyCurveList, "no curve classes supplied");
    std::set<IntVector> dirs;
    for (const auto& c : s.curves) {
        if (c.size() != 2) throw MathError(Errc::DimensionMismatch, "curve has wrong length");
        if (c[0] != 0 || c[1] != 0) dirs.insert(primitive(c));
    }
    if (dirs.empty()) throw MathError(Errc::ConeNotPointed, "all curve classes are zero");
    auto det = [](const IntVector& a, const IntVector& b) -> Integer { return a[0] * b[1] - a[1] * b[0]; };
    auto opposite = [](const IntVector& a, const IntVector& b) { return a[0] == -b[0] && a[1] == -b[1]; };
    std::optional<IntVector> first, second;
    for (const auto& u : dirs) {
        bool is_first = true, is_second = true;
        for (const auto& v : dirs) {
            if (opposite(u, v)) is_first = is_second = false;
            if (det(u, v) < 0) is_first = false;
            if (det(v, u) < 0) is_second = false;
        }
        if (is_first) first = u;
        if (is_second) second = u;
    }
    if (!first || !second) throw MathError(Errc::ConeNotPointed, "curve classes do not span a pointed cone");
    return {*first, *second};
}

bool is_nef(const SurfaceLattice& s, const IntVector& d) {
    if (s.curves.empty()) throw MathError(Errc::EmptyCurveList, "no curve classes supplied");
    return std::all_of(s.curves.begin(), s.curves.end(), [&](const IntVector& c) { return s.dot(d, c) >= 0; });
}

bool is_ample_kleiman(const SurfaceLattice& s, const IntVector& d) {
    if (s.curves.empty()) throw MathError(Errc::EmptyCurveList, "no curve classes supplied");
    return s.square(d) > 0 &&
           std::all_of(s.curves.begin(), s.curves.end(), [&](const IntVector& c) { return s.dot(d, c) > 0; });
}

Rational riemann_roch_surface(const SurfaceLattice& s, const IntVector& d, const Integer& chi0) {
    IntVector dk(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) dk[i] = d[i] - s.canonical[i];
    Rational chi(s.dot(d, dk), 2);
    chi.canonicalize();
    return chi + chi0;
}

} // namespace mmpkit::surface
