#include "mmpkit/toric_cone.hpp"

#include <algorithm>
#include <set>

namespace mmpkit::toric {

std::string_view to_string(Singularity s) {
    switch (s) {
    case Singularity::Smooth: return "Smooth";
    case Singularity::Terminal: return "Terminal";
    case Singularity::Canonical: return "Canonical";
    case Singularity::KltOnly: return "KltOnly";
    case Singularity::NotQGorenstein: return "NotQGorenstein";
    }
    return "Unknown";
}

namespace {

bool proportional(const IntVector& a, const IntVector& b, int& ratio_sign) {
    // a, b primitive: proportional iff b = a or b = -a.
    IntVector neg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    if (b == a) { ratio_sign = 1; return true; }
    if (b == neg) { ratio_sign = -1; return true; }
    return false;
}

// Integer normal to the rows of a (d-1) x d matrix via signed maximal minors.
IntVector cofactor_normal(const std::vector<const IntVector*>& rows, std::size_t d) {
    IntVector n(d);
    for (std::size_t k = 0; k < d; ++k) {
        IntMatrix sub(d - 1, d - 1);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0, c = 0; j < d; ++j) {
                if (j == k) continue;
                sub(i, c++) = (*rows[i])[j];
            }
        Integer det = determinant(sub);
        n[k] = (k % 2 == 0) ? det : Integer(-det);
    }
    return n;
}

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<IntVector> candidate_facets(const Cone& c) {
    const std::size_t d = c.rank();
    const auto& rays = c.rays();
    std::set<IntVector> out;
    if (d == 1) {
        for (const auto& r : rays) out.insert(r);   // x >= 0 along the ray direction
        if (out.size() > 1) return {};
        return {out.begin(), out.end()};
    }
    for_each_subset(rays.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<const IntVector*> rows;
        for (auto i : idx) rows.push_back(&rays[i]);
        IntVector n = cofactor_normal(rows, d);
        if (std::all_of(n.begin(), n.end(), [](const Integer& x) { return x == 0; })) return;
        n = primitive(n);
        bool pos = false, neg = false;
        for (const auto& r : rays) {
            const int s = sgn(dot(n, r));
            pos |= s > 0;
            neg |= s < 0;
        }
        if (pos && neg) return;
        if (neg)
            for (auto& x : n) x = -x;
        out.insert(n);
    });
    return {out.begin(), out.end()};
}

void require_full_strongly_convex(const Cone& c, std::vector<IntVector>* facets_out = nullptr) {
    const auto& rays = c.rays();
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j) {
            int s = 0;
            if (proportional(rays[i], rays[j], s) && s < 0)
                throw MathError(Errc::NotStronglyConvex, "cone contains the line through " +
                                                             mmpkit::to_string(rays[i]));
        }
    if (rays.empty() || rank(c.ray_matrix()) != c.rank())
        throw MathError(Errc::NotFullDimensional, "rays do not span the ambient lattice");
    auto hs = candidate_facets(c);
    IntMatrix normals(hs.size(), c.rank());
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = 0; j < c.rank(); ++j) normals(i, j) = hs[i][j];
    if (hs.empty() || rank(normals) != c.rank())
        throw MathError(Errc::NotStronglyConvex, "cone contains a linear subspace");
    // Every generator must span an extremal ray: it lies on facets whose
    // normals cut out exactly its line.
    for (const auto& r : rays) {
        std::vector<std::vector<Integer>> on;
        for (const auto& h : hs)
            if (dot(h, r) == 0) on.push_back(h);
        const std::size_t need = c.rank() - 1;
        const bool extremal = need == 0 || (!on.empty() && rank(IntMatrix::from_rows(on)) == need);
        if (!extremal)
            throw MathError(Errc::InvalidCone, "generator " + mmpkit::to_string(r) + " is not an extremal ray");
    }
    if (facets_out) *facets_out = std::move(hs);
}

} // namespace

Cone::Cone(std::size_t rank, std::vector<IntVector> rays) : rank_(rank), rays_(std::move(rays)) {
    if (rank_ == 0) throw MathError(Errc::InvalidCone, "rank must be positive");
    for (const auto& r : rays_) {
        if (r.size() != rank_)
            throw MathError(Errc::DimensionMismatch, "ray " + mmpkit::to_string(r) + " has wrong length");
        if (!is_primitive(r))
            throw MathError(Errc::NotPrimitive, "ray " + mmpkit::to_string(r) + " is not primitive");
    }
    for (std::size_t i = 0; i < rays_.size(); ++i)
        for (std::size_t j = i + 1; j < rays_.size(); ++j)
            if (rays_[i] == rays_[j])
                throw MathError(Errc::InvalidCone, "duplicate ray " + mmpkit::to_string(rays_[i]));
}

IntMatrix Cone::ray_matrix() const {
    IntMatrix m(rays_.size(), rank_);
    for (std::size_t i = 0; i < rays_.size(); ++i)
        for (std::size_t j = 0; j < rank_; ++j) m(i, j) = rays_[i][j];
    return m;
}

std::vector<IntVector> facets(const Cone& c) {
    std::vector<IntVector> hs;
    require_full_strongly_convex(c, &hs);
    return hs;
}

std::optional<SupportFunctional> q_gorenstein_functional(const Cone& c) {
    if (c.rays().empty()) return std::nullopt;
    RatVector ones(c.rays().size(), Rational(1));
    try {
        auto m = solve_consistent(to_rational(c.ray_matrix()), ones);
        if (!m) return std::nullopt;
        return SupportFunctional{std::move(*m)};
    } catch (const MathError& e) {
        // Not full-dimensional: the functional is not unique.
        if (e.code() == Errc::SingularMatrix) return std::nullopt;
        throw;
    }
}

bool contains(const Cone& c, const IntVector& v) {
    for (const auto& h : facets(c))
        if (dot(h, v) < 0) return false;
    return true;
}

std::vector<IntVector> lattice_points_at_or_below_one(const Cone& c, const SupportFunctional& m) {
    const auto hs = facets(c);
    const std::size_t d = c.rank();
    // {x in cone : m(x) <= 1} = conv(0, rays), so its bounding box is spanned
    // by the origin and the generators.
    IntVector lo(d, 0), hi(d, 0);
    for (const auto& r : c.rays())
        for (std::size_t i = 0; i < d; ++i) {
            if (r[i] < lo[i]) lo[i] = r[i];
            if (r[i] > hi[i]) hi[i] = r[i];
        }
    std::vector<IntVector> out;
    IntVector x = lo;
    for (;;) {
        const bool zero = std::all_of(x.begin(), x.end(), [](const Integer& t) { return t == 0; });
        if (!zero && m(x) <= 1 &&
            std::all_of(hs.begin(), hs.end(), [&](const IntVector& h) { return dot(h, x) >= 0; }))
            out.push_back(x);
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (x[i] < hi[i]) {
                ++x[i];
                for (std::size_t j = i + 1; j < d; ++j) x[j] = lo[j];
                break;
            }
            if (i == 0) return out;   // odometer wrapped: box exhausted
        }
    }
}

ToricClass classify_cone(const Cone& c) {
    require_full_strongly_convex(c);
    ToricClass out;
    const std::size_t d = c.rank();
    out.q_factorial = c.rays().size() == d;
    bool smooth = false;
    if (out.q_factorial) {
        const auto factors = smith_normal_form(c.ray_matrix());
        smooth = factors.size() == d &&
                 std::all_of(factors.begin(), factors.end(), [](const Integer& f) { return f == 1; });
    }
    out.functional = q_gorenstein_functional(c);
    if (!out.functional) {
        out.kind = Singularity::NotQGorenstein;
        return out;
    }
    out.gorenstein_index = lcm_of_denominators(out.functional->m);
    const auto& rays = c.rays();
    bool below_one = false;
    for (auto& p : lattice_points_at_or_below_one(c, *out.functional)) {
        if (std::find(rays.begin(), rays.end(), p) != rays.end()) continue;
        if ((*out.functional)(p) < 1) below_one = true;
        out.interior_points.push_back(std::move(p));
    }
    if (smooth)
        out.kind = Singularity::Smooth;
    else if (out.interior_points.empty())
        out.kind = Singularity::Terminal;
    else if (!below_one)
        out.kind = Singularity::Canonical;
    else
        out.kind = Singularity::KltOnly;
    return out;
}

Rational toric_discrepancy(const Cone& c, const IntVector& v) {
    if (v.size() != c.rank()) throw MathError(Errc::DimensionMismatch, "point has wrong length");
    if (!is_primitive(v)) throw MathError(Errc::NotPrimitive, mmpkit::to_string(v) + " is not primitive");
    if (!contains(c, v)) throw MathError(Errc::NotInCone, mmpkit::to_string(v) + " is not in the cone");
    const auto m = q_gorenstein_functional(c);
    if (!m) throw MathError(Errc::NotQGorenstein, "K is not Q-Cartier on this cone");
    return (*m)(v) - 1;
}

} // namespace mmpkit::toric
