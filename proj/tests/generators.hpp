#pragma once
// Seeded random inputs shared by the property tests and the acceptance suite.

#include "oracles.hpp"

#include "mmpkit/dual_graph.hpp"
#include "mmpkit/surface_lattice.hpp"

#include <algorithm>

namespace gen {

using namespace mmpkit;
using graph::BoundaryComponent;
using graph::BoundaryData;
using graph::DualGraph;
using graph::Edge;
using graph::Vertex;
using surface::SurfaceLattice;

// Intersection matrix assembled directly from the vertex and edge lists.
inline IntMatrix matrix_of(const DualGraph& g) {
    IntMatrix m(g.size(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i) m(i, i) = g.vertices()[i].self_int;
    for (const auto& e : g.edges()) {
        m(e.i, e.j) += e.mult;
        m(e.j, e.i) += e.mult;
    }
    return m;
}

inline bool sylvester_negative(const IntMatrix& m) {
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        const Integer d = oracle::leading_minor(m, k);
        if ((k % 2 == 1) ? d >= 0 : d <= 0) return false;
    }
    return true;
}

// Plugs d back into sum_i d_i E_i.E_j = 2p_a - 2 - E_j^2 + B.E_j.
inline bool resubstitutes(const DualGraph& g, const BoundaryData& b, const RatVector& d) {
    const IntMatrix m = matrix_of(g);
    for (std::size_t j = 0; j < g.size(); ++j) {
        Rational lhs = 0;
        for (std::size_t i = 0; i < g.size(); ++i) lhs += d[i] * m(i, j);
        Rational rhs = 2 * g.vertices()[j].genus - 2 - g.vertices()[j].self_int;
        for (const auto& c : b.components())
            for (const auto& [v, mult] : c.meets)
                if (v == j) rhs += c.coeff * mult;
        if (lhs != rhs) return false;
    }
    return true;
}

inline std::size_t pick(std::size_t n) { return static_cast<std::size_t>(oracle::uniform(0, static_cast<long>(n) - 1)); }

inline Rational random_coeff() {
    const long q = oracle::uniform(1, 6);
    Rational c(oracle::uniform(0, q), q);
    c.canonicalize();
    return c;
}

// Random connected graph; trees with an occasional extra edge.
inline DualGraph random_graph(bool minimal) {
    for (;;) {
        const std::size_t n = static_cast<std::size_t>(oracle::uniform(1, 5));
        std::vector<Vertex> vs(n);
        for (auto& v : vs) {
            v.genus = oracle::uniform(0, 9) < 8 ? 0 : oracle::uniform(1, 2);
            const long top = minimal ? std::min(2 * v.genus - 2, -1L) : -1;
            v.self_int = oracle::uniform(-6, top);
        }
        std::vector<Edge> es;
        for (std::size_t i = 1; i < n; ++i)
            es.push_back({static_cast<std::size_t>(oracle::uniform(0, static_cast<long>(i) - 1)), i,
                          oracle::uniform(0, 5) == 0 ? 2 : 1});
        if (n >= 3 && oracle::uniform(0, 4) == 0) es.push_back({0, n - 1, 1});
        DualGraph g(vs, es);
        if (sylvester_negative(matrix_of(g))) return g;
    }
}

inline BoundaryData random_boundary(std::size_t n) {
    std::vector<BoundaryComponent> comps(static_cast<std::size_t>(oracle::uniform(0, 2)));
    for (auto& c : comps) {
        c.coeff = random_coeff();
        const long k = oracle::uniform(1, 2);
        for (long t = 0; t < k; ++t)
            c.meets.emplace_back(static_cast<std::size_t>(oracle::uniform(0, static_cast<long>(n) - 1)),
                                 oracle::uniform(1, 2));
    }
    return BoundaryData(comps);
}

// P^1 x P^1 blown up at k points: basis (f1, f2, E_1..E_k).
inline SurfaceLattice blown_up_quadric(std::size_t k) {
    SurfaceLattice s;
    s.gram = IntMatrix(k + 2, k + 2);
    s.gram(0, 1) = s.gram(1, 0) = 1;
    for (std::size_t i = 0; i < k; ++i) s.gram(i + 2, i + 2) = -1;
    s.canonical = IntVector(k + 2, Integer(1));
    s.canonical[0] = s.canonical[1] = -2;
    for (std::size_t i = 0; i < k + 2; ++i) {
        IntVector e(k + 2);
        e[i] = 1;
        s.curves.push_back(e);
    }
    s.label = "quadric blown up";
    return s;
}

// Unimodular U with its inverse, as a product of elementary column operations.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(std::size_t n, int ops) {
    IntMatrix u = IntMatrix::identity(n), inv = IntMatrix::identity(n);
    if (n < 2) return {u, inv};
    for (int t = 0; t < ops; ++t) {
        const auto i = static_cast<std::size_t>(oracle::uniform(0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(oracle::uniform(0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        const long k = oracle::uniform(-2, 2);
        // U <- U (I + k e_j e_i^T): column i += k column j. Inverse: row j -= k row i.
        for (std::size_t r = 0; r < n; ++r) u(r, i) += k * u(r, j);
        for (std::size_t c = 0; c < n; ++c) inv(j, c) -= k * inv(i, c);
    }
    return {u, inv};
}

// The same surface written in the basis given by the columns of U.
inline SurfaceLattice change_basis(const SurfaceLattice& s, const IntMatrix& u, const IntMatrix& inv) {
    SurfaceLattice t;
    t.gram = u.transposed() * s.gram * u;
    t.canonical = inv * s.canonical;
    for (const auto& c : s.curves) t.curves.push_back(inv * c);
    t.label = s.label;
    return t;
}

inline SurfaceLattice random_rational_surface() {
    SurfaceLattice base = oracle::uniform(0, 3) == 0
                              ? blown_up_quadric(static_cast<std::size_t>(oracle::uniform(0, 5)))
                              : surface::make_blowup_p2(static_cast<std::size_t>(oracle::uniform(1, 7)));
    auto [u, inv] = random_unimodular(base.rank(), static_cast<int>(oracle::uniform(0, 6)));
    return change_basis(base, u, inv);
}

inline IntVector random_vector(std::size_t n, long range) {
    IntVector v(n);
    for (auto& x : v) x = oracle::uniform(-range, range);
    return v;
}

} // namespace gen
