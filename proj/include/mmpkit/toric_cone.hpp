#pragma once
// Toric singularities from cone data: regularity, Q-factoriality,
// Q-Gorenstein support functional and the terminal/canonical tests.

#include "mmpkit/exact_lattice.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace mmpkit::toric {

/// Rational polyhedral cone in N_R = R^d given by its primitive ray generators.
/// Construction validates primitivity, shape and pairwise non-proportionality;
/// convexity properties are checked by the operations that need them.
class Cone {
public:
    Cone(std::size_t rank, std::vector<IntVector> rays);

    std::size_t rank() const noexcept { return rank_; }
    const std::vector<IntVector>& rays() const noexcept { return rays_; }
    IntMatrix ray_matrix() const;   // one ray per row

private:
    std::size_t rank_;
    std::vector<IntVector> rays_;
};

/// m in M_Q with m(P_i) = 1 on every ray generator.
struct SupportFunctional {
    RatVector m;
    Rational operator()(const IntVector& p) const { return dot(m, p); }
};

enum class Singularity { Smooth, Terminal, Canonical, KltOnly, NotQGorenstein };
std::string_view to_string(Singularity s);

struct ToricClass {
    Singularity kind = Singularity::NotQGorenstein;
    bool q_factorial = false;
    std::optional<Integer> gorenstein_index;   // lcm of denominators of m
    std::optional<SupportFunctional> functional;
    std::vector<IntVector> interior_points;    // lattice points with m <= 1 other than generators
};

/// Inward primitive facet normals h_j with cone = { x : h_j(x) >= 0 }, sorted
/// lexicographically.
std::vector<IntVector> facets(const Cone& c);

std::optional<SupportFunctional> q_gorenstein_functional(const Cone& c);

/// Nonzero lattice points P in the cone with m(P) <= 1, lexicographic order.
std::vector<IntVector> lattice_points_at_or_below_one(const Cone& c, const SupportFunctional& m);

bool contains(const Cone& c, const IntVector& v);

ToricClass classify_cone(const Cone& c);

/// m(v) - 1, the discrepancy of the divisor from the star subdivision at v.
Rational toric_discrepancy(const Cone& c, const IntVector& v);

} // namespace mmpkit::toric
