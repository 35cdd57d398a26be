#pragma once
// Curve genus, plurigenera, Riemann–Roch on curves, a finite-sample Kodaira
// dimension estimator and the dimension-one pair classification.

#include "mmpkit/exact_lattice.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mmpkit::kodaira {

/// Kodaira dimension; std::nullopt stands for -infinity.
struct KappaEstimate {
    std::optional<long> value;
    std::string note;

    bool minus_infinity() const noexcept { return !value.has_value(); }
    std::string to_string() const { return value ? std::to_string(*value) : "-inf"; }
};

/// (m, P_m) pairs, strictly increasing in m.
class PlurigenusSample {
public:
    explicit PlurigenusSample(std::vector<std::pair<long, Integer>> samples);
    const std::vector<std::pair<long, Integer>>& samples() const noexcept { return samples_; }

private:
    std::vector<std::pair<long, Integer>> samples_;
};

/// (d-1)(d-2)/2 for a smooth plane curve of degree d >= 1.
Integer plane_curve_genus(long degree);

KappaEstimate curve_kappa(long genus);

/// h^0(mK) on a smooth curve of genus g.
Integer curve_plurigenus(long genus, long m);

/// chi(O(D)) = 1 + deg D - g.
Integer riemann_roch_curve(const Integer& degree, long genus);

KappaEstimate estimate_kappa(const PlurigenusSample& samples, std::optional<long> max_dim = std::nullopt);

enum class PairClass { CanonicalOrTerminal, Klt, Lc, NotLc };
std::string_view to_string(PairClass c);

/// Singularities of a pair (X, B) with dim X = 1 from the coefficients of B.
PairClass classify_pair_on_curve(const std::vector<Rational>& coeffs);

/// -(K + B) ample on P^1, i.e. sum of coefficients < 2.
bool fano_pair_on_p1_check(const std::vector<Rational>& coeffs);

} // namespace mmpkit::kodaira
