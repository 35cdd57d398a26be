#include "mmpkit/kodaira.hpp"

#include <algorithm>
#include <cmath>

namespace mmpkit::kodaira {

PlurigenusSample::PlurigenusSample(std::vector<std::pair<long, Integer>> samples)
    : samples_(std::move(samples)) {
    if (samples_.empty()) throw MathError(Errc::InsufficientSamples, "no plurigenus samples");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (samples_[i].first <= 0)
            throw MathError(Errc::InvalidArgument, "m must be positive");
        if (samples_[i].second < 0)
            throw MathError(Errc::InvalidArgument, "P_m must be nonnegative");
        if (i && samples_[i].first <= samples_[i - 1].first)
            throw MathError(Errc::InvalidArgument, "m values must be strictly increasing");
    }
}

Integer plane_curve_genus(long degree) {
    if (degree < 1) throw MathError(Errc::InvalidArgument, "degree must be at least 1");
    const Integer d(degree);
    return (d - 1) * (d - 2) / 2;
}

KappaEstimate curve_kappa(long genus) {
    if (genus < 0) throw MathError(Errc::InvalidArgument, "genus must be nonnegative");
    if (genus == 0) return {std::nullopt, "deg K = -2 < 0"};
    if (genus == 1) return {0L, "K trivial"};
    return {1L, "deg K = 2g - 2 > 0"};
}

Integer curve_plurigenus(long genus, long m) {
    if (genus < 0 || m < 1) throw MathError(Errc::InvalidArgument, "need genus >= 0 and m >= 1");
    if (genus == 0) return 0;
    if (genus == 1) return 1;
    if (m == 1) return genus;
    // deg mK > 2g - 2 for m >= 2, so h^1 vanishes and RR gives (2m-1)(g-1).
    return Integer(2 * m - 1) * (genus - 1);
}

Integer riemann_roch_curve(const Integer& degree, long genus) { return 1 + degree - genus; }

KappaEstimate estimate_kappa(const PlurigenusSample& sample, std::optional<long> max_dim) {
    const auto& s = sample.samples();
    std::vector<std::pair<long, Integer>> positive;
    for (const auto& p : s)
        if (p.second > 0) positive.push_back(p);
    if (positive.empty()) return {std::nullopt, "P_m = 0 for every sampled m"};
    if (positive.size() < 2)
        throw MathError(Errc::InsufficientSamples, "need at least two samples with P_m > 0");

    // Bounded growth: P_m constant over the top half of the sampled m, taking
    // at least two samples so a single value never counts as constant.
    const std::size_t half = std::min(s.size() / 2, s.size() - 2);
    const auto [lo, hi] = std::minmax_element(s.begin() + static_cast<std::ptrdiff_t>(half), s.end(),
                                              [](const auto& a, const auto& b) { return a.second < b.second; });
    if (lo->second == hi->second && lo->second > 0)
        return {0L, "P_m constant over the top " + std::to_string(s.size() - half) + " samples"};

    const auto& [m1, p1] = positive[positive.size() - 2];
    const auto& [m2, p2] = positive[positive.size() - 1];
    const double slope = std::log(Rational(p2, p1).get_d()) / std::log(static_cast<double>(m2) / m1);
    long k = std::lround(slope);
    std::string note = "log-slope over m=" + std::to_string(m1) + ".." + std::to_string(m2);
    k = std::max(k, 1L);
    if (max_dim) {
        k = std::min(k, *max_dim);
        note += ", clamped to [1," + std::to_string(*max_dim) + "]";
    } else {
        note += ", unclamped";
    }
    return {k, note};
}

std::string_view to_string(PairClass c) {
    switch (c) {
    case PairClass::CanonicalOrTerminal: return "CanonicalOrTerminal";
    case PairClass::Klt: return "Klt";
    case PairClass::Lc: return "Lc";
    case PairClass::NotLc: return "NotLc";
    }
    return "Unknown";
}

PairClass classify_pair_on_curve(const std::vector<Rational>& coeffs) {
    for (const auto& b : coeffs)
        if (b < 0) throw MathError(Errc::NegativeCoefficient, "coefficient " + mmpkit::to_string(b) + " is negative");
    auto all = [&](auto pred) { return std::all_of(coeffs.begin(), coeffs.end(), pred); };
    if (all([](const Rational& b) { return b == 0; })) return PairClass::CanonicalOrTerminal;
    if (all([](const Rational& b) { return b < 1; })) return PairClass::Klt;
    if (all([](const Rational& b) { return b <= 1; })) return PairClass::Lc;
    return PairClass::NotLc;
}

bool fano_pair_on_p1_check(const std::vector<Rational>& coeffs) {
    Rational total = 0;
    for (const auto& b : coeffs) {
        if (b < 0 || b > 1)
            throw MathError(Errc::CoefficientOutOfRange, "coefficient " + mmpkit::to_string(b) + " not in [0,1]");
        total += b;
    }
    return total < 2;
}

} // namespace mmpkit::kodaira
