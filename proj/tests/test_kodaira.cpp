#include "oracles.hpp"

#include "mmpkit/kodaira.hpp"
#include "mmpkit/surface_lattice.hpp"

#include <doctest.h>

using namespace mmpkit;
using namespace mmpkit::kodaira;

namespace {

using Samples = std::vector<std::pair<long, Integer>>;

Errc code_of(auto&& f) {
    try {
        f();
    } catch (const MathError& e) {
        return e.code();
    }
    FAIL("no MathError thrown");
    return Errc::InvalidArgument;
}

Samples subsample(const Samples& s, long l, bool relabel) {
    Samples out;
    for (const auto& [m, p] : s)
        if (m % l == 0) out.emplace_back(relabel ? m / l : m, p);
    return out;
}

Rational q(long p, long d) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("plane_curve_genus examples") {
    CHECK(plane_curve_genus(1) == 0);
    CHECK(plane_curve_genus(2) == 0);
    CHECK(plane_curve_genus(3) == 1);
    CHECK(plane_curve_genus(4) == 3);
    CHECK_THROWS_AS(plane_curve_genus(0), MathError);
}

TEST_CASE("curve_kappa examples") {
    CHECK(curve_kappa(0).minus_infinity());
    CHECK(*curve_kappa(1).value == 0);
    CHECK(*curve_kappa(5).value == 1);
    CHECK(curve_kappa(0).to_string() == "-inf");
}

TEST_CASE("curve_plurigenus examples") {
    CHECK(curve_plurigenus(2, 1) == 2);
    CHECK(curve_plurigenus(2, 2) == 3);
    CHECK(curve_plurigenus(0, 7) == 0);
    CHECK(curve_plurigenus(1, 9) == 1);
}

TEST_CASE("riemann_roch_curve examples") {
    CHECK(riemann_roch_curve(0, 0) == 1);
    CHECK(riemann_roch_curve(2 * 3 - 2, 3) == 2);
    CHECK(riemann_roch_curve(1, 0) == 2);
}

TEST_CASE("estimate_kappa examples") {
    CHECK(estimate_kappa(PlurigenusSample({{1, 0}, {2, 0}, {5, 0}, {10, 0}})).minus_infinity());
    CHECK(*estimate_kappa(PlurigenusSample({{2, 3}, {4, 7}, {8, 15}, {16, 31}})).value == 1);
    CHECK(*estimate_kappa(PlurigenusSample({{2, 5}, {4, 17}, {8, 65}, {16, 257}})).value == 2);
    CHECK(*estimate_kappa(PlurigenusSample({{2, 5}, {4, 17}, {8, 65}, {16, 257}}), 1).value == 1);
    CHECK(*estimate_kappa(PlurigenusSample({{1, 1}, {2, 1}, {3, 1}, {4, 1}})).value == 0);
}

TEST_CASE("estimate_kappa notes") {
    CHECK(estimate_kappa(PlurigenusSample({{2, 5}, {4, 17}})).note.find("unclamped") != std::string::npos);
    CHECK(estimate_kappa(PlurigenusSample({{2, 5}, {4, 17}}), 2).note.find("unclamped") == std::string::npos);
}

TEST_CASE("estimate_kappa input errors") {
    CHECK(code_of([] { estimate_kappa(PlurigenusSample({{1, 0}, {2, 4}})); }) == Errc::InsufficientSamples);
    CHECK(code_of([] { PlurigenusSample({}); }) == Errc::InsufficientSamples);
    CHECK(code_of([] { PlurigenusSample({{2, 1}, {1, 1}}); }) == Errc::InvalidArgument);
    CHECK(code_of([] { PlurigenusSample({{0, 1}}); }) == Errc::InvalidArgument);
    CHECK(code_of([] { PlurigenusSample({{1, -1}}); }) == Errc::InvalidArgument);
}

TEST_CASE("classify_pair_on_curve examples") {
    CHECK(classify_pair_on_curve({}) == PairClass::CanonicalOrTerminal);
    CHECK(classify_pair_on_curve({0, 0}) == PairClass::CanonicalOrTerminal);
    CHECK(classify_pair_on_curve({q(1, 2), q(2, 3)}) == PairClass::Klt);
    CHECK(classify_pair_on_curve({1, q(1, 2)}) == PairClass::Lc);
    CHECK(classify_pair_on_curve({q(3, 2)}) == PairClass::NotLc);
    CHECK(code_of([] { classify_pair_on_curve({q(-1, 2)}); }) == Errc::NegativeCoefficient);
}

TEST_CASE("fano_pair_on_p1_check examples") {
    CHECK(fano_pair_on_p1_check({}));
    CHECK(fano_pair_on_p1_check({1, q(1, 2)}));
    CHECK_FALSE(fano_pair_on_p1_check({1, 1}));
    CHECK(code_of([] { fano_pair_on_p1_check({q(3, 2)}); }) == Errc::CoefficientOutOfRange);
}

TEST_CASE("property: curve plurigenera agree with Riemann-Roch") {
    for (long g = 2; g <= 30; ++g)
        for (long m = 2; m <= 20; ++m) CHECK(curve_plurigenus(g, m) == riemann_roch_curve(m * (2 * g - 2), g));
    for (long g = 0; g <= 30; ++g) CHECK(riemann_roch_curve(2 * g - 2, g) == g - 1);
}

TEST_CASE("property: the estimator recovers curve_kappa for g <= 20") {
    for (long g = 0; g <= 20; ++g) {
        Samples s;
        for (long m = 1; m <= 64; ++m) s.emplace_back(m, curve_plurigenus(g, m));
        const KappaEstimate got = estimate_kappa(PlurigenusSample(s), 1);
        CHECK(got.value == curve_kappa(g).value);
    }
}

TEST_CASE("property: plane genus equals adjunction genus on P2") {
    const auto p2 = surface::make_blowup_p2(0);
    for (long d = 1; d <= 60; ++d) CHECK(plane_curve_genus(d) == surface::adjunction_genus(p2, make_int_vector({d})));
}

TEST_CASE("property: kappa is invariant under passing to multiples") {
    int cases = 0;
    while (cases < 300) {
        const long k = oracle::uniform(-1, 3);   // -1 stands for identically zero data
        const long c = oracle::uniform(1, 5), e = oracle::uniform(0, 5);
        const long top = oracle::uniform(24, 64);
        Samples s;
        for (long m = 1; m <= top; ++m) {
            Integer p = 0;
            if (k == 0) p = c;
            if (k > 0) {
                mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
                p = p * c + e;
            }
            s.emplace_back(m, p);
        }
        const std::optional<long> max_dim = oracle::uniform(0, 1) ? std::optional<long>(3) : std::nullopt;
        const KappaEstimate full = estimate_kappa(PlurigenusSample(s), max_dim);
        if (k < 0) CHECK(full.minus_infinity());
        else CHECK(full.value == k);
        for (long l : {2L, 3L}) {
            CHECK(estimate_kappa(PlurigenusSample(subsample(s, l, false)), max_dim).value == full.value);
            CHECK(estimate_kappa(PlurigenusSample(subsample(s, l, true)), max_dim).value == full.value);
        }
        ++cases;
    }
}

TEST_CASE("property: appending a coefficient never improves the pair class") {
    for (int t = 0; t < 300; ++t) {
        std::vector<Rational> coeffs;
        const long n = oracle::uniform(0, 4);
        for (long i = 0; i < n; ++i) coeffs.push_back(q(oracle::uniform(0, 8), oracle::uniform(1, 4)));
        const PairClass before = classify_pair_on_curve(coeffs);
        coeffs.push_back(q(oracle::uniform(0, 8), oracle::uniform(1, 4)));
        const PairClass after = classify_pair_on_curve(coeffs);
        CHECK(static_cast<int>(after) >= static_cast<int>(before));
    }
}
