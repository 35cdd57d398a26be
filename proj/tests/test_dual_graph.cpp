#include "generators.hpp"

#include "mmpkit/dual_graph.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mmpkit;
using namespace mmpkit::graph;
using namespace gen;

namespace {

DualGraph chain(std::size_t n, long self_int = -2) {
    std::vector<Vertex> v(n, Vertex{0, self_int});
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
    return DualGraph(v, e);
}

DualGraph single(long genus, long self_int) { return DualGraph({Vertex{genus, self_int}}, {}); }

Errc code_of(auto&& f) {
    try {
        f();
    } catch (const MathError& e) {
        return e.code();
    }
    FAIL("no MathError thrown");
    return Errc::InvalidArgument;
}

SingClass oracle_class(const RatVector& d, const BoundaryData& b) {
    bool positive_b = false, b_below_one = true;
    for (const auto& c : b.components()) {
        positive_b |= c.coeff > 0;
        b_below_one &= c.coeff < 1;
    }
    auto all = [&](auto p) { return std::all_of(d.begin(), d.end(), p); };
    if (!positive_b && all([](const Rational& x) { return x > 0; })) return SingClass::TerminalRel;
    if (!positive_b && all([](const Rational& x) { return x >= 0; })) return SingClass::Canonical;
    if (b_below_one && all([](const Rational& x) { return x > -1; })) return SingClass::Klt;
    if (all([](const Rational& x) { return x >= -1; })) return SingClass::Lc;
    return SingClass::NotLc;
}

} // namespace

TEST_CASE("check_contractible examples") {
    CHECK(check_contractible(single(0, -2)));
    CHECK_FALSE(check_contractible(single(0, 0)));
    CHECK(check_contractible(chain(2)));
    CHECK(code_of([] { check_contractible(DualGraph({Vertex{0, -2}, Vertex{0, -2}}, {})); }) == Errc::Disconnected);
    CHECK(code_of([] { check_contractible(DualGraph()); }) == Errc::InvalidGraph);
}

TEST_CASE("graph construction validation") {
    CHECK_THROWS_AS(DualGraph({Vertex{0, -2}}, {Edge{0, 0, 1}}), MathError);
    CHECK_THROWS_AS(DualGraph({Vertex{0, -2}}, {Edge{0, 1, 1}}), MathError);
    CHECK_THROWS_AS(DualGraph({Vertex{-1, -2}}, {}), MathError);
    CHECK(code_of([] { BoundaryData({BoundaryComponent{Rational(3, 2), {{0, 1}}}}); }) ==
          Errc::CoefficientOutOfRange);
    CHECK(code_of([] { BoundaryData({BoundaryComponent{Rational(-1, 2), {{0, 1}}}}); }) ==
          Errc::CoefficientOutOfRange);
}

TEST_CASE("single vertex discrepancies") {
    CHECK(discrepancies(single(0, -1)).d == RatVector{1});
    CHECK(discrepancies(single(0, -1)).klass == SingClass::TerminalRel);
    CHECK(discrepancies(single(0, -2)).d == RatVector{0});
    CHECK(discrepancies(single(0, -2)).klass == SingClass::Canonical);
    CHECK(discrepancies(single(0, -3)).d == RatVector{Rational(-1, 3)});
    CHECK(discrepancies(single(0, -3)).klass == SingClass::Klt);

    const auto g1 = discrepancies(single(1, -1));
    CHECK(g1.d == RatVector{-1});
    CHECK(g1.klass == SingClass::Lc);
    const auto g2 = discrepancies(single(2, -1));
    CHECK(g2.d == RatVector{-3});
    CHECK(g2.klass == SingClass::NotLc);

    CHECK(code_of([] { discrepancies(single(0, 1)); }) == Errc::NotContractible);
}

TEST_CASE("boundary enters the right-hand side") {
    // One (-2)-curve met once by a boundary curve of coefficient 1/2.
    BoundaryData b({BoundaryComponent{Rational(1, 2), {{0, 1}}}});
    const auto r = discrepancies(single(0, -2), b);
    CHECK(r.d == RatVector{Rational(-1, 4)});
    CHECK(r.klass == SingClass::Klt);
    CHECK_FALSE(r.du_val);

    BoundaryData full({BoundaryComponent{Rational(1), {{0, 2}}}});
    const auto lc = discrepancies(single(0, -2), full);
    CHECK(lc.d == RatVector{-1});
    CHECK(lc.klass == SingClass::Lc);

    CHECK(code_of([] {
              discrepancies(single(0, -2), BoundaryData({BoundaryComponent{Rational(1, 2), {{3, 1}}}}));
          }) == Errc::InvalidBoundary);
}

TEST_CASE("Du Val detection examples") {
    auto r = discrepancies(chain(2));
    CHECK(r.d == RatVector{0, 0});
    REQUIRE(r.du_val);
    CHECK(r.du_val->name() == "A2");

    DualGraph d4({Vertex{0, -2}, Vertex{0, -2}, Vertex{0, -2}, Vertex{0, -2}}, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    r = discrepancies(d4);
    CHECK(r.d == RatVector{0, 0, 0, 0});
    CHECK(r.klass == SingClass::Canonical);
    REQUIRE(r.du_val);
    CHECK(r.du_val->name() == "D4");

    CHECK_FALSE(discrepancies(single(0, -3)).du_val);
    // (-2)-curves joined with multiplicity 2 are not negative definite.
    CHECK_FALSE(check_contractible(DualGraph({Vertex{0, -2}, Vertex{0, -2}}, {{0, 1, 2}})));
}

TEST_CASE("blowup_vertex bookkeeping examples") {
    auto [g1, b1] = blowup_vertex(single(0, -2), {}, FreePoint{0});
    REQUIRE(g1.size() == 2);
    CHECK(g1.vertices()[0].self_int == -3);
    CHECK(g1.vertices()[1].self_int == -1);
    CHECK(g1.vertices()[1].genus == 0);
    REQUIRE(g1.edges().size() == 1);
    CHECK(g1.edges()[0].mult == 1);

    auto [g2, b2] = blowup_vertex(chain(2), {}, EdgePoint{0, 1});
    REQUIRE(g2.size() == 3);
    CHECK(g2.vertices()[0].self_int == -3);
    CHECK(g2.vertices()[1].self_int == -3);
    CHECK(g2.vertices()[2].self_int == -1);
    CHECK(matrix_of(g2) == IntMatrix{{-3, 0, 1}, {0, -3, 1}, {1, 1, -1}});

    auto [g3, b3] = blowup_vertex(single(1, -1), {}, FreePoint{0});
    CHECK(g3.vertices()[0].genus == 1);
    CHECK(g3.vertices()[0].self_int == -2);
    CHECK(g3.vertices()[1].genus == 0);
    CHECK(g3.vertices()[1].self_int == -1);

    BoundaryData b({BoundaryComponent{Rational(1, 2), {{0, 1}}}});
    auto [g4, b4] = blowup_vertex(single(0, -2), b, BoundaryPoint{0, 0});
    CHECK(b4.components()[0].meets == std::vector<std::pair<std::size_t, long>>{{1, 1}});
    CHECK(b4.intersection_with(0) == 0);
    CHECK(b4.intersection_with(1) == Rational(1, 2));

    CHECK(code_of([] { blowup_vertex(single(0, -2), {}, FreePoint{4}); }) == Errc::InvalidSite);
    CHECK(code_of([] { blowup_vertex(chain(3), {}, EdgePoint{0, 2}); }) == Errc::InvalidSite);
    CHECK(code_of([] { blowup_vertex(single(0, -2), {}, BoundaryPoint{0, 0}); }) == Errc::InvalidSite);
}

TEST_CASE("property: resolution independence under blowup_vertex") {
    int cases = 0, boundary_sites = 0, edge_sites = 0;
    while (cases < 300) {
        const DualGraph g = random_graph(false);
        const BoundaryData b = random_boundary(g.size());
        const auto before = discrepancies(g, b);

        BlowupSite site = FreePoint{static_cast<std::size_t>(oracle::uniform(0, static_cast<long>(g.size()) - 1))};
        Rational expected = 1;
        const long pick = oracle::uniform(0, 2);
        if (pick == 1 && !g.edges().empty()) {
            const Edge e = g.edges()[static_cast<std::size_t>(oracle::uniform(0, static_cast<long>(g.edges().size()) - 1))];
            site = EdgePoint{e.i, e.j};
            expected += before.d[e.i] + before.d[e.j];
            ++edge_sites;
        } else if (pick == 2 && !b.empty()) {
            const std::size_t k = static_cast<std::size_t>(oracle::uniform(0, static_cast<long>(b.components().size()) - 1));
            const auto& comp = b.components()[k];
            const std::size_t v = comp.meets[static_cast<std::size_t>(oracle::uniform(0, static_cast<long>(comp.meets.size()) - 1))].first;
            site = BoundaryPoint{v, k};
            expected += before.d[v] - comp.coeff;
            ++boundary_sites;
        } else {
            expected += before.d[std::get<FreePoint>(site).vertex];
        }

        const auto [g2, b2] = blowup_vertex(g, b, site);
        const auto after = discrepancies(g2, b2);
        REQUIRE(after.d.size() == g.size() + 1);
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(after.d[i] == before.d[i]);
        CHECK(after.d.back() == expected);
        ++cases;
    }
    CHECK(edge_sites > 20);
    CHECK(boundary_sites > 20);
}

TEST_CASE("property: solver output re-substitutes exactly and classifies by thresholds") {
    for (int t = 0; t < 300; ++t) {
        const DualGraph g = random_graph(false);
        const BoundaryData b = random_boundary(g.size());
        const auto r = discrepancies(g, b);
        CHECK(resubstitutes(g, b, r.d));
        CHECK(r.klass == oracle_class(r.d, b));
    }
}

TEST_CASE("property: minimal resolutions are never terminal and have d <= 0") {
    int klt_like = 0;
    for (int t = 0; t < 300; ++t) {
        const DualGraph g = random_graph(true);
        const auto r = discrepancies(g);
        REQUIRE(r.minimal_resolution);
        for (const auto& x : r.d) CHECK(x <= 0);
        CHECK(r.klass != SingClass::TerminalRel);
        if (r.klass == SingClass::Klt || r.klass == SingClass::Canonical) {
            ++klt_like;
            for (const auto& v : g.vertices()) CHECK(v.genus == 0);
        }
    }
    CHECK(klt_like > 50);
}

TEST_CASE("property: Du Val detection implies zero discrepancies") {
    int hits = 0;
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = static_cast<std::size_t>(oracle::uniform(1, 8));
        std::vector<Edge> es;
        for (std::size_t i = 1; i < n; ++i)
            es.push_back({static_cast<std::size_t>(oracle::uniform(0, static_cast<long>(i) - 1)), i, 1});
        DualGraph g(std::vector<Vertex>(n, Vertex{0, -2}), es);
        if (!sylvester_negative(matrix_of(g))) continue;
        const auto r = discrepancies(g);
        // Negative definite (-2)-trees are exactly the ADE diagrams.
        REQUIRE(r.du_val);
        ++hits;
        for (const auto& x : r.d) CHECK(x == 0);
        CHECK(r.klass == SingClass::Canonical);
    }
    CHECK(hits > 100);
}
