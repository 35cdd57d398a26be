#include "mmpkit/dual_graph.hpp"

#include <algorithm>
#include <numeric>

namespace mmpkit::graph {

std::string_view to_string(SingClass c) {
    switch (c) {
    case SingClass::TerminalRel: return "TerminalRel";
    case SingClass::Canonical: return "Canonical";
    case SingClass::Klt: return "Klt";
    case SingClass::Lc: return "Lc";
    case SingClass::NotLc: return "NotLc";
    }
    return "Unknown";
}

std::string DuVal::name() const {
    const char* f = family == Family::A ? "A" : family == Family::D ? "D" : "E";
    return f + std::to_string(n);
}

DualGraph::DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (vertices_[v].genus < 0)
            throw MathError(Errc::InvalidGraph, "vertex " + std::to_string(v) + " has negative genus");
    for (const auto& e : edges_) {
        if (e.i >= vertices_.size() || e.j >= vertices_.size())
            throw MathError(Errc::InvalidGraph, "edge endpoint out of range");
        if (e.i == e.j)
            throw MathError(Errc::InvalidGraph, "self-loop at vertex " + std::to_string(e.i));
        if (e.mult <= 0)
            throw MathError(Errc::InvalidGraph, "edge multiplicity must be positive");
    }
}

IntMatrix DualGraph::intersection_matrix() const {
    const std::size_t n = vertices_.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = vertices_[i].self_int;
    for (const auto& e : edges_) {
        m(e.i, e.j) += e.mult;
        m(e.j, e.i) += e.mult;
    }
    return m;
}

bool DualGraph::connected() const {
    const std::size_t n = vertices_.size();
    if (n == 0) return false;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = n;
    for (const auto& e : edges_) {
        auto a = find(e.i), b = find(e.j);
        if (a != b) { parent[a] = b; --components; }
    }
    return components == 1;
}

Integer DualGraph::canonical_degree(std::size_t j) const {
    return Integer(2 * vertices_[j].genus - 2 - vertices_[j].self_int);
}

BoundaryData::BoundaryData(std::vector<BoundaryComponent> components)
    : components_(std::move(components)) {
    for (std::size_t k = 0; k < components_.size(); ++k) {
        const auto& c = components_[k];
        if (c.coeff < 0 || c.coeff > 1)
            throw MathError(Errc::CoefficientOutOfRange,
                            "boundary coefficient " + mmpkit::to_string(c.coeff) + " not in [0,1]");
        for (const auto& [v, mult] : c.meets)
            if (mult <= 0)
                throw MathError(Errc::InvalidBoundary,
                                "boundary component " + std::to_string(k) + " has nonpositive multiplicity");
    }
}

Rational BoundaryData::intersection_with(std::size_t vertex) const {
    Rational s = 0;
    for (const auto& c : components_)
        for (const auto& [v, mult] : c.meets)
            if (v == vertex) s += c.coeff * mult;
    return s;
}

void BoundaryData::validate_against(const DualGraph& g) const {
    for (const auto& c : components_)
        for (const auto& [v, mult] : c.meets)
            if (v >= g.size())
                throw MathError(Errc::InvalidBoundary, "boundary meets unknown vertex " + std::to_string(v));
}

bool check_contractible(const DualGraph& g) {
    if (g.size() == 0) throw MathError(Errc::InvalidGraph, "empty exceptional graph");
    if (!g.connected()) throw MathError(Errc::Disconnected, "exceptional graph is disconnected");
    return is_negative_definite(g.intersection_matrix());
}

DiscrepancyReport discrepancies(const DualGraph& g, const BoundaryData& b) {
    if (!check_contractible(g))
        throw MathError(Errc::NotContractible, "intersection matrix is not negative definite");
    b.validate_against(g);
    const std::size_t n = g.size();

    // sum_i d_i (E_i . E_j) = K_Y . E_j + B~ . E_j
    RatVector rhs(n);
    for (std::size_t j = 0; j < n; ++j) rhs[j] = Rational(g.canonical_degree(j)) + b.intersection_with(j);

    DiscrepancyReport r;
    r.d = solve_exact(to_rational(g.intersection_matrix()), rhs);
    r.minimal_resolution = true;
    for (std::size_t j = 0; j < n; ++j)
        if (g.canonical_degree(j) < 0) r.minimal_resolution = false;

    bool has_boundary = false, boundary_below_one = true;
    for (const auto& c : b.components()) {
        has_boundary |= c.coeff > 0;
        boundary_below_one &= c.coeff < 1;
    }
    auto all = [&](auto pred) { return std::all_of(r.d.begin(), r.d.end(), pred); };
    if (!has_boundary && all([](const Rational& x) { return x > 0; }))
        r.klass = SingClass::TerminalRel;
    else if (!has_boundary && all([](const Rational& x) { return x >= 0; }))
        r.klass = SingClass::Canonical;
    else if (boundary_below_one && all([](const Rational& x) { return x > -1; }))
        r.klass = SingClass::Klt;
    else if (all([](const Rational& x) { return x >= -1; }))
        r.klass = SingClass::Lc;
    else
        r.klass = SingClass::NotLc;

    if (!has_boundary) r.du_val = detect_du_val(g, r);
    return r;
}

std::optional<DuVal> detect_du_val(const DualGraph& g, const DiscrepancyReport& report) {
    const std::size_t n = g.size();
    if (n == 0 || report.d.size() != n) return std::nullopt;
    for (const auto& v : g.vertices())
        if (v.genus != 0 || v.self_int != -2) return std::nullopt;
    for (const auto& x : report.d)
        if (x != 0) return std::nullopt;
    for (const auto& e : g.edges())
        if (e.mult != 1) return std::nullopt;
    if (g.edges().size() != n - 1 || !g.connected()) return std::nullopt;

    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    std::vector<std::size_t> branch;
    for (std::size_t v = 0; v < n; ++v) {
        if (adj[v].size() > 3) return std::nullopt;
        if (adj[v].size() == 3) branch.push_back(v);
    }
    if (branch.empty()) return DuVal{DuVal::Family::A, n};
    if (branch.size() > 1) return std::nullopt;

    // Arm lengths from the trivalent vertex.
    const std::size_t centre = branch.front();
    std::vector<std::size_t> arms;
    for (std::size_t start : adj[centre]) {
        std::size_t len = 1, prev = centre, cur = start;
        while (adj[cur].size() == 2) {
            const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return DuVal{DuVal::Family::D, n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return DuVal{DuVal::Family::E, n};
    return std::nullopt;
}

std::pair<DualGraph, BoundaryData> blowup_vertex(const DualGraph& g, const BoundaryData& b,
                                                 const BlowupSite& site) {
    b.validate_against(g);
    auto vertices = g.vertices();
    auto edges = g.edges();
    auto comps = b.components();
    const std::size_t fresh = vertices.size();
    auto check_vertex = [&](std::size_t v) {
        if (v >= vertices.size()) throw MathError(Errc::InvalidSite, "no vertex " + std::to_string(v));
    };

    if (const auto* p = std::get_if<FreePoint>(&site)) {
        check_vertex(p->vertex);
        vertices[p->vertex].self_int -= 1;
        edges.push_back({p->vertex, fresh, 1});
    } else if (const auto* p = std::get_if<EdgePoint>(&site)) {
        check_vertex(p->i);
        check_vertex(p->j);
        auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) {
            return (e.i == p->i && e.j == p->j) || (e.i == p->j && e.j == p->i);
        });
        if (it == edges.end())
            throw MathError(Errc::InvalidSite, "vertices " + std::to_string(p->i) + " and " +
                                                   std::to_string(p->j) + " do not meet");
        // One intersection point is separated.
        if (--it->mult == 0) edges.erase(it);
        vertices[p->i].self_int -= 1;
        vertices[p->j].self_int -= 1;
        edges.push_back({p->i, fresh, 1});
        edges.push_back({p->j, fresh, 1});
    } else {
        const auto& q = std::get<BoundaryPoint>(site);
        check_vertex(q.vertex);
        if (q.component >= comps.size())
            throw MathError(Errc::InvalidSite, "no boundary component " + std::to_string(q.component));
        auto& meets = comps[q.component].meets;
        auto it = std::find_if(meets.begin(), meets.end(),
                               [&](const auto& m) { return m.first == q.vertex; });
        if (it == meets.end())
            throw MathError(Errc::InvalidSite, "boundary component " + std::to_string(q.component) +
                                                   " does not meet vertex " + std::to_string(q.vertex));
        if (--it->second == 0) meets.erase(it);
        meets.emplace_back(fresh, 1);
        vertices[q.vertex].self_int -= 1;
        edges.push_back({q.vertex, fresh, 1});
    }
    vertices.push_back({0, -1});
    return {DualGraph(std::move(vertices), std::move(edges)), BoundaryData(std::move(comps))};
}

} // namespace mmpkit::graph
