#pragma once
// Discrepancies of a normal surface point (X, B) read off a resolution dual
// graph: exceptional curves E_i with arithmetic genus and self-intersection,
// plus an optional boundary meeting them.

#include "mmpkit/exact_lattice.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace mmpkit::graph {

struct Vertex {
    long genus = 0;      // p_a(E_i)
    long self_int = 0;   // E_i^2
};

struct Edge {
    std::size_t i = 0;
    std::size_t j = 0;
    long mult = 1;       // total intersection number contributed
};

/// Exceptional configuration of one singular point.
class DualGraph {
public:
    DualGraph() = default;
    DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return vertices_.size(); }

    IntMatrix intersection_matrix() const;
    bool connected() const;
    /// K_Y . E_j = 2 p_a(E_j) - 2 - E_j^2
    Integer canonical_degree(std::size_t j) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

struct BoundaryComponent {
    Rational coeff;
    std::vector<std::pair<std::size_t, long>> meets;   // (vertex, intersection multiplicity)
};

/// B = sum b_k B_k with b_k in [0, 1].
class BoundaryData {
public:
    BoundaryData() = default;
    explicit BoundaryData(std::vector<BoundaryComponent> components);

    const std::vector<BoundaryComponent>& components() const noexcept { return components_; }
    bool empty() const noexcept { return components_.empty(); }
    /// B~ . E_j weighted by coefficients.
    Rational intersection_with(std::size_t vertex) const;
    void validate_against(const DualGraph& g) const;

private:
    std::vector<BoundaryComponent> components_;
};

enum class SingClass { TerminalRel, Canonical, Klt, Lc, NotLc };
std::string_view to_string(SingClass c);

struct DuVal {
    enum class Family { A, D, E } family;
    std::size_t n;
    std::string name() const;
    friend bool operator==(const DuVal&, const DuVal&) = default;
};

struct DiscrepancyReport {
    RatVector d;                        // d_i = d(E_i, X, B)
    SingClass klass = SingClass::NotLc;
    std::optional<DuVal> du_val;
    bool minimal_resolution = false;    // K_Y nef over X
};

/// Negative definiteness of [E_i . E_j]. Throws Disconnected.
bool check_contractible(const DualGraph& g);

DiscrepancyReport discrepancies(const DualGraph& g, const BoundaryData& b = {});

/// ADE type when the graph is a Dynkin tree of smooth rational (-2)-curves.
std::optional<DuVal> detect_du_val(const DualGraph& g, const DiscrepancyReport& report);

/// Where a point of the resolution surface is blown up.
struct FreePoint { std::size_t vertex; };                          // general point of E_i
struct EdgePoint { std::size_t i, j; };                            // a point of E_i ∩ E_j
struct BoundaryPoint { std::size_t vertex; std::size_t component; };  // a point of E_i ∩ B_k
using BlowupSite = std::variant<FreePoint, EdgePoint, BoundaryPoint>;

/// Blows up one point; the new (-1)-curve is appended as the last vertex.
std::pair<DualGraph, BoundaryData> blowup_vertex(const DualGraph& g, const BoundaryData& b,
                                                 const BlowupSite& site);

} // namespace mmpkit::graph
