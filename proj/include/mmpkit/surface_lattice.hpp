#pragma once
// Néron–Severi lattice models of smooth projective surfaces and the classical
// surface MMP on them: find a (-1)-class, contract it, repeat, then decide
// between a minimal model and a Mori fibre space.
//
// Curve knowledge is extensional. Every nef/ample/cone/fibre verdict is
// relative to the curve classes the lattice carries.

#include "mmpkit/exact_lattice.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmpkit::surface {

struct SurfaceLattice {
    IntMatrix gram;                 // symmetric rho x rho intersection form
    IntVector canonical;            // K
    std::vector<IntVector> curves;  // classes of known irreducible curves
    std::string label;

    std::size_t rank() const noexcept { return gram.rows(); }
    Integer dot(const IntVector& x, const IntVector& y) const { return bilinear(gram, x, y); }
    Integer square(const IntVector& x) const { return bilinear(gram, x, x); }

    /// Throws InvalidLattice / NotSymmetric / NonIntegralGenus.
    void validate() const;
    /// Non-fatal remarks (e.g. the form is not of signature (1, rho-1)).
    std::vector<std::string> warnings() const;
};

/// P^2 blown up at r points, basis (H, E_1, ..., E_r).
SurfaceLattice make_blowup_p2(std::size_t r);
/// P^1 x P^1 with the two rulings as basis.
SurfaceLattice make_quadric();

/// p_a(C) = 1 + C.(C+K)/2. Throws NonIntegralGenus on odd C.(C+K).
Integer adjunction_genus(const SurfaceLattice& s, const IntVector& c);

/// All classes with C^2 = -1 and K.C = -1, lexicographically sorted.
///
/// When K^2 > 0 on a form of signature (1, rho-1) the set is finite and the
/// search needs no bound. Otherwise `bound` caps |h.C| for a polarising class
/// h (the first basis vector or curve of positive square); without it the
/// search throws UnboundedSearch.
std::vector<IntVector> enumerate_minus_one_classes(const SurfaceLattice& s,
                                                   std::optional<long> bound = std::nullopt);

/// The contracted lattice together with the coordinate change used.
struct Contraction {
    SurfaceLattice lattice;
    IntVector contracted;   // C, old coordinates
    IntMatrix basis;        // rho x (rho-1); columns span C^perp in old coordinates
    IntMatrix to_new;       // (rho-1) x rho; left inverse of `basis` on C^perp
    IntMatrix old_gram;

    /// New coordinates of x + (x.C) C, the push-forward of x.
    IntVector push_forward(const IntVector& x) const;
};

Contraction castelnuovo_contract_detailed(const SurfaceLattice& s, const IntVector& c);
SurfaceLattice castelnuovo_contract(const SurfaceLattice& s, const IntVector& c);

enum class Outcome { MinimalModel, MoriFibreP2like, MoriFibreRuled, Inconclusive };
std::string_view to_string(Outcome o);

struct MmpStep {
    IntVector contracted;   // in the coordinates of the lattice before this step
    std::size_t rank_before = 0;
    std::size_t rank_after = 0;
};

struct MmpTrace {
    std::vector<MmpStep> steps;
    Outcome outcome = Outcome::Inconclusive;
    std::optional<IntVector> fibre;   // set for MoriFibreRuled
    SurfaceLattice final_lattice;
    std::vector<std::string> notes;
};

MmpTrace run_classical_mmp(const SurfaceLattice& s, std::optional<long> bound = std::nullopt);

struct ConeRays {
    IntVector first;
    IntVector second;   // det(first, second) >= 0
};
/// Boundary rays of the planar cone spanned by the known curves (rho = 2).
ConeRays cone_rays_rank2(const SurfaceLattice& s);

bool is_nef(const SurfaceLattice& s, const IntVector& d);
bool is_ample_kleiman(const SurfaceLattice& s, const IntVector& d);

/// chi(O(D)) = D.(D-K)/2 + chi0, chi0 = 1 + p_a(X).
Rational riemann_roch_surface(const SurfaceLattice& s, const IntVector& d, const Integer& chi0);

} // namespace mmpkit::surface
