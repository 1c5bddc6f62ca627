#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtseries/lattice.hpp"
#include "dtseries/rational.hpp"

namespace dtseries {

/// Integral cohomology model of a polarized threefold X.
///
/// H^2 has basis D_0..D_{r-1} and H^4 has basis C_0..C_{h-1}. The ring is
/// described twice: by the triple-intersection tensor, and by the products
/// D_a.D_b as H^4 classes together with the H^2 x H^4 pairing. validate()
/// insists that both descriptions agree.
struct ThreefoldModel {
  std::string name;
  std::size_t h2_rank = 0;
  std::size_t h4_rank = 0;
  std::vector<std::string> h2_basis;
  std::vector<std::string> h4_basis;
  std::vector<Integer> triple;  // r*r*r, index (a*r + b)*r + c
  IntVector canonical;          // K_X
  IntVector polarization;       // O(1)
  IntVector line_bundle;        // L
  std::vector<IntVector> quad;  // r*r entries, each an H^4 vector
  IntMatrix pairing;            // r x h, D_a . C_k
  /// Records that H^1(O_X)=H^2(O_X)=0 and H^0(L+K_X)=H^1(L+K_X)=0 were
  /// verified by hand; never computed here.
  bool vanishing_asserted = false;
  /// dim|L| counted independently of the virtual-dimension formula.
  std::optional<Integer> linear_system_dim;

  const Integer& triple_at(std::size_t a, std::size_t b, std::size_t c) const {
    return triple[(a * h2_rank + b) * h2_rank + c];
  }
  const IntVector& quad_at(std::size_t a, std::size_t b) const { return quad[a * h2_rank + b]; }

  /// Pairing of each H^4 basis class with O(1).
  IntVector h4_pairing() const;

  /// Throws GeometryError describing the first violated invariant.
  void validate() const;
};

/// Model of a general member S of |L|: the free part of H^2(S,Z) with its
/// intersection form, restriction from H^2(X) and pushforward to H^4(X).
struct SurfaceModel {
  std::size_t h2_rank = 0;
  std::vector<std::string> h2_basis;
  IntMatrix gram;         // s x s
  IntVector canonical;    // K_S
  IntVector line_bundle;  // L|_S
  IntVector polarization; // O(1)|_S
  Integer euler = 0;      // e(S)
  IntMatrix restriction;  // s x r, H^2(X) -> H^2(S)
  IntMatrix pushforward;  // h x s, H^2(S) -> H^4(X)
  std::string torsion_note;

  void validate() const;
};

/// ch = (0, L, gamma, xi); ch_0 and ch_1 are implicit in the model.
struct ChernVector {
  RatVector gamma;  // H^4 coordinates
  Rational xi = 0;
};

// Intersection arithmetic -------------------------------------------------

Integer triple_product(const ThreefoldModel& x, const IntVector& a, const IntVector& b, const IntVector& c);

/// a.b as an H^4 class.
IntVector product_class(const ThreefoldModel& x, const IntVector& a, const IntVector& b);

/// D . C for D in H^2, C in H^4 (rational coefficients allowed on C).
Rational pair(const ThreefoldModel& x, const IntVector& divisor, const RatVector& curve);

/// L^2 as an H^4 class.
IntVector l_squared(const ThreefoldModel& x);

// Assumption checks -------------------------------------------------------

struct InequalityCheck {
  std::string label;
  Integer lhs;
  Integer rhs;
  bool holds = false;
};

struct PositivityReport {
  InequalityCheck anticanonical_vs_cube;      // -K_X.L^2 > L^3
  InequalityCheck anticanonical_polarized;    // -K_X.L.O(1) > 0
  bool vanishing_asserted = false;
  bool passed() const { return anticanonical_vs_cube.holds && anticanonical_polarized.holds && vanishing_asserted; }
};

PositivityReport check_positivity(const ThreefoldModel& x);

struct HilbertCoefficients {
  Rational a2;
  Rational a1;
};

/// Degree-2 and degree-1 coefficients of the Hilbert polynomial of sheaves with ch.
HilbertCoefficients hilbert_coeffs(const ThreefoldModel& x, const ChernVector& ch);

struct GapEntry {
  IntVector sub_class;   // L_1
  Rational forbidden_m;  // the unique m solving the equality
  bool is_integer = false;
  bool holds() const { return !is_integer; }
};

struct StabilityReport {
  bool irreducible = false;
  std::vector<GapEntry> entries;
  bool passed() const;
};

/// For each candidate L_1 solves 2m + (L_1-K).L_1.O(1) = (a1/a2) L_1.O(1)^2
/// for m. No strictly semistable sheaves can occur iff no solution is an
/// integer. An empty list passes only when `irreducible` is set.
StabilityReport check_stability_gap(const ThreefoldModel& x, const ChernVector& ch,
                                    const std::vector<IntVector>& candidates, bool irreducible);

struct AssumptionReport {
  PositivityReport positivity;
  StabilityReport stability;
  bool passed() const { return positivity.passed() && stability.passed(); }
  /// Failed checks in report order.
  std::vector<std::string> failures() const;
};

/// -K_X.L^2/2 + 1; throws GeometryError if -K_X.L^2 is odd.
Integer virtual_dimension(const ThreefoldModel& x);

/// e(S) - K_S.L + L^2 computed on the surface.
Integer delta_invariant(const SurfaceModel& s);

/// Cross-model checks (adjunction, L_S^2 = L^3, projection formula, ...).
/// Returns a list of human-readable violations, empty when consistent.
std::vector<std::string> consistency_issues(const ThreefoldModel& x, const SurfaceModel& s);

}  // namespace dtseries
