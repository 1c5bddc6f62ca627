#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "dtseries/execution.hpp"
#include "dtseries/geometry.hpp"

namespace dtseries {

/// Raised when ch_3 forces a negative or fractional colength: the moduli space is empty.
class EmptyModuliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Classes beta in H^2(S,Z) with i_* beta = gamma + L^2/2, as
/// particular + span(kernel). The kernel basis is in Hermite form and the
/// particular solution is centered against the kernel in the intersection form.
struct ConstraintLattice {
  IntVector particular;
  std::vector<IntVector> kernel;

  IntVector point(const std::vector<long>& coords) const;
};

std::optional<ConstraintLattice> beta_constraint_lattice(const SurfaceModel& s, const RatVector& gamma,
                                                         const IntVector& l2);

/// Every beta in the lattice with beta.beta == beta_sq, sorted lexicographically.
/// Throws GeometryError when the form restricted to the kernel is not negative definite.
std::vector<IntVector> enumerate_beta(const SurfaceModel& s, const ConstraintLattice& lattice, const Integer& beta_sq);
std::vector<IntVector> enumerate_beta(const ThreefoldModel& x, const SurfaceModel& s, const RatVector& gamma,
                                      const Integer& beta_sq);

/// n = beta^2/2 + gamma.L/2 + 2L^3/3 - xi; throws EmptyModuliError unless n is a nonnegative integer.
Integer n_from_xi(const ThreefoldModel& x, const SurfaceModel& s, const RatVector& gamma, const IntVector& beta,
                  const Rational& xi);
Rational xi_from_n(const ThreefoldModel& x, const SurfaceModel& s, const RatVector& gamma, const IntVector& beta,
                   const Integer& n);

struct ContributionRow {
  RatVector gamma;
  IntVector beta;
  Integer beta_sq;
  Integer n;
  Rational xi;
  Rational q_exponent;  // beta^2/2 + delta/24 + n
};

struct ContributionTable {
  RatVector gamma;
  Integer delta;
  ConstraintLattice lattice;
  long window = 0;
  Rational max_power;
  std::vector<ContributionRow> rows;
};

/// All (beta, n) with kernel coordinates in [-window, window] and
/// q_exponent <= max_power, sorted by q_exponent then beta. An empty
/// constraint lattice yields an empty table.
ContributionTable enumerate_contributions(const ThreefoldModel& x, const SurfaceModel& s, const RatVector& gamma,
                                          const Rational& max_power, long window,
                                          Execution exec = Execution::serial);

/// Tensoring by L^t maps ch=(0,L,gamma,xi) to (0, L, gamma + t L^2, xi + t gamma.L + t^2 L^3/2).
ChernVector twist_chern(const ThreefoldModel& x, const ChernVector& ch, const Integer& t);

struct CanonicalTwist {
  bool applicable = false;
  Integer t = 0;
  ChernVector ch;
};

/// When H^4 has rank one and L is a rational multiple of O(1) (so twisting by L
/// preserves Gieseker stability), picks t with gamma + L^2/2 reduced into [0, L^2).
CanonicalTwist canonical_twist(const ThreefoldModel& x, const SurfaceModel& s, const ChernVector& ch);

}  // namespace dtseries
