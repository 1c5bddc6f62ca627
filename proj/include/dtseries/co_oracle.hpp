#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtseries/execution.hpp"
#include "dtseries/partition.hpp"
#include "dtseries/rational.hpp"

namespace dtseries {

/// A character a*s1 + b*s2 of the two-dimensional torus.
struct Character {
  long a = 0;
  long b = 0;

  bool is_zero() const { return a == 0 && b == 0; }
  friend Character operator+(Character x, Character y) { return {x.a + y.a, x.b + y.b}; }
  friend Character operator-(Character x) { return {-x.a, -x.b}; }
  friend Character operator*(long k, Character x) { return {k * x.a, k * x.b}; }
  friend bool operator==(const Character&, const Character&) = default;
};

/// Torus weights of the two coordinate directions at a fixed point.
struct Chart {
  Character w1;
  Character w2;
};

/// A torus-invariant curve joining two fixed points. `direction` selects the
/// weight of the `from` chart tangent to the curve (0 for w1, 1 for w2).
struct ToricCurve {
  std::size_t from = 0;
  std::size_t to = 0;
  int direction = 0;
};

struct ToricSurfaceModel {
  std::string name;
  std::vector<Chart> charts;
  std::vector<ToricCurve> curves;

  std::size_t fixed_point_count() const { return charts.size(); }
  /// Chart bases unimodular; curve endpoints carry opposite tangent weights.
  void validate() const;
};

/// Fiber weight of an equivariant line bundle at each fixed point, plus its
/// degree on each invariant curve (used only for consistency checking).
struct Linearization {
  std::string name;
  std::vector<Character> weights;
  std::vector<long> curve_degrees;

  /// Same bundle with every fiber weight shifted by `c`.
  Linearization shifted(Character c) const;
};

Linearization trivial_linearization(const ToricSurfaceModel& s);

/// Checks w(from) - w(to) = deg(L|C) * (tangent weight of C at `from`) on every curve.
void validate_linearization(const ToricSurfaceModel& s, const Linearization& lw);

struct WeightMultiset {
  std::vector<Character> weights;
  std::size_t rank() const { return weights.size(); }
};

/// Monomial ideal at each fixed point.
struct HilbFixedPoint {
  std::vector<Partition> assignment;
  int total = 0;
};

/// All torus-fixed points of S^[n]: tuples of partitions, one per chart, of total size n.
std::vector<HilbFixedPoint> hilb_fixed_points(const ToricSurfaceModel& s, int n);

/// Tangent space of Hilb^|lambda|(C^2) at the monomial ideal of lambda.
WeightMultiset tangent_weights(const Partition& lambda, const Chart& chart);

/// Tangent weights of S^[n] at F.
WeightMultiset tangent_weights(const HilbFixedPoint& f, const ToricSurfaceModel& s);

/// Characters of Rp_*L - RHom_p(I, I (x) L) at F: each local tangent weight
/// shifted by the fiber weight of L at that chart.
WeightMultiset co_class_weights(const HilbFixedPoint& f, const ToricSurfaceModel& s, const Linearization& lw);

struct EvalPoint {
  Rational s1;
  Rational s2;
};

/// A nonzero character vanished at the evaluation point; draw another.
class NonGenericPointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Localization produced a non-integral or inconsistent answer.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// e(co)/e(T) at one fixed point. A zero co character gives exactly 0.
Rational fixed_point_contribution(const HilbFixedPoint& f, const ToricSurfaceModel& s, const Linearization& lw,
                                  const EvalPoint& eval);

/// Integral of c_2n(Rp_*L - RHom_p(I,I(x)L)) over S^[n] by localization.
/// Throws OracleError unless the sum is an integer.
Rational integrate(const ToricSurfaceModel& s, const Linearization& lw, int n, const EvalPoint& eval,
                   Execution exec = Execution::parallel);

/// Random evaluation point with nonzero coordinates of moderate height.
EvalPoint random_eval_point(std::mt19937_64& rng);

struct CoSeries {
  std::vector<Integer> values;  // index n = 0..max_n
  EvalPoint first;
  EvalPoint second;
  std::uint64_t seed = 0;
  int redraws = 0;
};

/// integrate() for n = 0..max_n at two independent random points, asserting agreement.
CoSeries co_series(const ToricSurfaceModel& s, const Linearization& lw, int max_n, std::uint64_t seed,
                   Execution exec = Execution::parallel);

struct TraceEntry {
  HilbFixedPoint point;
  Rational contribution;
};

std::vector<TraceEntry> fixed_point_trace(const ToricSurfaceModel& s, const Linearization& lw, int n,
                                          const EvalPoint& eval);

}  // namespace dtseries
