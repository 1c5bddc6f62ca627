#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtseries/classenum.hpp"
#include "dtseries/rational.hpp"

namespace dtseries {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated series sum_j coeffs[j] q^(offset + j), known exactly for j < order().
///
/// Offsets may be fractional. Two series can only be added when their offsets
/// differ by an integer. Results never claim more validity than their inputs.
class QSeries {
 public:
  QSeries() = default;
  QSeries(Rational offset, std::vector<Rational> coeffs);

  static QSeries zero(std::size_t order, Rational offset = 0);
  static QSeries one(std::size_t order);

  const Rational& offset() const { return offset_; }
  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t j) const { return coeffs_[j]; }

  /// Coefficient of q^e; throws when e lies in another sector or beyond the order.
  Rational coefficient_at(const Rational& exponent) const;

  /// First exponent not covered: offset + order.
  Rational valid_until() const { return offset_ + Rational(static_cast<long>(coeffs_.size())); }

  QSeries truncated(std::size_t order) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  Rational offset_ = 0;
  std::vector<Rational> coeffs_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& c, const QSeries& a);

/// Multiplies by q^r.
QSeries shift(const QSeries& a, const Rational& r);

/// Multiplicative inverse of a series whose leading coefficient is nonzero.
QSeries reciprocal(const QSeries& a);

/// prod_{k>=1} (1 - q^k)^e to order N.
QSeries euler_product(long e, std::size_t order);

/// eta(q)^e = q^(e/24) prod (1-q^k)^e to order N.
QSeries eta_power(long e, std::size_t order);

/// sum_i q^(x_i); all exponents must lie in one sector. The result covers
/// max(span, order) terms, padding with exact zeros.
QSeries theta_block(const std::vector<Rational>& exponents, std::size_t order = 0);

enum class SignConvention { theorem_minus_delta, example_plus_delta };

/// -1 for theorem_minus_delta, +1 for example_plus_delta.
long sign_of(SignConvention c);
std::string to_string(SignConvention c);
SignConvention convention_from_string(const std::string& s);

struct BetaBlock {
  IntVector beta;
  Integer beta_sq;
  Rational prefactor_exponent;  // beta^2/2
  QSeries n_series;             // prod (1-q^k)^(sign*delta), offset 0
  QSeries block() const { return shift(n_series, prefactor_exponent); }
};

/// sum over the beta window of q^(beta^2/2) E(q) with E = prod (1-q^k)^(sign*delta).
/// The fractional prefactors are reported separately: the generating-series
/// definition carries q^(delta/24), eta^(-delta) carries q^(-delta/24).
struct DtSeries {
  Integer delta;
  SignConvention convention = SignConvention::theorem_minus_delta;
  std::vector<BetaBlock> blocks;
  QSeries total;
  Rational definition_prefactor;
  Rational theorem_prefactor;
};

DtSeries dt_series(const SurfaceModel& s, const ContributionTable& table, std::size_t order, SignConvention convention);

}  // namespace dtseries
