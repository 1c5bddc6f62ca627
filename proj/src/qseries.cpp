#include "dtseries/qseries.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace dtseries {

namespace {

// a - b as a nonnegative machine integer; throws when not integral.
std::size_t integral_gap(const Rational& a, const Rational& b, const char* what) {
  const Rational d = a - b;
  if (!is_integer(d)) throw SeriesError(std::string(what) + ": offsets " + to_string(a) + " and " + to_string(b) + " lie in different sectors");
  if (d < 0) throw std::logic_error("integral_gap: negative gap");
  return d.get_num().get_ui();
}

QSeries power(QSeries base, unsigned long e, std::size_t order) {
  QSeries result = QSeries::one(order);
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace

QSeries::QSeries(Rational offset, std::vector<Rational> coeffs) : offset_(std::move(offset)), coeffs_(std::move(coeffs)) {}

QSeries QSeries::zero(std::size_t order, Rational offset) { return QSeries(std::move(offset), std::vector<Rational>(order)); }

QSeries QSeries::one(std::size_t order) {
  QSeries s = zero(order);
  if (order > 0) s.coeffs_[0] = 1;
  return s;
}

Rational QSeries::coefficient_at(const Rational& exponent) const {
  const Rational d = exponent - offset_;
  if (!is_integer(d)) throw SeriesError("coefficient_at: exponent " + to_string(exponent) + " outside this series' sector");
  if (d < 0) return 0;
  if (d >= Rational(static_cast<long>(coeffs_.size()))) {
    throw SeriesError("coefficient_at: exponent " + to_string(exponent) + " beyond truncation order");
  }
  return coeffs_[d.get_num().get_ui()];
}

QSeries QSeries::truncated(std::size_t order) const {
  if (order > coeffs_.size()) throw SeriesError("truncated: cannot extend validity");
  return QSeries(offset_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const Rational& lo = a.offset() <= b.offset() ? a.offset() : b.offset();
  const std::size_t sa = integral_gap(a.offset(), lo, "add");
  const std::size_t sb = integral_gap(b.offset(), lo, "add");
  const Rational end = std::min(a.valid_until(), b.valid_until());
  const std::size_t order = end > lo ? integral_gap(end, lo, "add") : 0;
  std::vector<Rational> c(order);
  for (std::size_t j = 0; j < order; ++j) {
    if (j >= sa) c[j] += a[j - sa];
    if (j >= sb) c[j] += b[j - sb];
  }
  return QSeries(lo, std::move(c));
}

QSeries operator-(const QSeries& a) { return Rational(-1) * a; }

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> c(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < order; ++j) c[i + j] += a[i] * b[j];
  }
  return QSeries(a.offset() + b.offset(), std::move(c));
}

QSeries operator*(const Rational& c, const QSeries& a) {
  std::vector<Rational> out(a.coeffs());
  for (auto& x : out) x *= c;
  return QSeries(a.offset(), std::move(out));
}

QSeries shift(const QSeries& a, const Rational& r) { return QSeries(a.offset() + r, a.coeffs()); }

QSeries reciprocal(const QSeries& a) {
  if (a.order() == 0) return QSeries(-a.offset(), {});
  if (a[0] == 0) throw SeriesError("reciprocal: leading coefficient is zero");
  const std::size_t n = a.order();
  std::vector<Rational> b(n);
  const Rational inv = 1 / a[0];
  b[0] = inv;
  for (std::size_t k = 1; k < n; ++k) {
    Rational s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * b[k - j];
    b[k] = -inv * s;
  }
  return QSeries(-a.offset(), std::move(b));
}

QSeries euler_product(long e, std::size_t order) {
  // prod_{k=1}^{order-1} (1 - q^k); later factors are invisible at this order.
  std::vector<Rational> p(order);
  if (order > 0) p[0] = 1;
  for (std::size_t k = 1; k < order; ++k) {
    for (std::size_t j = order; j-- > k;) p[j] -= p[j - k];
  }
  QSeries base(0, std::move(p));
  if (e < 0) base = reciprocal(base);
  const unsigned long m = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  return power(std::move(base), m, order);
}

QSeries eta_power(long e, std::size_t order) { return shift(euler_product(e, order), ratio(e, 24)); }

QSeries theta_block(const std::vector<Rational>& exponents, std::size_t order) {
  if (exponents.empty()) return QSeries::zero(order);
  const Rational lo = *std::min_element(exponents.begin(), exponents.end());
  const Rational hi = *std::max_element(exponents.begin(), exponents.end());
  const std::size_t span = integral_gap(hi, lo, "theta_block") + 1;
  std::vector<Rational> c(std::max(span, order));
  for (const auto& x : exponents) c[integral_gap(x, lo, "theta_block")] += 1;
  return QSeries(lo, std::move(c));
}

long sign_of(SignConvention c) { return c == SignConvention::theorem_minus_delta ? -1 : 1; }

std::string to_string(SignConvention c) {
  return c == SignConvention::theorem_minus_delta ? "theorem_minus_delta" : "example_plus_delta";
}

SignConvention convention_from_string(const std::string& s) {
  if (s == "theorem_minus_delta") return SignConvention::theorem_minus_delta;
  if (s == "example_plus_delta") return SignConvention::example_plus_delta;
  throw InputError("unknown sign convention '" + s + "'");
}

DtSeries dt_series(const SurfaceModel& s, const ContributionTable& table, std::size_t order, SignConvention convention) {
  if (order < 1) throw std::invalid_argument("dt_series: order must be at least 1");
  for (const auto& row : table.rows) {
    if (row.gamma != table.gamma) throw SeriesError("dt_series: contribution table mixes different gamma");
  }
  DtSeries out;
  out.delta = delta_invariant(s);
  if (out.delta != table.delta) throw SeriesError("dt_series: table was built for a different surface (delta mismatch)");
  out.convention = convention;
  out.definition_prefactor = ratio(out.delta, 24);
  out.theorem_prefactor = -ratio(out.delta, 24);

  const long exponent = sign_of(convention) * out.delta.get_si();
  const QSeries e = euler_product(exponent, order);

  std::map<IntVector, Integer> betas;
  for (const auto& row : table.rows) betas.emplace(row.beta, row.beta_sq);
  for (const auto& [beta, sq] : betas) {
    out.blocks.push_back(BetaBlock{beta, sq, Rational(sq) / 2, e});
  }
  std::stable_sort(out.blocks.begin(), out.blocks.end(), [](const BetaBlock& a, const BetaBlock& b) {
    return a.prefactor_exponent < b.prefactor_exponent;
  });

  if (out.blocks.empty()) {
    out.total = QSeries::zero(order);
    return out;
  }
  out.total = out.blocks.front().block();
  for (std::size_t i = 1; i < out.blocks.size(); ++i) out.total = out.total + out.blocks[i].block();
  return out;
}

}  // namespace dtseries
