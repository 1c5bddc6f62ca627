#include <random>

#include "doctest.h"
#include "dtseries/fixture.hpp"
#include "dtseries/qseries.hpp"
#include "oracles.hpp"

using namespace dtseries;

namespace {

QSeries random_series(std::mt19937_64& rng, std::size_t order, Rational offset = 0) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  std::vector<Rational> c(order);
  for (auto& x : c) x = ratio(num(rng), den(rng));
  return QSeries(offset, c);
}

}  // namespace

TEST_CASE("euler_product(-1) counts partitions") {
  const QSeries p = euler_product(-1, 31);
  REQUIRE(p.order() == 31);
  for (int n = 0; n <= 30; ++n) CHECK(p[static_cast<std::size_t>(n)] == Rational(oracle::partition_count(n)));
}

TEST_CASE("euler_product matches a factor-by-factor expansion") {
  for (long e = -12; e <= 12; ++e) {
    CAPTURE(e);
    const QSeries q = euler_product(e, 20);
    const auto want = oracle::product_expansion(e, 20);
    for (std::size_t j = 0; j < 20; ++j) CHECK(q[j] == Rational(want[j]));
  }
  // Euler's pentagonal theorem.
  const QSeries p = euler_product(1, 16);
  const std::vector<long> pent = {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1};
  for (std::size_t j = 0; j < 16; ++j) CHECK(p[j] == pent[j]);
}

TEST_CASE("euler_product(e) * euler_product(-e) = 1") {
  for (long e = -12; e <= 12; ++e) {
    CAPTURE(e);
    CHECK(euler_product(e, 31) * euler_product(-e, 31) == QSeries::one(31));
  }
}

TEST_CASE("ring axioms on random truncated series") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 25; ++t) {
    const QSeries a = random_series(rng, 9, Rational(1, 3));
    const QSeries b = random_series(rng, 7, Rational(-2, 3));
    const QSeries c = random_series(rng, 8, Rational(4, 3));
    CHECK(a + c == c + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + shift(c, -2)) == a * b + a * shift(c, -2));
    CHECK((a + c) + shift(b, 1) == a + (c + shift(b, 1)));
    CHECK(a - a == QSeries::zero(9, Rational(1, 3)));
  }
}

TEST_CASE("orders and offsets") {
  const QSeries a(Rational(1, 2), {1, 2, 3});   // valid below q^(7/2)
  const QSeries b(Rational(-1, 2), {1, 1});     // valid below q^(3/2)
  const QSeries sum = a + b;
  CHECK(sum.offset() == Rational(-1, 2));
  CHECK(sum.valid_until() == Rational(3, 2));
  CHECK(sum.coefficient_at(Rational(1, 2)) == 2);
  CHECK_THROWS_AS(sum.coefficient_at(Rational(3, 2)), SeriesError);
  CHECK_THROWS_AS(sum.coefficient_at(0), SeriesError);
  const QSeries prod = a * b;
  CHECK(prod.offset() == 0);
  CHECK(prod.order() == 2);
  CHECK_THROWS_AS(a + QSeries(Rational(1, 3), {1}), SeriesError);
}

TEST_CASE("reciprocal") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    QSeries a = random_series(rng, 10, 2);
    if (a[0] == 0) continue;
    const QSeries r = reciprocal(a);
    CHECK(r.offset() == -2);
    CHECK(a * r == QSeries::one(10));
  }
  CHECK_THROWS_AS(reciprocal(QSeries(0, {0, 1})), SeriesError);
}

TEST_CASE("eta power and theta block") {
  const QSeries eta = eta_power(24, 5);
  CHECK(eta.offset() == 1);
  CHECK(eta[1] == -24);
  CHECK(eta_power(-10, 3).offset() == Rational(-5, 12));

  const QSeries th = theta_block({-4, -1, 0, -1, -4});
  CHECK(th.offset() == -4);
  CHECK(th.order() == 5);
  CHECK(th == QSeries(-4, {2, 0, 0, 2, 1}));
  CHECK(theta_block({0}, 6).order() == 6);
  CHECK_THROWS_AS(theta_block({0, Rational(1, 2)}), SeriesError);
}

TEST_CASE("dt_series over the quadric window") {
  const Fixture f = load_fixture("quadric_p4_d2");
  const auto tw = canonical_twist(f.threefold, f.surface, ChernVector{{1}, 0});
  const auto table = enumerate_contributions(f.threefold, f.surface, tw.ch.gamma, 1, 2);
  const DtSeries s = dt_series(f.surface, table, 8, SignConvention::theorem_minus_delta);
  CHECK(s.delta == 10);
  CHECK(s.blocks.size() == 5);
  CHECK(s.definition_prefactor == Rational(5, 12));
  CHECK(s.theorem_prefactor == Rational(-5, 12));

  // Independent assembly: exponents -k^2 times the product expanded factor by factor.
  const auto e = oracle::product_expansion(-10, 8);
  std::vector<Rational> coeffs(8);
  for (long k = -2; k <= 2; ++k) {
    const long shift_by = 4 - k * k;  // position of q^(-k^2) relative to q^-4
    for (std::size_t j = 0; j + shift_by < 8; ++j) coeffs[j + shift_by] += Rational(e[j]);
  }
  // Blocks with larger offsets are known further out; compare where all are valid.
  CHECK(s.total.offset() == -4);
  for (std::size_t j = 0; j < 8; ++j) CHECK(s.total[j] == coeffs[j]);

  const DtSeries plus = dt_series(f.surface, table, 8, SignConvention::example_plus_delta);
  CHECK(plus.blocks.front().n_series == euler_product(10, 8));
}

TEST_CASE("sign convention strings") {
  CHECK(sign_of(SignConvention::theorem_minus_delta) == -1);
  CHECK(sign_of(SignConvention::example_plus_delta) == 1);
  for (auto c : {SignConvention::theorem_minus_delta, SignConvention::example_plus_delta}) {
    CHECK(convention_from_string(to_string(c)) == c);
  }
  CHECK_THROWS(convention_from_string("sideways"));
}
