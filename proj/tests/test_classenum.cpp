#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "dtseries/classenum.hpp"
#include "dtseries/fixture.hpp"
#include "oracles.hpp"

using namespace dtseries;

namespace {

// Every beta with |beta_i| <= bound, i_* beta = gamma + L^2/2 and beta^2 = sq.
std::set<IntVector> box_search(const Fixture& f, const RatVector& gamma, const Integer& sq, long bound) {
  const IntVector l2 = l_squared(f.threefold);
  std::set<IntVector> out;
  oracle::for_each_in_box(f.surface.h2_rank, bound, [&](const std::vector<long>& v) {
    IntVector beta(v.begin(), v.end());
    const IntVector pushed = f.surface.pushforward * beta;
    for (std::size_t i = 0; i < pushed.size(); ++i) {
      if (Rational(pushed[i]) != gamma[i] + Rational(l2[i]) / 2) return;
    }
    if (form(f.surface.gram, beta, beta) == sq) out.insert(beta);
  });
  return out;
}

bool inside(const IntVector& v, long bound) {
  return std::all_of(v.begin(), v.end(), [&](const Integer& x) { return abs(x) <= bound; });
}

}  // namespace

TEST_CASE("enumerate_beta agrees with a box search") {
  struct Case {
    const char* fixture;
    const char* gamma;
    long bound;
  };
  for (const Case c : {Case{"quadric_p4_d2", "-1", 7}, Case{"quadric_p4_d2", "0", 7}, Case{"quadric_p4_d2", "1", 7},
                       Case{"blowup_p3_line", "0,0", 7}, Case{"blowup_p3_line", "1/2,1", 7},
                       Case{"blowup_p3_line", "-1/2,-2", 7}, Case{"cubic_p4_d3", "-1/2", 2},
                       Case{"cubic_p4_d3", "1/2", 2}}) {
    CAPTURE(c.fixture);
    CAPTURE(c.gamma);
    const Fixture f = load_fixture(c.fixture);
    const RatVector gamma = parse_gamma(f, c.gamma);
    for (long sq = 1; sq >= -12; --sq) {
      CAPTURE(sq);
      const auto found = enumerate_beta(f.threefold, f.surface, gamma, sq);
      CHECK(std::is_sorted(found.begin(), found.end()));
      const auto brute = box_search(f, gamma, sq, c.bound);
      std::set<IntVector> in_box;
      for (const auto& b : found) {
        CHECK(form(f.surface.gram, b, b) == sq);
        if (inside(b, c.bound)) in_box.insert(b);
      }
      CHECK(in_box == brute);
      CHECK(std::set<IntVector>(found.begin(), found.end()).size() == found.size());
    }
  }
}

TEST_CASE("gamma without integral beta gives nothing") {
  const Fixture f = load_fixture("cubic_p4_d3");
  // gamma + L^2/2 = 3/2 + 0 l is not integral.
  CHECK_FALSE(beta_constraint_lattice(f.surface, parse_gamma(f, "0"), l_squared(f.threefold)).has_value());
  const auto table = enumerate_contributions(f.threefold, f.surface, parse_gamma(f, "0"), 10, 2);
  CHECK(table.rows.empty());
}

TEST_CASE("quadric classes under the canonical twist") {
  const Fixture f = load_fixture("quadric_p4_d2");
  const long window = 3;

  const auto t1 = canonical_twist(f.threefold, f.surface, ChernVector{{1}, 0});
  REQUIRE(t1.applicable);
  CHECK(t1.t == -1);
  const auto lat1 = beta_constraint_lattice(f.surface, t1.ch.gamma, l_squared(f.threefold));
  REQUIRE(lat1.has_value());
  std::set<IntVector> got1, want1;
  for (long k = -window; k <= window; ++k) {
    got1.insert(lat1->point({k}));
    want1.insert({k, -k});
  }
  CHECK(got1 == want1);

  const auto t2 = canonical_twist(f.threefold, f.surface, ChernVector{{2}, 0});
  const auto lat2 = beta_constraint_lattice(f.surface, t2.ch.gamma, l_squared(f.threefold));
  REQUIRE(lat2.has_value());
  CHECK(lat2->particular == IntVector{1, 0});
  std::set<IntVector> got2, want2;
  for (long k = -window; k <= window; ++k) {
    got2.insert(lat2->point({k}));
    want2.insert({1 + k, -k});
  }
  CHECK(got2 == want2);
  for (long k = -window; k <= window; ++k) {
    CHECK(form(f.surface.gram, IntVector{1 + k, -k}, IntVector{1 + k, -k}) == -2 * k * k - 2 * k);
  }
}

TEST_CASE("canonical twist only where twisting preserves stability") {
  CHECK_FALSE(canonical_twist(load_fixture("blowup_p3_point").threefold, load_fixture("blowup_p3_point").surface,
                              ChernVector{{0, 0}, 0})
                  .applicable);
  const Fixture c = load_fixture("cubic_p4_d3");
  for (long num = -9; num <= 9; num += 2) {
    const auto t = canonical_twist(c.threefold, c.surface, ChernVector{{Rational(num, 2)}, 0});
    REQUIRE(t.applicable);
    const Rational reduced = t.ch.gamma[0] + Rational(3, 2);
    CHECK(reduced >= 0);
    CHECK(reduced < 3);
  }
}

TEST_CASE("n and xi are inverse; twisting shifts n by a multiple of L^3") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> d(-3, 3);
  const Fixture f = load_fixture("blowup_p3_line");
  const IntVector l2 = l_squared(f.threefold);
  for (int t = 0; t < 40; ++t) {
    const RatVector gamma = {Rational(d(rng)) + Rational(1, 2), Rational(d(rng))};
    const auto lat = beta_constraint_lattice(f.surface, gamma, l2);
    REQUIRE(lat.has_value());
    const IntVector beta = lat->point(std::vector<long>(lat->kernel.size(), d(rng)));
    const Integer n = 4 + rng() % 5;  // stays nonnegative after the shift (|s| <= 3, L^3 = 1)
    const Rational xi = xi_from_n(f.threefold, f.surface, gamma, beta, n);
    CHECK(n_from_xi(f.threefold, f.surface, gamma, beta, xi) == n);

    // Tensoring by L^s sends beta to beta + s L_S. The colength formula used
    // here is not twist-invariant: it moves by exactly s L^3.
    const long s = d(rng);
    const ChernVector tw = twist_chern(f.threefold, ChernVector{gamma, xi}, s);
    IntVector beta_t = beta;
    for (std::size_t i = 0; i < beta.size(); ++i) beta_t[i] += s * f.surface.line_bundle[i];
    const Integer l3 = triple_product(f.threefold, f.threefold.line_bundle, f.threefold.line_bundle, f.threefold.line_bundle);
    CHECK(xi_from_n(f.threefold, f.surface, tw.gamma, beta_t, n + s * l3) == tw.xi);
  }
}

TEST_CASE("negative or fractional colength means empty moduli") {
  const Fixture f = load_fixture("quadric_p4_d2");
  const RatVector gamma = {-1};
  const IntVector beta = {0, 0};
  const Rational xi0 = xi_from_n(f.threefold, f.surface, gamma, beta, 0);
  CHECK_THROWS_AS(n_from_xi(f.threefold, f.surface, gamma, beta, xi0 + 1), EmptyModuliError);
  CHECK_THROWS_AS(n_from_xi(f.threefold, f.surface, gamma, beta, xi0 - Rational(1, 3)), EmptyModuliError);
  CHECK_THROWS_AS(n_from_xi(f.threefold, f.surface, gamma, {1, 1}, xi0), std::invalid_argument);
}

TEST_CASE("contribution table: serial equals parallel, rows sorted and bounded") {
  for (const char* name : {"quadric_p4_d2", "blowup_p3_line", "cubic_p4_d3"}) {
    CAPTURE(name);
    const Fixture f = load_fixture(name);
    const RatVector gamma = std::string(name) == "cubic_p4_d3" ? RatVector{Rational(1, 2)}
                            : f.threefold.h4_rank == 1     ? RatVector{1}
                                                           : RatVector{Rational(1, 2), 0};
    const Rational cap = 4;
    const auto serial = enumerate_contributions(f.threefold, f.surface, gamma, cap, 2, Execution::serial);
    const auto parallel = enumerate_contributions(f.threefold, f.surface, gamma, cap, 2, Execution::parallel);
    REQUIRE(serial.rows.size() == parallel.rows.size());
    CHECK_FALSE(serial.rows.empty());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
      CHECK(serial.rows[i].beta == parallel.rows[i].beta);
      CHECK(serial.rows[i].n == parallel.rows[i].n);
      CHECK(serial.rows[i].q_exponent == parallel.rows[i].q_exponent);
    }
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
      const auto& r = serial.rows[i];
      CHECK(r.q_exponent <= cap);
      CHECK(r.n >= 0);
      CHECK(r.q_exponent == Rational(r.beta_sq) / 2 + ratio(serial.delta, 24) + Rational(r.n));
      CHECK(n_from_xi(f.threefold, f.surface, gamma, r.beta, r.xi) == r.n);
      if (i > 0) CHECK(serial.rows[i - 1].q_exponent <= r.q_exponent);
    }
  }
}
