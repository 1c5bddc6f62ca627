#include <random>

#include "doctest.h"
#include "dtseries/fixture.hpp"

using namespace dtseries;

namespace {

IntVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-4, 4);
  IntVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

TEST_CASE("triple product is symmetric and trilinear on every fixture") {
  std::mt19937_64 rng(3);
  for (const auto& name : builtin_fixture_names()) {
    CAPTURE(name);
    const Fixture f = load_fixture(name);
    const std::size_t r = f.threefold.h2_rank;
    for (int t = 0; t < 20; ++t) {
      const IntVector a = random_vector(rng, r), b = random_vector(rng, r), c = random_vector(rng, r),
                      d = random_vector(rng, r);
      const Integer abc = triple_product(f.threefold, a, b, c);
      CHECK(abc == triple_product(f.threefold, b, c, a));
      CHECK(abc == triple_product(f.threefold, c, b, a));
      CHECK(triple_product(f.threefold, add(a, d), b, c) == abc + triple_product(f.threefold, d, b, c));
      CHECK(pair(f.threefold, c, to_rational(product_class(f.threefold, a, b))) == Rational(abc));
    }
  }
}

TEST_CASE("delta and virtual dimension per fixture") {
  struct Expect {
    const char* name;
    long delta;
    long vdim;
  };
  for (const Expect e : {Expect{"quadric_p4_d1", 7, 3}, Expect{"quadric_p4_d2", 10, 4}, Expect{"cubic_p4_d3", 15, 4},
                         Expect{"quartic_p4_d4", 28, 3}, Expect{"blowup_p3_point", 7, 3},
                         Expect{"blowup_p3_line", 8, 3}}) {
    CAPTURE(e.name);
    const Fixture f = load_fixture(e.name);
    CHECK(delta_invariant(f.surface) == e.delta);
    CHECK(virtual_dimension(f.threefold) == e.vdim);
    // delta = e(S) - K_S.L + L^2 agrees with e(S) - (K_X+L).L^2 + L^3 computed on X.
    const auto& l = f.threefold.line_bundle;
    IntVector kl = add(f.threefold.canonical, l);
    CHECK(delta_invariant(f.surface) ==
          f.surface.euler - triple_product(f.threefold, kl, l, l) + triple_product(f.threefold, l, l, l));
  }
}

TEST_CASE("quadric: v equals the independently counted dim|L|") {
  const Fixture f = load_fixture("quadric_p4_d2");
  REQUIRE(f.threefold.linear_system_dim.has_value());
  CHECK(virtual_dimension(f.threefold) == *f.threefold.linear_system_dim);
}

TEST_CASE("positivity on hypersurfaces") {
  for (const char* name : {"quadric_p4_d1", "quadric_p4_d2", "cubic_p4_d3"}) {
    CAPTURE(name);
    const auto rep = check_positivity(load_fixture(name).threefold);
    CHECK(rep.passed());
  }
  const auto quartic = check_positivity(load_fixture("quartic_p4_d4").threefold);
  CHECK_FALSE(quartic.anticanonical_vs_cube.holds);
  CHECK(quartic.anticanonical_vs_cube.lhs == 4);
  CHECK(quartic.anticanonical_vs_cube.rhs == 4);
  CHECK(quartic.anticanonical_polarized.holds);
}

TEST_CASE("blow-up of a point: stability gap") {
  const Fixture k1 = load_fixture("blowup_p3_point", Integer(1));
  const RatVector gamma = parse_gamma(k1, "r=0,s=-1");
  const auto rep = check_stability_gap(k1.threefold, ChernVector{gamma, 0}, k1.candidates, k1.irreducible);
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.entries[0].forbidden_m == 1);
  CHECK_FALSE(rep.passed());

  // m* from the Hilbert polynomial written out by hand: with O(1) = kL - E,
  // a2 = k^2/2, a1 = r k/2 + s + 2k, L1 = E.
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int t = 0; t < 30; ++t) {
    const long k = 2 + static_cast<long>(rng() % 4);
    const Fixture f = load_fixture("blowup_p3_point", Integer(k));
    const Rational r = d(rng), s = d(rng);
    const RatVector g = {r / 2, s};
    const auto e = check_stability_gap(f.threefold, ChernVector{g, 0}, f.candidates, false).entries.at(0);
    const Rational a2 = ratio(k * k, 2), a1 = r * k / 2 + s + 2 * k;
    // L1 = E and L1 - K = 4L.
    const Integer e_h_h = triple_product(f.threefold, {0, 1}, f.threefold.polarization, f.threefold.polarization);
    IntVector l1_minus_k = {4, 0};
    const Integer lk = triple_product(f.threefold, l1_minus_k, {0, 1}, f.threefold.polarization);
    const Rational m = (a1 / a2 * Rational(e_h_h) - Rational(lk)) / 2;
    CHECK(e.forbidden_m == m);
    CHECK(e.is_integer == is_integer(m));
  }
}

TEST_CASE("stability gap rejects degenerate candidates") {
  const Fixture f = load_fixture("blowup_p3_point");
  CHECK_THROWS(check_stability_gap(f.threefold, ChernVector{{0, 0}, 0}, {{0, 0}}, false));
  CHECK_THROWS(check_stability_gap(f.threefold, ChernVector{{0, 0}, 0}, {{1, 0}}, false));
  const auto empty = check_stability_gap(f.threefold, ChernVector{{0, 0}, 0}, {}, false);
  CHECK_FALSE(empty.passed());
}

TEST_CASE("Hodge index is enforced on the surface model") {
  Fixture f = load_fixture("quadric_p4_d2");
  f.surface.gram = IntMatrix::from_rows({{1, 0}, {0, 1}}, 2);
  CHECK_THROWS_AS(f.surface.validate(), GeometryError);
}

TEST_CASE("consistency checks catch corrupted models") {
  const Fixture good = load_fixture("cubic_p4_d3");
  CHECK(consistency_issues(good.threefold, good.surface).empty());

  Fixture bad = good;
  bad.surface.canonical[1] = 0;
  CHECK_FALSE(consistency_issues(bad.threefold, bad.surface).empty());

  bad = good;
  bad.surface.pushforward(0, 0) = 2;
  CHECK_FALSE(consistency_issues(bad.threefold, bad.surface).empty());

  bad = load_fixture("blowup_p3_line");
  bad.surface.restriction(1, 1) = 0;
  CHECK_FALSE(consistency_issues(bad.threefold, bad.surface).empty());
}

TEST_CASE("threefold validation catches ring inconsistencies") {
  Fixture f = load_fixture("blowup_p3_point");
  f.threefold.triple[7] = 2;  // E^3
  CHECK_THROWS_AS(f.threefold.validate(), GeometryError);
  f = load_fixture("blowup_p3_point");
  f.threefold.triple[1] = 5;  // L.L.E only, breaks symmetry
  CHECK_THROWS_AS(f.threefold.validate(), GeometryError);
}

TEST_CASE("virtual dimension requires -K.L^2 even") {
  Fixture f = load_fixture("quadric_p4_d1");
  f.threefold.canonical = {-3};
  CHECK_THROWS_AS(virtual_dimension(f.threefold), GeometryError);
}

TEST_CASE("hilbert coefficients") {
  const Fixture f = load_fixture("quadric_p4_d2");
  const auto h = hilbert_coeffs(f.threefold, ChernVector{{1}, 0});
  CHECK(h.a2 == 1);                      // L.H^2/2 = 2/2
  CHECK(h.a1 == 1 + Rational(3));        // gamma.H - L.K.H/2 = 1 + 6/2
}
