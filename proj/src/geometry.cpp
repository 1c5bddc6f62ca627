#include "dtseries/geometry.hpp"

#include <stdexcept>
#include <utility>

namespace dtseries {

namespace {

void require_length(const IntVector& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw std::invalid_argument(std::string(what) + ": expected length " + std::to_string(n) + ", got " +
                                std::to_string(v.size()));
  }
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector negate(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

std::string show(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace

IntVector ThreefoldModel::h4_pairing() const {
  IntVector out(h4_rank);
  for (std::size_t k = 0; k < h4_rank; ++k) {
    for (std::size_t a = 0; a < h2_rank; ++a) out[k] += polarization[a] * pairing(a, k);
  }
  return out;
}

void ThreefoldModel::validate() const {
  const std::size_t r = h2_rank;
  if (r == 0 || h4_rank == 0) throw GeometryError(name + ": ranks must be positive");
  if (triple.size() != r * r * r) throw GeometryError(name + ": triple tensor has wrong size");
  if (canonical.size() != r || polarization.size() != r || line_bundle.size() != r) {
    throw GeometryError(name + ": K_X, O(1), L must have length h2_rank");
  }
  if (quad.size() != r * r) throw GeometryError(name + ": quad must have h2_rank^2 entries");
  for (const auto& q : quad) {
    if (q.size() != h4_rank) throw GeometryError(name + ": quad entries must have length h4_rank");
  }
  if (pairing.rows() != r || pairing.cols() != h4_rank) throw GeometryError(name + ": pairing must be h2_rank x h4_rank");
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      for (std::size_t c = 0; c < r; ++c) {
        const Integer& t = triple_at(a, b, c);
        if (t != triple_at(a, c, b) || t != triple_at(b, a, c) || t != triple_at(c, b, a)) {
          throw GeometryError(name + ": triple tensor is not symmetric");
        }
        Integer via_quad = 0;
        for (std::size_t k = 0; k < h4_rank; ++k) via_quad += quad_at(a, b)[k] * pairing(c, k);
        if (via_quad != t) {
          throw GeometryError(name + ": quad and pairing disagree with triple at (" + std::to_string(a) + "," +
                              std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
      if (quad_at(a, b) != quad_at(b, a)) throw GeometryError(name + ": quad is not symmetric");
    }
  }
}

void SurfaceModel::validate() const {
  const std::size_t s = h2_rank;
  if (s == 0) throw GeometryError("surface: h2_rank must be positive");
  if (gram.rows() != s || gram.cols() != s) throw GeometryError("surface: gram must be s x s");
  if (!gram.is_symmetric()) throw GeometryError("surface: gram is not symmetric");
  if (canonical.size() != s || line_bundle.size() != s || polarization.size() != s) {
    throw GeometryError("surface: K_S, L_S, O1_S must have length h2_rank");
  }
  if (restriction.rows() != s) throw GeometryError("surface: restriction must have h2_rank rows");
  if (pushforward.cols() != s) throw GeometryError("surface: pushforward must have h2_rank columns");
  const Signature sig = signature(gram);
  if (sig.positive != 1 || sig.negative != s - 1) {
    throw GeometryError("surface: intersection form has signature (" + std::to_string(sig.positive) + "," +
                        std::to_string(sig.negative) + "), Hodge index requires (1," + std::to_string(s - 1) + ")");
  }
}

Integer triple_product(const ThreefoldModel& x, const IntVector& a, const IntVector& b, const IntVector& c) {
  const std::size_t r = x.h2_rank;
  require_length(a, r, "triple_product");
  require_length(b, r, "triple_product");
  require_length(c, r, "triple_product");
  Integer s = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (b[j] == 0) continue;
      for (std::size_t k = 0; k < r; ++k) s += a[i] * b[j] * c[k] * x.triple_at(i, j, k);
    }
  }
  return s;
}

IntVector product_class(const ThreefoldModel& x, const IntVector& a, const IntVector& b) {
  require_length(a, x.h2_rank, "product_class");
  require_length(b, x.h2_rank, "product_class");
  IntVector out(x.h4_rank);
  for (std::size_t i = 0; i < x.h2_rank; ++i) {
    for (std::size_t j = 0; j < x.h2_rank; ++j) {
      const Integer w = a[i] * b[j];
      if (w == 0) continue;
      for (std::size_t k = 0; k < x.h4_rank; ++k) out[k] += w * x.quad_at(i, j)[k];
    }
  }
  return out;
}

Rational pair(const ThreefoldModel& x, const IntVector& divisor, const RatVector& curve) {
  require_length(divisor, x.h2_rank, "pair");
  if (curve.size() != x.h4_rank) throw std::invalid_argument("pair: curve class has wrong length");
  Rational s = 0;
  for (std::size_t a = 0; a < x.h2_rank; ++a) {
    for (std::size_t k = 0; k < x.h4_rank; ++k) s += divisor[a] * x.pairing(a, k) * curve[k];
  }
  return s;
}

IntVector l_squared(const ThreefoldModel& x) { return product_class(x, x.line_bundle, x.line_bundle); }

PositivityReport check_positivity(const ThreefoldModel& x) {
  const IntVector minus_k = negate(x.canonical);
  const IntVector& l = x.line_bundle;
  PositivityReport rep;
  rep.anticanonical_vs_cube.label = "-K_X.L^2 > L^3";
  rep.anticanonical_vs_cube.lhs = triple_product(x, minus_k, l, l);
  rep.anticanonical_vs_cube.rhs = triple_product(x, l, l, l);
  rep.anticanonical_vs_cube.holds = rep.anticanonical_vs_cube.lhs > rep.anticanonical_vs_cube.rhs;
  rep.anticanonical_polarized.label = "-K_X.L.O(1) > 0";
  rep.anticanonical_polarized.lhs = triple_product(x, minus_k, l, x.polarization);
  rep.anticanonical_polarized.rhs = 0;
  rep.anticanonical_polarized.holds = rep.anticanonical_polarized.lhs > 0;
  rep.vanishing_asserted = x.vanishing_asserted;
  return rep;
}

HilbertCoefficients hilbert_coeffs(const ThreefoldModel& x, const ChernVector& ch) {
  const IntVector& h = x.polarization;
  const IntVector& l = x.line_bundle;
  HilbertCoefficients c;
  c.a2 = Rational(triple_product(x, l, h, h)) / 2;
  c.a1 = pair(x, h, ch.gamma) - Rational(triple_product(x, l, x.canonical, h)) / 2;
  return c;
}

bool StabilityReport::passed() const {
  if (entries.empty()) return irreducible;
  for (const auto& e : entries) {
    if (!e.holds()) return false;
  }
  return true;
}

StabilityReport check_stability_gap(const ThreefoldModel& x, const ChernVector& ch,
                                    const std::vector<IntVector>& candidates, bool irreducible) {
  const IntVector& h = x.polarization;
  const HilbertCoefficients hc = hilbert_coeffs(x, ch);
  if (hc.a2 == 0) throw GeometryError("check_stability_gap: L.O(1)^2 vanishes");
  const Rational slope = hc.a1 / hc.a2;
  StabilityReport rep;
  rep.irreducible = irreducible;
  for (const auto& l1 : candidates) {
    require_length(l1, x.h2_rank, "check_stability_gap");
    bool zero = true;
    bool whole = true;
    for (std::size_t i = 0; i < l1.size(); ++i) {
      zero = zero && l1[i] == 0;
      whole = whole && l1[i] == x.line_bundle[i];
    }
    if (zero || whole) throw std::invalid_argument("check_stability_gap: candidate " + show(l1) + " is 0 or L");

    IntVector l1_minus_k(l1.size());
    for (std::size_t i = 0; i < l1.size(); ++i) l1_minus_k[i] = l1[i] - x.canonical[i];
    const Integer l1_hh = triple_product(x, l1, h, h);
    const Integer twist = triple_product(x, l1_minus_k, l1, h);
    GapEntry e;
    e.sub_class = l1;
    e.forbidden_m = (slope * l1_hh - twist) / 2;
    e.is_integer = is_integer(e.forbidden_m);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

std::vector<std::string> AssumptionReport::failures() const {
  std::vector<std::string> out;
  if (!positivity.anticanonical_vs_cube.holds) out.push_back(positivity.anticanonical_vs_cube.label);
  if (!positivity.anticanonical_polarized.holds) out.push_back(positivity.anticanonical_polarized.label);
  if (!positivity.vanishing_asserted) out.push_back("cohomology vanishing not asserted");
  if (stability.entries.empty() && !stability.irreducible) {
    out.push_back("stability gap: no decomposition candidates and L not flagged irreducible");
  }
  for (const auto& e : stability.entries) {
    if (!e.holds()) out.push_back("stability gap fails for L1=" + show(e.sub_class) + " at m=" + to_string(e.forbidden_m));
  }
  return out;
}

Integer virtual_dimension(const ThreefoldModel& x) {
  const Integer k_l2 = -triple_product(x, x.canonical, x.line_bundle, x.line_bundle);
  if (k_l2 % 2 != 0) throw GeometryError(x.name + ": -K_X.L^2 = " + k_l2.get_str() + " is odd");
  return k_l2 / 2 + 1;
}

Integer delta_invariant(const SurfaceModel& s) {
  return s.euler - form(s.gram, s.canonical, s.line_bundle) + form(s.gram, s.line_bundle, s.line_bundle);
}

std::vector<std::string> consistency_issues(const ThreefoldModel& x, const SurfaceModel& s) {
  std::vector<std::string> issues;
  const IntVector& l = x.line_bundle;
  if (s.restriction.cols() != x.h2_rank) {
    issues.push_back("restriction has " + std::to_string(s.restriction.cols()) + " columns, expected h2_rank(X)");
    return issues;
  }
  if (s.pushforward.rows() != x.h4_rank) {
    issues.push_back("pushforward has " + std::to_string(s.pushforward.rows()) + " rows, expected h4_rank(X)");
    return issues;
  }

  const Integer l_cube = triple_product(x, l, l, l);
  const Integer ls_sq = form(s.gram, s.line_bundle, s.line_bundle);
  if (ls_sq != l_cube) issues.push_back("L_S^2 = " + ls_sq.get_str() + " but L^3 = " + l_cube.get_str());

  const Integer ks_ls = form(s.gram, s.canonical, s.line_bundle);
  const Integer adj = triple_product(x, add(x.canonical, l), l, l);
  if (ks_ls != adj) issues.push_back("adjunction: K_S.L_S = " + ks_ls.get_str() + " but (K_X+L).L^2 = " + adj.get_str());

  if (s.pushforward * s.line_bundle != l_squared(x)) {
    issues.push_back("pushforward(L_S) = " + show(s.pushforward * s.line_bundle) + " differs from L^2 = " + show(l_squared(x)));
  }
  if (s.restriction * l != s.line_bundle) issues.push_back("restriction(L) differs from L_S");
  if (s.restriction * add(x.canonical, l) != s.canonical) issues.push_back("restriction(K_X+L) differs from K_S");
  if (s.restriction * x.polarization != s.polarization) issues.push_back("restriction(O(1)) differs from O1_S");

  // Projection formula: D . i_*(c) = i^*D . c on S.
  for (std::size_t a = 0; a < x.h2_rank; ++a) {
    IntVector d(x.h2_rank);
    d[a] = 1;
    const IntVector d_s = s.restriction * d;
    for (std::size_t j = 0; j < s.h2_rank; ++j) {
      const IntVector pushed = s.pushforward.col(j);
      Integer lhs = 0;
      for (std::size_t k = 0; k < x.h4_rank; ++k) lhs += x.pairing(a, k) * pushed[k];
      const Integer rhs = dot(s.gram.row(j), d_s);
      if (lhs != rhs) {
        issues.push_back("projection formula fails for D_" + std::to_string(a) + " and surface class " + std::to_string(j));
      }
    }
  }

  if (x.linear_system_dim && *x.linear_system_dim < 2) issues.push_back("dim|L| < 2");
  return issues;
}

}  // namespace dtseries
