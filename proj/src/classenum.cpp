#include "dtseries/classenum.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dtseries {

namespace {

RatVector target_class(const RatVector& gamma, const IntVector& l2) {
  if (gamma.size() != l2.size()) throw std::invalid_argument("gamma and L^2 have different lengths");
  RatVector t(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) t[i] = gamma[i] + Rational(l2[i]) / 2;
  return t;
}

// Gram matrix of the kernel basis: K^T G K.
std::vector<RatVector> kernel_gram(const SurfaceModel& s, const std::vector<IntVector>& kernel) {
  const std::size_t d = kernel.size();
  std::vector<RatVector> m(d, RatVector(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      m[i][j] = form(s.gram, kernel[i], kernel[j]);
      m[j][i] = m[i][j];
    }
  }
  return m;
}

RatVector kernel_pairing(const SurfaceModel& s, const std::vector<IntVector>& kernel, const IntVector& v) {
  RatVector b(kernel.size());
  for (std::size_t i = 0; i < kernel.size(); ++i) b[i] = form(s.gram, kernel[i], v);
  return b;
}

// ceil(p - 1/2): nearest integer, halves rounded down.
Integer round_half_down(const Rational& p) { return ceil_of(p - Rational(1, 2)); }

bool lex_less(const IntVector& a, const IntVector& b) { return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()); }

void require_on_lattice(const ThreefoldModel& x, const SurfaceModel& s, const RatVector& gamma, const IntVector& beta) {
  if (beta.size() != s.h2_rank) throw std::invalid_argument("beta has wrong length");
  const RatVector target = target_class(gamma, l_squared(x));
  const IntVector pushed = s.pushforward * beta;
  for (std::size_t i = 0; i < pushed.size(); ++i) {
    if (Rational(pushed[i]) != target[i]) throw std::invalid_argument("beta does not satisfy i_* beta = gamma + L^2/2");
  }
}

Rational n_offset(const ThreefoldModel& x, const RatVector& gamma) {
  const IntVector& l = x.line_bundle;
  return pair(x, l, gamma) / 2 + Rational(2 * triple_product(x, l, l, l)) / 3;
}

}  // namespace

IntVector ConstraintLattice::point(const std::vector<long>& coords) const {
  if (coords.size() != kernel.size()) throw std::invalid_argument("ConstraintLattice::point: wrong coordinate count");
  IntVector v = particular;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    if (coords[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += coords[i] * kernel[i][j];
  }
  return v;
}

std::optional<ConstraintLattice> beta_constraint_lattice(const SurfaceModel& s, const RatVector& gamma,
                                                         const IntVector& l2) {
  auto sol = solve_integer_system(s.pushforward, target_class(gamma, l2));
  if (!sol) return std::nullopt;
  ConstraintLattice lat{std::move(sol->particular), std::move(sol->kernel)};
  if (lat.kernel.empty()) return lat;

  // Center the particular solution: subtract the rounded projection onto the kernel.
  const auto m = kernel_gram(s, lat.kernel);
  const auto proj = solve_rational(m, kernel_pairing(s, lat.kernel, lat.particular));
  if (!proj) return lat;
  for (std::size_t i = 0; i < lat.kernel.size(); ++i) {
    const Integer r = round_half_down((*proj)[i]);
    if (r == 0) continue;
    for (std::size_t j = 0; j < lat.particular.size(); ++j) lat.particular[j] -= r * lat.kernel[i][j];
  }
  return lat;
}

std::vector<IntVector> enumerate_beta(const SurfaceModel& s, const ConstraintLattice& lattice, const Integer& beta_sq) {
  const IntVector& b0 = lattice.particular;
  const std::size_t d = lattice.kernel.size();
  const Integer b0_sq = form(s.gram, b0, b0);
  if (d == 0) {
    if (b0_sq == beta_sq) return {b0};
    return {};
  }

  // beta = b0 + K c; beta^2 = b0^2 + 2 b.c - c^T M c with M = -K^T G K, b = K^T G b0.
  auto m = kernel_gram(s, lattice.kernel);
  for (auto& row : m) {
    for (auto& e : row) e = -e;
  }
  const RatVector b = kernel_pairing(s, lattice.kernel, b0);
  const auto center = solve_rational(m, b);
  if (!center) throw GeometryError("enumerate_beta: residual form is degenerate (not negative definite)");

  // (c - c*)^T M (c - c*) = b0^2 + c*.b - beta_sq
  const Rational radius = Rational(b0_sq) + dot(*center, b) - Rational(beta_sq);
  if (radius < 0) return {};

  // Q(y) = sum_i q[i][i] (y_i + sum_{j>i} q[i][j] y_j)^2
  auto q = m;
  for (std::size_t i = 0; i < d; ++i) {
    if (q[i][i] <= 0) throw GeometryError("enumerate_beta: residual form is not negative definite");
    for (std::size_t j = i + 1; j < d; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < d; ++k) {
      for (std::size_t l = k; l < d; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
  }

  std::vector<IntVector> found;
  std::vector<Integer> c(d);
  std::vector<Rational> y(d);
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level, const Rational& budget) {
    const std::size_t i = level - 1;
    Rational shift = 0;
    for (std::size_t j = i + 1; j < d; ++j) shift += q[i][j] * y[j];
    const Rational mid = (*center)[i] - shift;
    const Rational span = budget / q[i][i];
    Integer root;
    mpz_sqrt(root.get_mpz_t(), floor_of(span).get_mpz_t());
    const Integer lo = ceil_of(mid - Rational(root) - 1);
    const Integer hi = floor_of(mid + Rational(root) + 1);
    for (Integer ci = lo; ci <= hi; ++ci) {
      const Rational off = Rational(ci) - mid;
      const Rational used = q[i][i] * off * off;
      if (used > budget) continue;
      c[i] = ci;
      y[i] = Rational(ci) - (*center)[i];
      if (i == 0) {
        IntVector beta = b0;
        for (std::size_t k = 0; k < d; ++k) {
          for (std::size_t j = 0; j < beta.size(); ++j) beta[j] += c[k] * lattice.kernel[k][j];
        }
        if (form(s.gram, beta, beta) == beta_sq) found.push_back(std::move(beta));
      } else {
        descend(i, budget - used);
      }
    }
  };
  descend(d, radius);
  std::sort(found.begin(), found.end(), lex_less);
  return found;
}

std::vector<IntVector> enumerate_beta(const ThreefoldModel& x, const SurfaceModel& s, const RatVector& gamma,
                                      const Integer& beta_sq) {
  const auto lat = beta_constraint_lattice(s, gamma, l_squared(x));
  if (!lat) return {};
  return enumerate_beta(s, *lat, beta_sq);
}

Integer n_from_xi(const ThreefoldModel& x, const SurfaceModel& s, const RatVector& gamma, const IntVector& beta,
                  const Rational& xi) {
  require_on_lattice(x, s, gamma, beta);
  const Rational n = Rational(form(s.gram, beta, beta)) / 2 + n_offset(x, gamma) - xi;
  if (!is_integer(n) || n < 0) throw EmptyModuliError("no sheaves with this ch_3: n = " + to_string(n));
  return n.get_num();
}

Rational xi_from_n(const ThreefoldModel& x, const SurfaceModel& s, const RatVector& gamma, const IntVector& beta,
                   const Integer& n) {
  require_on_lattice(x, s, gamma, beta);
  if (n < 0) throw std::invalid_argument("xi_from_n: n must be nonnegative");
  return Rational(form(s.gram, beta, beta)) / 2 + n_offset(x, gamma) - Rational(n);
}

namespace {

std::vector<long> window_coords(std::size_t index, std::size_t dim, long window) {
  const auto side = static_cast<std::size_t>(2 * window + 1);
  std::vector<long> coords(dim);
  for (std::size_t i = dim; i-- > 0;) {
    coords[i] = static_cast<long>(index % side) - window;
    index /= side;
  }
  return coords;
}

void rows_for_beta(const ThreefoldModel& x, const SurfaceModel& s, const RatVector& gamma, const Integer& delta,
                   const Rational& max_power, const IntVector& beta, std::vector<ContributionRow>& out) {
  const Integer beta_sq = form(s.gram, beta, beta);
  const Rational base = Rational(beta_sq) / 2 + ratio(delta, 24);
  const Rational offset = n_offset(x, gamma);
  if (base > max_power) return;
  const Integer n_max = floor_of(max_power - base);
  for (Integer n = 0; n <= n_max; ++n) {
    ContributionRow row;
    row.gamma = gamma;
    row.beta = beta;
    row.beta_sq = beta_sq;
    row.n = n;
    row.xi = Rational(beta_sq) / 2 + offset - Rational(n);
    row.q_exponent = base + Rational(n);
    out.push_back(std::move(row));
  }
}

}  // namespace

ContributionTable enumerate_contributions(const ThreefoldModel& x, const SurfaceModel& s, const RatVector& gamma,
                                          const Rational& max_power, long window, Execution exec) {
  if (window < 0) throw std::invalid_argument("enumerate_contributions: window must be nonnegative");
  ContributionTable table;
  table.gamma = gamma;
  table.delta = delta_invariant(s);
  table.window = window;
  table.max_power = max_power;
  const auto lat = beta_constraint_lattice(s, gamma, l_squared(x));
  if (!lat) return table;
  table.lattice = *lat;

  const std::size_t dim = lat->kernel.size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < dim; ++i) count *= static_cast<std::size_t>(2 * window + 1);

  if (exec == Execution::serial) {
    for (std::size_t idx = 0; idx < count; ++idx) {
      rows_for_beta(x, s, gamma, table.delta, max_power, lat->point(window_coords(idx, dim, window)), table.rows);
    }
  } else {
    std::vector<std::vector<ContributionRow>> partial;
#pragma omp parallel
    {
#ifdef _OPENMP
#pragma omp single
      partial.resize(static_cast<std::size_t>(omp_get_num_threads()));
      auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
      partial.resize(1);
      auto& mine = partial[0];
#endif
#pragma omp for schedule(dynamic, 16)
      for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(count); ++idx) {
        rows_for_beta(x, s, gamma, table.delta, max_power,
                      lat->point(window_coords(static_cast<std::size_t>(idx), dim, window)), mine);
      }
    }
    for (auto& p : partial) {
      std::move(p.begin(), p.end(), std::back_inserter(table.rows));
    }
  }

  std::sort(table.rows.begin(), table.rows.end(), [](const ContributionRow& a, const ContributionRow& b) {
    if (a.q_exponent != b.q_exponent) return a.q_exponent < b.q_exponent;
    if (a.beta != b.beta) return lex_less(a.beta, b.beta);
    return a.n < b.n;
  });
  return table;
}

ChernVector twist_chern(const ThreefoldModel& x, const ChernVector& ch, const Integer& t) {
  const IntVector& l = x.line_bundle;
  const IntVector l2 = l_squared(x);
  ChernVector out;
  out.gamma = ch.gamma;
  for (std::size_t i = 0; i < l2.size(); ++i) out.gamma[i] += Rational(t * l2[i]);
  out.xi = ch.xi + Rational(t) * pair(x, l, ch.gamma) + Rational(t * t * triple_product(x, l, l, l)) / 2;
  return out;
}

CanonicalTwist canonical_twist(const ThreefoldModel& x, const SurfaceModel& s, const ChernVector& ch) {
  CanonicalTwist ct;
  ct.ch = ch;
  if (x.h4_rank != 1) return ct;
  // L must be proportional to O(1): all 2x2 minors of (L, O(1)) vanish.
  const IntVector& l = x.line_bundle;
  const IntVector& h = x.polarization;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      if (l[i] * h[j] != l[j] * h[i]) return ct;
    }
  }
  const Integer c = (s.pushforward * s.line_bundle)[0];
  if (c <= 0) return ct;
  const Rational target = ch.gamma[0] + Rational(l_squared(x)[0]) / 2;
  ct.applicable = true;
  ct.t = -floor_of(target / Rational(c));
  ct.ch = twist_chern(x, ch, ct.t);
  return ct;
}

}  // namespace dtseries
