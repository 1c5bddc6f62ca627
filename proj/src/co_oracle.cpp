#include "dtseries/co_oracle.hpp"

#include <exception>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dtseries {

namespace {

std::string show(Character c) { return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")"; }

long det(Character x, Character y) { return x.a * y.b - x.b * y.a; }

// Evaluation point scaled to integers. The integrand has degree 0 in (s1, s2)
// because co and tangent weights have equal rank, so the scale cancels.
struct ScaledPoint {
  Integer s1;
  Integer s2;

  explicit ScaledPoint(const EvalPoint& p) {
    Integer d;
    mpz_lcm(d.get_mpz_t(), p.s1.get_den_mpz_t(), p.s2.get_den_mpz_t());
    const Rational a = p.s1 * d;
    const Rational b = p.s2 * d;
    s1 = a.get_num();
    s2 = b.get_num();
  }

  Integer operator()(Character c) const { return c.a * s1 + c.b * s2; }
};

Rational contribution_at(const HilbFixedPoint& f, const ToricSurfaceModel& s, const Linearization& lw,
                         const ScaledPoint& pt) {
  const WeightMultiset tan = tangent_weights(f, s);
  const WeightMultiset co = co_class_weights(f, s, lw);
  if (tan.rank() != co.rank()) throw OracleError("rank mismatch between tangent and CO weights");
  Integer num = 1;
  for (const auto& w : co.weights) {
    if (w.is_zero()) return 0;
    const Integer v = pt(w);
    if (v == 0) throw NonGenericPointError("character " + show(w) + " vanishes at the evaluation point");
    num *= v;
  }
  Integer den = 1;
  for (const auto& w : tan.weights) {
    const Integer v = pt(w);
    if (v == 0) throw NonGenericPointError("tangent character " + show(w) + " vanishes at the evaluation point");
    den *= v;
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

void ToricSurfaceModel::validate() const {
  if (charts.empty()) throw GeometryError(name + ": no fixed points");
  for (std::size_t i = 0; i < charts.size(); ++i) {
    const long d = det(charts[i].w1, charts[i].w2);
    if (d != 1 && d != -1) throw GeometryError(name + ": chart " + std::to_string(i) + " weights are not a lattice basis");
  }
  for (const auto& c : curves) {
    if (c.from >= charts.size() || c.to >= charts.size() || c.from == c.to) throw GeometryError(name + ": bad curve endpoints");
    if (c.direction != 0 && c.direction != 1) throw GeometryError(name + ": curve direction must be 0 or 1");
    const Character u = c.direction == 0 ? charts[c.from].w1 : charts[c.from].w2;
    const Chart& other = charts[c.to];
    if (!(other.w1 == -u) && !(other.w2 == -u)) {
      throw GeometryError(name + ": curve " + std::to_string(c.from) + "->" + std::to_string(c.to) +
                          " does not carry opposite tangent weights at its ends");
    }
  }
}

Linearization Linearization::shifted(Character c) const {
  Linearization out = *this;
  for (auto& w : out.weights) w = w + c;
  return out;
}

Linearization trivial_linearization(const ToricSurfaceModel& s) {
  Linearization lw;
  lw.name = "O";
  lw.weights.assign(s.charts.size(), Character{});
  lw.curve_degrees.assign(s.curves.size(), 0);
  return lw;
}

void validate_linearization(const ToricSurfaceModel& s, const Linearization& lw) {
  if (lw.weights.size() != s.charts.size()) throw GeometryError(lw.name + ": one weight per fixed point required");
  if (lw.curve_degrees.size() != s.curves.size()) throw GeometryError(lw.name + ": one degree per invariant curve required");
  for (std::size_t i = 0; i < s.curves.size(); ++i) {
    const ToricCurve& c = s.curves[i];
    const Character u = c.direction == 0 ? s.charts[c.from].w1 : s.charts[c.from].w2;
    const Character lhs = lw.weights[c.from] + (-lw.weights[c.to]);
    if (!(lhs == lw.curve_degrees[i] * u)) {
      throw GeometryError(lw.name + ": weights on curve " + std::to_string(i) + " differ by " + show(lhs) +
                          ", expected degree " + std::to_string(lw.curve_degrees[i]) + " times " + show(u));
    }
  }
}

std::vector<HilbFixedPoint> hilb_fixed_points(const ToricSurfaceModel& s, int n) {
  if (n < 0) throw std::invalid_argument("hilb_fixed_points: n must be nonnegative");
  const std::size_t charts = s.charts.size();
  std::vector<std::vector<Partition>> by_size;
  for (int k = 0; k <= n; ++k) by_size.push_back(partitions_of(k));

  std::vector<HilbFixedPoint> out;
  HilbFixedPoint current;
  current.assignment.resize(charts);
  current.total = n;
  std::function<void(std::size_t, int)> place = [&](std::size_t chart, int remaining) {
    if (chart + 1 == charts) {
      for (const auto& p : by_size[static_cast<std::size_t>(remaining)]) {
        current.assignment[chart] = p;
        out.push_back(current);
      }
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
        current.assignment[chart] = p;
        place(chart + 1, remaining - k);
      }
    }
  };
  if (charts > 0) place(0, n);
  return out;
}

WeightMultiset tangent_weights(const Partition& lambda, const Chart& chart) {
  WeightMultiset w;
  w.weights.reserve(2 * static_cast<std::size_t>(lambda.size()));
  for (const Cell c : lambda.cells()) {
    const long a = arm(lambda, c);
    const long l = leg(lambda, c);
    w.weights.push_back((-l) * chart.w1 + (a + 1) * chart.w2);
    w.weights.push_back((l + 1) * chart.w1 + (-a) * chart.w2);
  }
  return w;
}

WeightMultiset tangent_weights(const HilbFixedPoint& f, const ToricSurfaceModel& s) {
  if (f.assignment.size() != s.charts.size()) throw std::invalid_argument("fixed point does not match the surface");
  WeightMultiset w;
  for (std::size_t i = 0; i < s.charts.size(); ++i) {
    const auto local = tangent_weights(f.assignment[i], s.charts[i]);
    w.weights.insert(w.weights.end(), local.weights.begin(), local.weights.end());
  }
  return w;
}

WeightMultiset co_class_weights(const HilbFixedPoint& f, const ToricSurfaceModel& s, const Linearization& lw) {
  if (f.assignment.size() != s.charts.size() || lw.weights.size() != s.charts.size()) {
    throw std::invalid_argument("fixed point or linearization does not match the surface");
  }
  WeightMultiset w;
  for (std::size_t i = 0; i < s.charts.size(); ++i) {
    for (const auto& t : tangent_weights(f.assignment[i], s.charts[i]).weights) w.weights.push_back(lw.weights[i] + t);
  }
  return w;
}

Rational fixed_point_contribution(const HilbFixedPoint& f, const ToricSurfaceModel& s, const Linearization& lw,
                                  const EvalPoint& eval) {
  return contribution_at(f, s, lw, ScaledPoint(eval));
}

Rational integrate(const ToricSurfaceModel& s, const Linearization& lw, int n, const EvalPoint& eval, Execution exec) {
  if (eval.s1 == 0 || eval.s2 == 0) throw NonGenericPointError("evaluation point has a zero coordinate");
  const auto points = hilb_fixed_points(s, n);
  const ScaledPoint pt(eval);
  Rational total = 0;

  if (exec == Execution::serial) {
    for (const auto& f : points) total += contribution_at(f, s, lw, pt);
  } else {
    std::vector<Rational> partial;
    std::exception_ptr failure;
#pragma omp parallel
    {
#ifdef _OPENMP
#pragma omp single
      partial.resize(static_cast<std::size_t>(omp_get_num_threads()));
      Rational& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
      partial.resize(1);
      Rational& mine = partial[0];
#endif
#pragma omp for schedule(dynamic, 8)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(points.size()); ++i) {
        try {
          mine += contribution_at(points[static_cast<std::size_t>(i)], s, lw, pt);
        } catch (...) {
#pragma omp critical(dtseries_integrate_failure)
          if (!failure) failure = std::current_exception();
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (const auto& p : partial) total += p;
  }

  if (!is_integer(total)) {
    throw OracleError("localization sum for n=" + std::to_string(n) + " is not an integer: " + to_string(total));
  }
  return total;
}

EvalPoint random_eval_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100003, 100003);
  std::uniform_int_distribution<long> den(1, 997);
  auto draw = [&] {
    long p = 0;
    while (p == 0) p = num(rng);
    Rational r(p, den(rng));
    r.canonicalize();
    return r;
  };
  EvalPoint e;
  e.s1 = draw();
  e.s2 = draw();
  return e;
}

CoSeries co_series(const ToricSurfaceModel& s, const Linearization& lw, int max_n, std::uint64_t seed, Execution exec) {
  if (max_n < 0) throw std::invalid_argument("co_series: max_n must be nonnegative");
  constexpr int max_redraws = 32;
  std::mt19937_64 rng(seed);
  CoSeries out;
  out.seed = seed;

  auto evaluate = [&](EvalPoint& point) {
    for (;;) {
      point = random_eval_point(rng);
      try {
        std::vector<Integer> v;
        for (int n = 0; n <= max_n; ++n) v.push_back(integrate(s, lw, n, point, exec).get_num());
        return v;
      } catch (const NonGenericPointError&) {
        if (++out.redraws > max_redraws) throw OracleError("co_series: no generic evaluation point found");
      }
    }
  };

  out.values = evaluate(out.first);
  const auto check = evaluate(out.second);
  if (check != out.values) {
    std::string msg = "co_series: evaluation points disagree:";
    for (int n = 0; n <= max_n; ++n) {
      msg += " n=" + std::to_string(n) + ": " + out.values[static_cast<std::size_t>(n)].get_str() + " vs " +
             check[static_cast<std::size_t>(n)].get_str() + ";";
    }
    throw OracleError(msg);
  }
  return out;
}

std::vector<TraceEntry> fixed_point_trace(const ToricSurfaceModel& s, const Linearization& lw, int n,
                                          const EvalPoint& eval) {
  std::vector<TraceEntry> out;
  const ScaledPoint pt(eval);
  for (auto& f : hilb_fixed_points(s, n)) {
    Rational c = contribution_at(f, s, lw, pt);
    out.push_back(TraceEntry{std::move(f), std::move(c)});
  }
  return out;
}

}  // namespace dtseries
