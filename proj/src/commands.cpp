#include "dtseries/commands.hpp"

#include <iomanip>
#include <sstream>

#include "dtseries/classenum.hpp"
#include "dtseries/co_oracle.hpp"

namespace dtseries {

using nlohmann::json;

namespace {

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

json to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string show(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string show(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string show(const QSeries& q, std::size_t max_terms = 12) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < q.order() && j < max_terms; ++j) {
    if (q[j] == 0) continue;
    os << (first ? "" : " + ") << to_string(q[j]) << " q^" << to_string(q.offset() + Rational(static_cast<long>(j)));
    first = false;
  }
  if (first) os << "0";
  os << " + O(q^" << to_string(q.valid_until()) << ")";
  return os.str();
}

json inequality_json(const InequalityCheck& c) {
  return {{"label", c.label}, {"lhs", c.lhs.get_str()}, {"rhs", c.rhs.get_str()}, {"holds", c.holds}};
}

Fixture load(const RunConfig& cfg) { return load_fixture(cfg.fixture, cfg.k); }

json fixture_header(const Fixture& f) {
  json j = {{"fixture", f.name}};
  if (f.polarization_value) j["k"] = f.polarization_value->get_str();
  return j;
}

// Largest beta^2/2 in the constraint lattice. beta.L_S = (gamma + L^2/2).L is
// fixed, so Hodge index gives beta^2 <= (beta.L_S)^2 / L_S^2.
Rational hodge_ceiling(const ThreefoldModel& x, const RatVector& gamma) {
  RatVector target = gamma;
  const IntVector l2 = l_squared(x);
  for (std::size_t i = 0; i < target.size(); ++i) target[i] += ratio(l2[i], 2);
  const Rational bl = pair(x, x.line_bundle, target);
  const Integer l3 = triple_product(x, x.line_bundle, x.line_bundle, x.line_bundle);
  return bl * bl / Rational(2 * l3);
}

struct CheckResult {
  AssumptionReport report;
  std::optional<Integer> vdim;
  std::string vdim_error;
};

CheckResult run_checks(const Fixture& f, const RatVector& gamma) {
  CheckResult r;
  r.report.positivity = check_positivity(f.threefold);
  r.report.stability = check_stability_gap(f.threefold, ChernVector{gamma, 0}, f.candidates, f.irreducible);
  try {
    r.vdim = virtual_dimension(f.threefold);
  } catch (const GeometryError& e) {
    r.vdim_error = e.what();
  }
  return r;
}

json check_json(const Fixture& f, const RatVector& gamma, const CheckResult& c) {
  json j = fixture_header(f);
  j["command"] = "check";
  j["gamma"] = to_json(gamma);
  j["positivity"] = {{"inequalities", {inequality_json(c.report.positivity.anticanonical_vs_cube),
                                       inequality_json(c.report.positivity.anticanonical_polarized)}},
                     {"vanishing_asserted", c.report.positivity.vanishing_asserted}};
  json entries = json::array();
  for (const auto& e : c.report.stability.entries) {
    entries.push_back({{"sub_class", to_json(e.sub_class)},
                       {"forbidden_m", to_string(e.forbidden_m)},
                       {"is_integer", e.is_integer},
                       {"holds", e.holds()}});
  }
  j["stability"] = {{"irreducible", c.report.stability.irreducible}, {"entries", entries},
                    {"passed", c.report.stability.passed()}};
  j["virtual_dimension"] = c.vdim ? json(c.vdim->get_str()) : json(nullptr);
  if (!c.vdim_error.empty()) j["virtual_dimension_error"] = c.vdim_error;
  j["linear_system_dim"] = f.threefold.linear_system_dim ? json(f.threefold.linear_system_dim->get_str()) : json(nullptr);
  j["delta"] = delta_invariant(f.surface).get_str();
  j["passed"] = c.report.passed();
  j["failures"] = c.report.failures();
  return j;
}

CommandOutput cmd_check(const RunConfig& cfg) {
  const Fixture f = load(cfg);
  const RatVector gamma = parse_gamma(f, cfg.gamma);
  const CheckResult c = run_checks(f, gamma);

  CommandOutput out;
  out.exit_code = c.report.passed() ? exit_code::ok : exit_code::assumption_failure;
  out.data = check_json(f, gamma, c);

  std::ostringstream csv;
  csv << "check,lhs,rhs,holds\n";
  for (const auto* q : {&c.report.positivity.anticanonical_vs_cube, &c.report.positivity.anticanonical_polarized}) {
    csv << '"' << q->label << "\"," << q->lhs << ',' << q->rhs << ',' << (q->holds ? "true" : "false") << '\n';
  }
  csv << "vanishing_asserted,,," << (c.report.positivity.vanishing_asserted ? "true" : "false") << '\n';
  for (const auto& e : c.report.stability.entries) {
    csv << "\"stability gap L1=" << show(e.sub_class) << "\"," << to_string(e.forbidden_m) << ",,"
        << (e.holds() ? "true" : "false") << '\n';
  }
  out.csv = csv.str();

  std::ostringstream p;
  p << "fixture " << f.name << "  gamma=" << show(gamma) << '\n';
  for (const auto* q : {&c.report.positivity.anticanonical_vs_cube, &c.report.positivity.anticanonical_polarized}) {
    p << "  " << (q->holds ? "ok  " : "FAIL") << "  " << q->label << "   (" << q->lhs << " vs " << q->rhs << ")\n";
  }
  p << "  " << (c.report.positivity.vanishing_asserted ? "ok  " : "FAIL") << "  cohomology vanishing asserted\n";
  if (c.report.stability.entries.empty()) {
    p << "  " << (f.irreducible ? "ok  " : "FAIL") << "  every member of |L| irreducible\n";
  }
  for (const auto& e : c.report.stability.entries) {
    p << "  " << (e.holds() ? "ok  " : "FAIL") << "  stability gap L1=" << show(e.sub_class)
      << "   m*=" << to_string(e.forbidden_m) << '\n';
  }
  p << "  virtual dimension " << (c.vdim ? c.vdim->get_str() : "undefined (" + c.vdim_error + ")");
  if (f.threefold.linear_system_dim) p << ", dim|L| = " << *f.threefold.linear_system_dim;
  p << "\n  delta = " << delta_invariant(f.surface) << '\n';
  p << (c.report.passed() ? "PASS" : "FAIL") << '\n';
  out.pretty = p.str();
  return out;
}

struct Twisted {
  CanonicalTwist twist;
  RatVector gamma;
};

Twisted canonical_gamma(const Fixture& f, const RatVector& gamma) {
  Twisted t;
  t.twist = canonical_twist(f.threefold, f.surface, ChernVector{gamma, 0});
  t.gamma = t.twist.applicable ? t.twist.ch.gamma : gamma;
  return t;
}

json twist_json(const Twisted& t) {
  return {{"applied", t.twist.applicable}, {"t", t.twist.t.get_str()}, {"gamma", to_json(t.gamma)}};
}

CommandOutput cmd_classes(const RunConfig& cfg) {
  const Fixture f = load(cfg);
  const RatVector input = parse_gamma(f, cfg.gamma);
  const Twisted tw = canonical_gamma(f, input);
  const Integer delta = delta_invariant(f.surface);
  const Rational max_power = hodge_ceiling(f.threefold, tw.gamma) + ratio(delta, 24) +
                             Rational(static_cast<long>(cfg.order) - 1);
  const ContributionTable table =
      enumerate_contributions(f.threefold, f.surface, tw.gamma, max_power, cfg.window, cfg.exec);

  CommandOutput out;
  json j = fixture_header(f);
  j["command"] = "classes";
  j["input_gamma"] = to_json(input);
  j["twist"] = twist_json(tw);
  j["delta"] = delta.get_str();
  j["window"] = cfg.window;
  j["max_power"] = to_string(max_power);
  j["particular"] = to_json(table.lattice.particular);
  json kernel = json::array();
  for (const auto& k : table.lattice.kernel) kernel.push_back(to_json(k));
  j["kernel"] = kernel;
  json rows = json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"beta", to_json(r.beta)},
                    {"beta_sq", r.beta_sq.get_str()},
                    {"n", r.n.get_str()},
                    {"xi", to_string(r.xi)},
                    {"q_exponent", to_string(r.q_exponent)}});
  }
  j["rows"] = rows;
  out.data = j;

  std::ostringstream csv;
  for (std::size_t i = 0; i < f.surface.h2_rank; ++i) csv << "beta_" << f.surface.h2_basis[i] << ',';
  csv << "beta_sq,n,xi_num,xi_den,q_exp_num,q_exp_den\n";
  for (const auto& r : table.rows) {
    for (const auto& b : r.beta) csv << b << ',';
    csv << r.beta_sq << ',' << r.n << ',' << r.xi.get_num() << ',' << r.xi.get_den() << ','
        << r.q_exponent.get_num() << ',' << r.q_exponent.get_den() << '\n';
  }
  out.csv = csv.str();

  std::ostringstream p;
  p << "fixture " << f.name << "  gamma=" << show(input);
  if (tw.twist.applicable && tw.twist.t != 0) p << "  (twisted by L^" << tw.twist.t << " to gamma=" << show(tw.gamma) << ")";
  p << "\n  delta = " << delta << ", window |k| <= " << cfg.window << ", q-exponents <= " << to_string(max_power) << '\n';
  if (table.rows.empty()) p << "  no classes: i_* beta = gamma + L^2/2 has no integral solution\n";
  p << "  " << std::setw(20) << std::left << "beta" << std::setw(8) << "beta^2" << std::setw(5) << "n"
    << std::setw(12) << "xi" << "q-exponent\n";
  for (const auto& r : table.rows) {
    p << "  " << std::setw(20) << show(r.beta) << std::setw(8) << r.beta_sq.get_str() << std::setw(5) << r.n.get_str()
      << std::setw(12) << to_string(r.xi) << to_string(r.q_exponent) << '\n';
  }
  out.pretty = p.str();
  return out;
}

struct SignResolution {
  SignConvention convention = SignConvention::theorem_minus_delta;
  std::string source = "default";
  std::optional<CoSeries> oracle;
  bool minus_matches = false;
  bool plus_matches = false;
};

bool matches(const std::vector<Integer>& values, const QSeries& expected) {
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (Rational(values[n]) != expected[n]) return false;
  }
  return true;
}

SignResolution resolve_sign(const ToricSurfaceModel& t, const Linearization& lw, long magnitude, const RunConfig& cfg) {
  SignResolution r;
  r.oracle = co_series(t, lw, cfg.nmax, cfg.seed, cfg.exec);
  const std::size_t len = static_cast<std::size_t>(cfg.nmax) + 1;
  r.minus_matches = matches(r.oracle->values, euler_product(-magnitude, len));
  r.plus_matches = matches(r.oracle->values, euler_product(magnitude, len));
  if (r.minus_matches != r.plus_matches) {
    r.convention = r.minus_matches ? SignConvention::theorem_minus_delta : SignConvention::example_plus_delta;
    r.source = "oracle";
  } else if (r.minus_matches) {
    r.source = "default (oracle depth too small to distinguish)";
  } else {
    r.source = "oracle mismatch";
  }
  return r;
}

json eval_json(const EvalPoint& e) { return json::array({to_string(e.s1), to_string(e.s2)}); }

json oracle_json(const CoSeries& c) {
  json values = json::array();
  for (const auto& v : c.values) values.push_back(v.get_str());
  return {{"values", values},
          {"seed", c.seed},
          {"eval_points", json::array({eval_json(c.first), eval_json(c.second)})},
          {"redraws", c.redraws}};
}

CommandOutput cmd_series(const RunConfig& cfg) {
  const Fixture f = load(cfg);
  const RatVector input = parse_gamma(f, cfg.gamma);
  const CheckResult check = run_checks(f, input);
  CommandOutput out;
  if (!check.report.passed() && !cfg.override_checks) {
    out.exit_code = exit_code::assumption_failure;
    out.data = check_json(f, input, check);
    out.data["command"] = "series";
    out.data["error"] = "assumptions fail; rerun with --override-checks to compute anyway";
    out.pretty = "assumptions fail for " + f.name + ":\n";
    for (const auto& s : check.report.failures()) out.pretty += "  " + s + "\n";
    out.pretty += "rerun with --override-checks to compute anyway\n";
    out.csv = out.pretty;
    return out;
  }

  const Twisted tw = canonical_gamma(f, input);
  const Integer delta = delta_invariant(f.surface);
  SignResolution sign;
  if (f.toric) {
    sign = resolve_sign(*f.toric, *f.toric_line_bundle, delta.get_si(), cfg);
    if (sign.source == "oracle mismatch") {
      out.exit_code = exit_code::oracle_mismatch;
      out.data = fixture_header(f);
      out.data["command"] = "series";
      out.data["error"] = "localization oracle matches neither sign of the eta power";
      out.data["oracle"] = oracle_json(*sign.oracle);
      out.pretty = "oracle mismatch: localization matches neither prod(1-q^k)^(+-delta)\n";
      out.csv = out.pretty;
      return out;
    }
  }

  const Rational max_power = hodge_ceiling(f.threefold, tw.gamma) + ratio(delta, 24);
  const ContributionTable table =
      enumerate_contributions(f.threefold, f.surface, tw.gamma, max_power, cfg.window, cfg.exec);
  const DtSeries s = dt_series(f.surface, table, cfg.order, sign.convention);

  json j = fixture_header(f);
  j["command"] = "series";
  j["input_gamma"] = to_json(input);
  j["twist"] = twist_json(tw);
  j["delta"] = delta.get_str();
  j["virtual_dimension"] = check.vdim ? json(check.vdim->get_str()) : json(nullptr);
  j["assumptions_passed"] = check.report.passed();
  j["convention"] = to_string(sign.convention);
  j["convention_source"] = sign.source;
  if (sign.oracle) j["oracle"] = oracle_json(*sign.oracle);
  j["window"] = cfg.window;
  j["order"] = cfg.order;
  j["definition_prefactor"] = to_string(s.definition_prefactor);
  j["theorem_prefactor"] = to_string(s.theorem_prefactor);
  json blocks = json::array();
  for (const auto& b : s.blocks) {
    blocks.push_back({{"beta", to_json(b.beta)},
                      {"beta_sq", b.beta_sq.get_str()},
                      {"prefactor_exponent", to_string(b.prefactor_exponent)},
                      {"series", to_json(b.block())}});
  }
  j["blocks"] = blocks;
  j["total"] = to_json(s.total);
  out.data = j;

  std::ostringstream csv;
  csv << "exponent_num,exponent_den,coefficient\n";
  for (std::size_t i = 0; i < s.total.order(); ++i) {
    const Rational e = s.total.offset() + Rational(static_cast<long>(i));
    csv << e.get_num() << ',' << e.get_den() << ',' << to_string(s.total[i]) << '\n';
  }
  out.csv = csv.str();

  std::ostringstream p;
  p << "fixture " << f.name << "  gamma=" << show(input);
  if (tw.twist.applicable && tw.twist.t != 0) p << "  (twisted by L^" << tw.twist.t << " to gamma=" << show(tw.gamma) << ")";
  p << "\n  delta = " << delta << ", v = " << (check.vdim ? check.vdim->get_str() : "?") << '\n';
  p << "  convention " << to_string(sign.convention) << " [" << sign.source << "]: E(q) = prod(1-q^k)^"
    << sign_of(sign.convention) * delta.get_si() << '\n';
  p << "  overall prefactor q^" << to_string(s.definition_prefactor) << " (definition), q^"
    << to_string(s.theorem_prefactor) << " (eta power)\n";
  if (!check.report.passed()) p << "  WARNING: assumptions fail; computed because of --override-checks\n";
  for (const auto& b : s.blocks) {
    p << "  beta=" << std::setw(16) << std::left << show(b.beta) << " q^" << to_string(b.prefactor_exponent) << " E(q)\n";
  }
  p << "  total: " << show(s.total, 40) << '\n';
  out.pretty = p.str();
  return out;
}

struct OracleTarget {
  const ToricSurfaceModel* surface = nullptr;
  Linearization lw;
  long magnitude = 0;
};

OracleTarget oracle_target(const Fixture& f, const RunConfig& cfg) {
  if (!f.toric) throw InputError(f.name + " has no toric surface model; the localization oracle needs one");
  OracleTarget t;
  t.surface = &*f.toric;
  if (cfg.trivial_bundle) {
    t.lw = trivial_linearization(*f.toric);
    t.magnitude = f.surface.euler.get_si();
  } else {
    t.lw = *f.toric_line_bundle;
    t.magnitude = delta_invariant(f.surface).get_si();
  }
  return t;
}

json trace_json(const ToricSurfaceModel& s, const Linearization& lw, int n, const EvalPoint& e) {
  json out = json::array();
  for (const auto& entry : fixed_point_trace(s, lw, n, e)) {
    json parts = json::array();
    for (const auto& p : entry.point.assignment) parts.push_back(p.parts());
    out.push_back({{"partitions", parts}, {"contribution", to_string(entry.contribution)}});
  }
  return out;
}

CommandOutput cmd_oracle(const RunConfig& cfg) {
  const Fixture f = load(cfg);
  const OracleTarget t = oracle_target(f, cfg);
  const CoSeries c = co_series(*t.surface, t.lw, cfg.nmax, cfg.seed, cfg.exec);

  CommandOutput out;
  json j = fixture_header(f);
  j["command"] = "oracle";
  j["surface"] = t.surface->name;
  j["bundle"] = t.lw.name;
  j["oracle"] = oracle_json(c);
  if (cfg.trace) j["trace"] = trace_json(*t.surface, t.lw, cfg.nmax, c.first);
  out.data = j;

  std::ostringstream csv;
  csv << "n,value\n";
  for (std::size_t n = 0; n < c.values.size(); ++n) csv << n << ',' << c.values[n] << '\n';
  out.csv = csv.str();

  std::ostringstream p;
  p << "localization on " << t.surface->name << " with " << t.lw.name << ", seed " << cfg.seed << '\n';
  for (std::size_t n = 0; n < c.values.size(); ++n) p << "  n=" << n << "  " << c.values[n] << '\n';
  out.pretty = p.str();
  return out;
}

CommandOutput cmd_verify(const RunConfig& cfg) {
  const Fixture f = load(cfg);
  const OracleTarget t = oracle_target(f, cfg);
  const SignResolution r = resolve_sign(*t.surface, t.lw, t.magnitude, cfg);
  const std::size_t len = static_cast<std::size_t>(cfg.nmax) + 1;
  const QSeries minus = euler_product(-t.magnitude, len);
  const QSeries plus = euler_product(t.magnitude, len);

  CommandOutput out;
  out.exit_code = (r.minus_matches || r.plus_matches) ? exit_code::ok : exit_code::oracle_mismatch;
  json j = fixture_header(f);
  j["command"] = "verify";
  j["surface"] = t.surface->name;
  j["bundle"] = t.lw.name;
  j["magnitude"] = t.magnitude;
  j["oracle"] = oracle_json(*r.oracle);
  json em = json::array();
  json ep = json::array();
  for (std::size_t n = 0; n < len; ++n) {
    em.push_back(to_string(minus[n]));
    ep.push_back(to_string(plus[n]));
  }
  j["expected_minus"] = em;
  j["expected_plus"] = ep;
  j["minus_matches"] = r.minus_matches;
  j["plus_matches"] = r.plus_matches;
  if (r.minus_matches != r.plus_matches) j["matching_exponent"] = r.minus_matches ? -t.magnitude : t.magnitude;
  if (!cfg.trivial_bundle) {
    j["convention"] = to_string(r.convention);
    j["convention_source"] = r.source;
  }
  if (cfg.trace) j["trace"] = trace_json(*t.surface, t.lw, cfg.nmax, r.oracle->first);
  out.data = j;

  std::ostringstream csv;
  csv << "n,oracle,expected_minus,expected_plus\n";
  for (std::size_t n = 0; n < len; ++n) {
    csv << n << ',' << r.oracle->values[n] << ',' << to_string(minus[n]) << ',' << to_string(plus[n]) << '\n';
  }
  out.csv = csv.str();

  std::ostringstream p;
  p << "localization on " << t.surface->name << " with " << t.lw.name << " vs prod(1-q^k)^(-+" << t.magnitude << ")\n";
  p << "  " << std::setw(4) << std::left << "n" << std::setw(14) << "oracle" << std::setw(14) << "exp -" << "exp +\n";
  for (std::size_t n = 0; n < len; ++n) {
    p << "  " << std::setw(4) << n << std::setw(14) << r.oracle->values[n].get_str() << std::setw(14)
      << to_string(minus[n]) << to_string(plus[n]) << '\n';
  }
  if (r.minus_matches && r.plus_matches) {
    p << "PASS (both signs agree to this depth)\n";
  } else if (r.minus_matches || r.plus_matches) {
    p << "PASS: matches exponent " << (r.minus_matches ? -t.magnitude : t.magnitude);
    if (!cfg.trivial_bundle) p << ", convention " << to_string(r.convention);
    p << '\n';
  } else {
    p << "FAIL: neither sign matches\n";
  }
  out.pretty = p.str();
  return out;
}

CommandOutput error_output(const RunConfig& cfg, int code, const std::string& message) {
  CommandOutput out;
  out.exit_code = code;
  out.data = {{"command", to_string(cfg.command)}, {"fixture", cfg.fixture}, {"error", message}};
  out.pretty = "error: " + message + "\n";
  out.csv = out.pretty;
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (order < 1) throw InputError("--order must be at least 1");
  if (window < 0) throw InputError("--window must be nonnegative");
  if (nmax < 0) throw InputError("--nmax must be nonnegative");
  if (nmax > nmax_ceiling) {
    throw InputError("--nmax " + std::to_string(nmax) + " exceeds the ceiling " + std::to_string(nmax_ceiling));
  }
  if (fixture.empty()) throw InputError("--fixture is required");
}

CommandOutput run_command(const RunConfig& cfg) {
  try {
    cfg.validate();
    switch (cfg.command) {
      case Command::check: return cmd_check(cfg);
      case Command::classes: return cmd_classes(cfg);
      case Command::series: return cmd_series(cfg);
      case Command::oracle: return cmd_oracle(cfg);
      case Command::verify: return cmd_verify(cfg);
    }
  } catch (const InputError& e) {
    return error_output(cfg, exit_code::bad_input, e.what());
  } catch (const GeometryError& e) {
    return error_output(cfg, exit_code::bad_input, e.what());
  } catch (const EmptyModuliError& e) {
    return error_output(cfg, exit_code::bad_input, e.what());
  } catch (const OracleError& e) {
    return error_output(cfg, exit_code::oracle_mismatch, e.what());
  }
  return error_output(cfg, exit_code::bad_input, "unknown command");
}

std::string render(const CommandOutput& out, Format format) {
  switch (format) {
    case Format::json: return out.data.dump(2) + "\n";
    case Format::csv: return out.csv;
    case Format::pretty: return out.pretty;
  }
  return out.pretty;
}

Command command_from_string(const std::string& s) {
  if (s == "check") return Command::check;
  if (s == "classes") return Command::classes;
  if (s == "series") return Command::series;
  if (s == "oracle") return Command::oracle;
  if (s == "verify") return Command::verify;
  throw InputError("unknown command '" + s + "'");
}

std::string to_string(Command c) {
  switch (c) {
    case Command::check: return "check";
    case Command::classes: return "classes";
    case Command::series: return "series";
    case Command::oracle: return "oracle";
    case Command::verify: return "verify";
  }
  return "?";
}

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "pretty") return Format::pretty;
  throw InputError("unknown format '" + s + "' (json, csv, pretty)");
}

json to_json(const QSeries& q) {
  json coeffs = json::array();
  for (const auto& c : q.coeffs()) coeffs.push_back(to_string(c));
  return {{"offset", to_string(q.offset())}, {"coeffs", coeffs}};
}

QSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("offset") || !j.contains("coeffs")) {
    throw InputError("series JSON needs 'offset' and 'coeffs'");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  return QSeries(parse_rational(j.at("offset").get<std::string>()), std::move(coeffs));
}

}  // namespace dtseries
