#include "dtseries/fixture.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace dtseries {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

Integer to_int(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    const Rational r = parse_rational(v.get<std::string>());
    if (is_integer(r)) return r.get_num();
  }
  throw InputError(where + ": expected an integer");
}

Rational to_rat(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(Integer(v.get<long>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError(where + ": expected a rational (integer or \"p/q\" string)");
}

IntVector int_vector(const json& v, std::size_t len, const std::string& where) {
  if (!v.is_array() || v.size() != len) throw InputError(where + ": expected an array of length " + std::to_string(len));
  IntVector out;
  for (const auto& x : v) out.push_back(to_int(x, where));
  return out;
}

RatVector rat_vector(const json& v, std::size_t len, const std::string& where) {
  if (!v.is_array() || v.size() != len) throw InputError(where + ": expected an array of length " + std::to_string(len));
  RatVector out;
  for (const auto& x : v) out.push_back(to_rat(x, where));
  return out;
}

IntMatrix int_matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!v.is_array() || v.size() != rows) throw InputError(where + ": expected " + std::to_string(rows) + " rows");
  std::vector<IntVector> r;
  for (const auto& row : v) r.push_back(int_vector(row, cols, where));
  return IntMatrix::from_rows(r, cols);
}

std::vector<std::string> names(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) throw InputError(where + ": expected a nonempty array of names");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw InputError(where + ": basis names must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Character character(const json& v, const std::string& where) {
  const IntVector c = int_vector(v, 2, where);
  return Character{c[0].get_si(), c[1].get_si()};
}

ThreefoldModel parse_threefold(const json& t, const std::string& name) {
  const std::string where = name + ".threefold";
  ThreefoldModel x;
  x.name = name;
  x.h2_basis = names(field(t, "h2_basis", where), where + ".h2_basis");
  x.h4_basis = names(field(t, "h4_basis", where), where + ".h4_basis");
  x.h2_rank = x.h2_basis.size();
  x.h4_rank = x.h4_basis.size();
  const std::size_t r = x.h2_rank;

  const json& triple = field(t, "triple", where);
  if (!triple.is_array() || triple.size() != r) throw InputError(where + ".triple: expected r x r x r");
  for (const auto& plane : triple) {
    if (!plane.is_array() || plane.size() != r) throw InputError(where + ".triple: expected r x r x r");
    for (const auto& row : plane) {
      const IntVector v = int_vector(row, r, where + ".triple");
      x.triple.insert(x.triple.end(), v.begin(), v.end());
    }
  }
  const json& quad = field(t, "quad", where);
  if (!quad.is_array() || quad.size() != r) throw InputError(where + ".quad: expected r x r x h4_rank");
  for (const auto& row : quad) {
    if (!row.is_array() || row.size() != r) throw InputError(where + ".quad: expected r x r x h4_rank");
    for (const auto& entry : row) x.quad.push_back(int_vector(entry, x.h4_rank, where + ".quad"));
  }
  x.pairing = int_matrix(field(t, "pairing", where), r, x.h4_rank, where + ".pairing");
  x.canonical = int_vector(field(t, "canonical", where), r, where + ".canonical");
  x.line_bundle = int_vector(field(t, "L", where), r, where + ".L");
  if (t.contains("polarization")) x.polarization = int_vector(t.at("polarization"), r, where + ".polarization");
  if (t.contains("vanishing_asserted")) {
    if (!t.at("vanishing_asserted").is_boolean()) throw InputError(where + ".vanishing_asserted: expected boolean");
    x.vanishing_asserted = t.at("vanishing_asserted").get<bool>();
  }
  if (t.contains("linear_system_dim")) x.linear_system_dim = to_int(t.at("linear_system_dim"), where + ".linear_system_dim");
  return x;
}

SurfaceModel parse_surface(const json& j, std::size_t r, std::size_t h4, const std::string& name) {
  const std::string where = name + ".surface";
  SurfaceModel s;
  s.h2_basis = names(field(j, "h2_basis", where), where + ".h2_basis");
  s.h2_rank = s.h2_basis.size();
  s.gram = int_matrix(field(j, "gram", where), s.h2_rank, s.h2_rank, where + ".gram");
  s.canonical = int_vector(field(j, "K_S", where), s.h2_rank, where + ".K_S");
  s.line_bundle = int_vector(field(j, "L_S", where), s.h2_rank, where + ".L_S");
  s.euler = to_int(field(j, "euler", where), where + ".euler");
  s.restriction = int_matrix(field(j, "restriction", where), s.h2_rank, r, where + ".restriction");
  s.pushforward = int_matrix(field(j, "pushforward", where), h4, s.h2_rank, where + ".pushforward");
  if (j.contains("torsion_note")) s.torsion_note = j.at("torsion_note").get<std::string>();
  return s;
}

void parse_toric(const json& j, Fixture& f) {
  const std::string where = f.name + ".toric_surface";
  ToricSurfaceModel t;
  t.name = field(j, "name", where).get<std::string>();
  for (const auto& c : field(j, "charts", where)) {
    if (!c.is_array() || c.size() != 2) throw InputError(where + ".charts: each chart is a pair of characters");
    t.charts.push_back(Chart{character(c[0], where + ".charts"), character(c[1], where + ".charts")});
  }
  for (const auto& c : field(j, "curves", where)) {
    ToricCurve curve;
    curve.from = field(c, "from", where + ".curves").get<std::size_t>();
    curve.to = field(c, "to", where + ".curves").get<std::size_t>();
    curve.direction = field(c, "direction", where + ".curves").get<int>();
    t.curves.push_back(curve);
  }
  t.validate();

  const json& lb = field(j, "line_bundle", where);
  Linearization lw;
  lw.name = field(lb, "name", where + ".line_bundle").get<std::string>();
  for (const auto& w : field(lb, "weights", where + ".line_bundle")) lw.weights.push_back(character(w, where + ".line_bundle"));
  for (const auto& d : field(lb, "curve_degrees", where + ".line_bundle")) lw.curve_degrees.push_back(d.get<long>());
  validate_linearization(t, lw);

  if (Integer(static_cast<unsigned long>(t.charts.size())) != f.surface.euler) {
    throw GeometryError(where + ": fixed-point count differs from e(S)");
  }
  f.toric = std::move(t);
  f.toric_line_bundle = std::move(lw);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("cannot open fixture file '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Fixture parse_fixture(const json& doc, std::optional<Integer> polarization_value) {
  Fixture f;
  f.name = field(doc, "name", "fixture").get<std::string>();
  if (doc.contains("description")) f.description = doc.at("description").get<std::string>();
  f.threefold = parse_threefold(field(doc, "threefold", f.name), f.name);
  const std::size_t r = f.threefold.h2_rank;

  if (doc.contains("polarization_family")) {
    const json& pf = doc.at("polarization_family");
    const std::string where = f.name + ".polarization_family";
    PolarizationFamily fam;
    fam.parameter = field(pf, "parameter", where).get<std::string>();
    fam.base = int_vector(field(pf, "base", where), r, where + ".base");
    fam.step = int_vector(field(pf, "step", where), r, where + ".step");
    fam.default_value = to_int(field(pf, "default", where), where + ".default");
    const Integer k = polarization_value.value_or(fam.default_value);
    f.threefold.polarization.assign(r, 0);
    for (std::size_t i = 0; i < r; ++i) f.threefold.polarization[i] = fam.base[i] + k * fam.step[i];
    f.polarization_value = k;
    f.polarization_family = std::move(fam);
  } else if (polarization_value) {
    throw InputError(f.name + ": fixture has no polarization parameter");
  }
  if (f.threefold.polarization.size() != r) throw InputError(f.name + ": polarization missing");
  f.threefold.validate();

  f.surface = parse_surface(field(doc, "surface", f.name), r, f.threefold.h4_rank, f.name);
  f.surface.polarization = f.surface.restriction * f.threefold.polarization;
  f.surface.validate();
  const auto issues = consistency_issues(f.threefold, f.surface);
  if (!issues.empty()) throw GeometryError(f.name + ": " + issues.front());

  const json& dec = field(doc, "decompositions", f.name);
  f.irreducible = field(dec, "irreducible", f.name + ".decompositions").get<bool>();
  for (const auto& c : field(dec, "candidates", f.name + ".decompositions")) {
    f.candidates.push_back(int_vector(c, r, f.name + ".decompositions.candidates"));
  }

  if (doc.contains("gamma_parameters")) {
    for (const auto& p : doc.at("gamma_parameters")) {
      GammaParameter g;
      g.name = field(p, "name", f.name + ".gamma_parameters").get<std::string>();
      g.h4_class = rat_vector(field(p, "class", f.name + ".gamma_parameters"), f.threefold.h4_rank,
                              f.name + ".gamma_parameters");
      f.gamma_parameters.push_back(std::move(g));
    }
  }
  if (doc.contains("toric_surface")) parse_toric(doc.at("toric_surface"), f);
  if (doc.contains("notes")) {
    for (const auto& n : doc.at("notes")) f.notes.push_back(n.get<std::string>());
  }
  return f;
}

Fixture load_fixture(const std::string& name_or_path, std::optional<Integer> polarization_value) {
  const auto& builtins = builtin_fixture_names();
  std::string text;
  if (std::find(builtins.begin(), builtins.end(), name_or_path) != builtins.end()) {
    text = builtin_fixture_source(name_or_path);
  } else if (std::filesystem::exists(name_or_path)) {
    text = read_file(name_or_path);
  } else {
    throw InputError("unknown fixture '" + name_or_path + "' (not a builtin name or readable file)");
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("fixture '" + name_or_path + "' is not valid JSON: " + e.what());
  } catch (const json::type_error& e) {
    throw InputError("fixture '" + name_or_path + "': " + e.what());
  }
  try {
    return parse_fixture(doc, polarization_value);
  } catch (const json::exception& e) {
    throw InputError("fixture '" + name_or_path + "': " + e.what());
  }
}

RatVector parse_gamma(const Fixture& f, const std::string& text) {
  const std::size_t h = f.threefold.h4_rank;
  RatVector gamma(h);
  if (text.empty()) return gamma;

  std::vector<std::string> items;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) items.push_back(item);

  const bool named = text.find('=') != std::string::npos;
  if (!named) {
    if (items.size() != h) {
      throw InputError("--gamma: expected " + std::to_string(h) + " H^4 coordinates, got " + std::to_string(items.size()));
    }
    for (std::size_t i = 0; i < h; ++i) gamma[i] = parse_rational(items[i]);
    return gamma;
  }
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--gamma: mixed named and positional entries in '" + text + "'");
    const std::string key = item.substr(0, eq);
    const Rational value = parse_rational(item.substr(eq + 1));
    bool matched = false;
    for (const auto& p : f.gamma_parameters) {
      if (p.name != key) continue;
      for (std::size_t i = 0; i < h; ++i) gamma[i] += value * p.h4_class[i];
      matched = true;
    }
    for (std::size_t i = 0; !matched && i < h; ++i) {
      if (f.threefold.h4_basis[i] == key) {
        gamma[i] += value;
        matched = true;
      }
    }
    if (!matched) throw InputError("--gamma: '" + key + "' is neither a gamma parameter nor an H^4 basis name of " + f.name);
  }
  return gamma;
}

}  // namespace dtseries
