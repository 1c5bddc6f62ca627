#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dtseries/co_oracle.hpp"
#include "dtseries/geometry.hpp"

namespace dtseries {

/// Named coordinate of gamma, e.g. r with class L^2/2; `--gamma r=1,s=0`.
struct GammaParameter {
  std::string name;
  RatVector h4_class;
};

/// Polarization O(1) = base + k * step.
struct PolarizationFamily {
  std::string parameter;
  IntVector base;
  IntVector step;
  Integer default_value;
};

/// A validated geometry fixture: threefold, general member of |L|, candidate
/// decompositions L = L_1 + L_2, and optionally a toric model of S.
struct Fixture {
  std::string name;
  std::string description;
  ThreefoldModel threefold;
  SurfaceModel surface;
  bool irreducible = false;
  std::vector<IntVector> candidates;
  std::vector<GammaParameter> gamma_parameters;
  std::optional<PolarizationFamily> polarization_family;
  std::optional<Integer> polarization_value;
  std::optional<ToricSurfaceModel> toric;
  std::optional<Linearization> toric_line_bundle;
  std::vector<std::string> notes;
};

const std::vector<std::string>& builtin_fixture_names();
/// Raw JSON text of a compiled-in fixture; throws InputError for unknown names.
const std::string& builtin_fixture_source(const std::string& name);

/// Parses and validates. `polarization_value` overrides the family default.
Fixture parse_fixture(const nlohmann::json& doc, std::optional<Integer> polarization_value = std::nullopt);

/// Builtin name or path to a JSON file.
Fixture load_fixture(const std::string& name_or_path, std::optional<Integer> polarization_value = std::nullopt);

/// "1,0" (H^4 coordinates) or "r=1,s=-1" (gamma parameters or H^4 basis names).
/// Empty text gives gamma = 0.
RatVector parse_gamma(const Fixture& f, const std::string& text);

}  // namespace dtseries
