#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "dtseries/fixture.hpp"
#include "dtseries/qseries.hpp"

namespace dtseries {

enum class Command { check, classes, series, oracle, verify };
enum class Format { json, csv, pretty };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int assumption_failure = 2;
inline constexpr int oracle_mismatch = 3;
inline constexpr int bad_input = 4;
}  // namespace exit_code

struct RunConfig {
  Command command = Command::check;
  std::string fixture;
  std::string gamma;          // as given on the command line, see parse_gamma
  std::size_t order = 8;      // N
  long window = 2;            // K
  int nmax = 4;
  int nmax_ceiling = 6;
  std::uint64_t seed = 1;
  Format format = Format::pretty;
  bool override_checks = false;
  std::optional<Integer> k;   // polarization parameter of the fixture family
  bool trivial_bundle = false;
  bool trace = false;
  Execution exec = Execution::parallel;

  /// Throws InputError when a field is out of range.
  void validate() const;
};

struct CommandOutput {
  int exit_code = exit_code::ok;
  nlohmann::json data;
  std::string csv;
  std::string pretty;
};

/// Runs one command. Input and geometry errors become exit code 4 with an
/// "error" entry in the data; they are never thrown.
CommandOutput run_command(const RunConfig& config);

std::string render(const CommandOutput& out, Format format);

Command command_from_string(const std::string& s);
std::string to_string(Command c);
Format format_from_string(const std::string& s);

nlohmann::json to_json(const QSeries& q);
QSeries series_from_json(const nlohmann::json& j);

}  // namespace dtseries
