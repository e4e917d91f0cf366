#pragma once

// Command-line front end: atom reports, H2 curve files and comparison of a
// computed curve against a reference curve.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimint/atom.hpp"
#include "dimint/interp.hpp"

namespace dimint {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int invalid_arguments = 2;
inline constexpr int nonconvergence = 3;
inline constexpr int unwritable = 4;
inline constexpr int bad_input = 5;
}  // namespace exit_code

/// Environment variable that replaces the default restart count.
inline constexpr const char* kRestartsEnv = "DIMINT_RESTARTS";

enum class Command { Atom, H2Curve, Compare };
enum class OutputFormat { Text, Csv, Json };

struct RunConfig {
  Command command = Command::Atom;
  std::string element = "he";
  double r_min = 0.5;
  double r_max = 6.0;
  int points = 111;
  double opt_tol = 1e-10;
  int opt_restarts = 16;
  std::uint64_t seed = 12345;
  unsigned threads = 1;
  std::optional<OutputFormat> output_format;
  std::string output_path;  // empty: standard output
  std::string reference_path;
  std::string curve_path;  // compare: read the computed curve instead of building it

  OptimSettings settings() const { return {seed, opt_restarts, opt_tol}; }
  void validate() const;
};

struct ComparisonReport {
  double rmse;
  double max_abs_err;
  int n_points_compared;
  std::string interpolation_method_for_grid_mismatch = "linear";
};

/// Malformed or unusable input data; line is 1-based, 0 when not tied to a line.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

struct ReferenceCurve {
  std::vector<double> R;
  std::vector<double> E;
};

/// Accepts `R,E` files or curve files (the binding column is used).
/// R must be strictly increasing with at least two rows.
ReferenceCurve read_reference_csv(std::istream& in);
PotentialCurve read_curve_csv(std::istream& in);

std::string format_curve_csv(const PotentialCurve& curve);
std::string format_curve_json(const PotentialCurve& curve);

/// Linear interpolation of the reference onto the curve grid over the shared
/// R range. Throws InputError when the ranges do not overlap.
ComparisonReport compare_curves(const PotentialCurve& curve, const ReferenceCurve& reference);

/// Restart count from DIMINT_RESTARTS, or the built-in default.
int default_restarts();

int run_atom(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_h2_curve(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_compare(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments and dispatches; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dimint
