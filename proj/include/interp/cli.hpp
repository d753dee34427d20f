#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace interp::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumeric = 3;

/// Payload failed schema validation. Raised before any computation starts.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Tolerances and caps. Every field can be overridden through a "config"
/// object in the payload or a --config file.
struct Config {
  double sdp_tolerance = 1e-7;
  int sdp_max_iterations = 50000;
  int stall_window = 500;
  int bisection_iterations = 60;
  double bisection_tolerance = 1e-7;
  double bisection_upper_bound = 1e6;
  double riesz_tolerance = 1e-3;
  double alpha = 1.0;
  double multiplier_tolerance = 1e-7;
  int gamma_degree = 40;
  double sv_cutoff = 1e-6;
  int group_element_cap = 10000;
  double bessel_threshold = 100.0;
  bool include_matrices = false;

  /// Overlay the keys present in `j`; unknown keys or wrong types throw ValidationError.
  void merge(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

const std::vector<std::string>& commands();

struct Outcome {
  nlohmann::json results;
  std::vector<std::string> warnings;
};

/// Validate `payload` for `command` and run the analysis. Throws
/// ValidationError for schema problems; library exceptions propagate.
Outcome execute(const std::string& command, const nlohmann::json& payload, const Config& config);

/// Full report for one request, or an error object. Returns the exit code.
int handle(const std::string& command, const nlohmann::json& payload, const nlohmann::json* config_file,
           nlohmann::json& report);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Stable 64-bit FNV-1a digest of the serialized payload, as hex.
std::string digest(const nlohmann::json& payload);

} // namespace interp::cli
