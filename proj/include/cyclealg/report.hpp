#pragma once

// Reports behind the cyclealg command line. Each command yields a JSON
// record, a plain-text rendering and an exit status (0 success, 3 negative
// verdict or failed assertion, 2 error or refusal).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclealg/tower_spec.hpp"

namespace cyclealg {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 2;
inline constexpr int kExitNegative = 3;

struct CommandReport {
  nlohmann::json record;
  std::string text;
  int exit_code = kExitOk;
};

/// Accepts "1,0,2", "(1,0,2)" or a JSON array.
std::vector<std::int64_t> parse_int_list(const std::string& text);
/// Accepts rows separated by ';' ("1,0;0,1") or a JSON array of arrays.
std::vector<std::vector<std::int64_t>> parse_int_matrix(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

CommandReport invariants_report(const TowerSpec& spec, const std::string& path, int levels);
CommandReport compare_report(const TowerSpec& a, const TowerSpec& b, const std::string& path_a,
                             const std::string& path_b);

CommandReport signature_compose_report(const Signature& inner, const Signature& outer);
CommandReport homrange_report(const Signature& s);
CommandReport fromk0h1_report(const K0Matrix& k0, std::int64_t h);

struct VerifyOptions {
  std::string target;
  int m = 3;
  std::optional<std::vector<std::int64_t>> dims;
  int trials = 100;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  double epsilon = 1e-4;
  std::vector<double> deltas{0.0, 1e-6, 1e-4, 1e-2, 0.1, 0.3};
  std::int64_t bound = 2;
};

/// Targets: lemma22, lemma31, example23, composition-oracle,
/// lemma42-roundtrip.
CommandReport verify_report(const VerifyOptions& opts);

/// Report for a failed command; `input` is the resolved invocation.
CommandReport error_report(const std::string& command, const nlohmann::json& input, const std::string& kind,
                           const std::string& message);

}  // namespace cyclealg
