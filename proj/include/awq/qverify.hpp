#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "awq/errors.hpp"
#include "awq/field.hpp"
#include "awq/rational.hpp"

namespace awq::qv {

/// Bad command line or configuration; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kSchemaVersion = 1;
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

enum class Mode { Formal, Rational, Float };

struct FamilyArgs {
  std::string name;
  std::map<std::string, std::string> params;  // values in the Scalar grammar
};

struct VerifyConfig {
  std::string command;   // gen | fit | verify | system
  FamilyArgs family;
  std::string relation;  // verify only
  std::optional<std::string> pi;
  long n_min = 2;
  long n_max = 32;
  Mode mode = Mode::Formal;
  awq::Rational u0{1, 2};
  double tol = kDefaultFloatTol;
  bool waive_standing_assumption = false;
  std::string input;  // system: JSON file with explicit sequences
};

struct Outcome {
  nlohmann::json report;
  int exit_code = kExitPass;
};

/// Default horizon: $QVERIFY_HORIZON when set to a nonnegative integer, else 32.
long default_horizon();

Mode parse_mode(const std::string& s);
const char* mode_name(Mode m);

/// One line per catalog family with its parameters.
std::string catalog_listing();

/// Runs one command. Throws UsageError for invalid configurations; mathematical
/// failures are reported in the outcome with exit code 1.
Outcome run(const VerifyConfig& cfg);

/// json (pretty, stable key order), csv or text.
std::string render(const nlohmann::json& report, const std::string& format);

}  // namespace awq::qv
