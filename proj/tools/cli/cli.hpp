#pragma once

// Command-line front end: argument parsing, dispatch and output writers.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "locmaass/qforms.hpp"

namespace locmaass::cli {

enum class Subcommand { eval_f, eval_F, eval_theta, eval_poincare, jump, geodesics, verify };
enum class Format { json, csv, svg };

inline constexpr const char *kSchema = "locmaass/1";

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitCapacity = 4;

/// Malformed command line (exit code 2).
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// --help was given; what() holds the help text (exit code 0).
class HelpRequest : public UsageError {
public:
  using UsageError::UsageError;
};

struct Command {
  Subcommand sub = Subcommand::eval_f;
  int k = 2;
  long D = 5;
  cplx s{1.25, 0.0};
  std::vector<UHPoint> z;
  UHPoint tau{0.0, 1.0};
  long p = 3;
  std::optional<double> tol;
  std::optional<double> qz2_max;
  Format format = Format::json;
  std::string out;
  // eval-f / eval-F variants
  bool classical = false;
  bool harmonic = false;
  // eval-theta
  bool star = false;
  // eval-poincare
  double kappa = 2.5;
  long m = 1;
  long c_max = 40;
  // jump
  double r = 1e-3;
  // geodesics
  long a_max = 3;
  // verify
  std::string suite;

  friend bool operator==(const Command &, const Command &) = default;
};

const char *subcommand_name(Subcommand sub);
const char *format_name(Format f);

/// Parses argv (without the program name). Throws UsageError for malformed
/// input and DomainError for out-of-range parameters.
Command parse_args(const std::vector<std::string> &args);

/// Checks parameter ranges; throws DomainError.
void validate(const Command &cmd);

/// The command as a JSON string (the "command" member of every JSON output).
std::string command_to_json(const Command &cmd);
/// Inverse of command_to_json.
Command command_from_json(const std::string &text);

/// Executes a command, writing to `out` (or to cmd.out when set). Returns the
/// exit code; library errors are mapped to exit codes and reported on `err`.
int run(const Command &cmd, std::ostream &out, std::ostream &err);

/// parse_args + run with error-to-exit-code mapping.
int main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Names accepted by `verify`.
const std::vector<std::string> &verify_suites();

/// Runs a named verification suite ("all" runs every suite in order). `p` is
/// the odd prime used by the hecke suite.
std::vector<CheckResult> run_suite(const std::string &name, long p = 3);

/// One report line: "PASS <name> measured=<x> tol=<y>".
std::string format_check(const CheckResult &c);

} // namespace locmaass::cli
