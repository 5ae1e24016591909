#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbk/report.hpp"
#include "qbk/rational.hpp"

namespace qbk::cli {

enum class Command { beta, beta_poly, sum, verify, table, zeta, limit };
enum class OutputFormat { text, json, csv };

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  Command command = Command::verify;
  std::vector<int> n_values;
  std::vector<int> k_values;
  std::optional<int> m;
  std::optional<int> n_max;
  std::optional<int> k_max;
  std::string identity = "all";
  std::string quantity = "beta";
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> output_path;
  // zeta / eval
  std::optional<Rational> s;
  std::optional<Rational> q;
  std::optional<Rational> tolerance;
  std::string variant = "shifted";
  // mode switches
  bool theorem3 = false;
  bool closed = false;
  bool printed = false;
  bool special = false;
  std::string method = "closed";
  std::optional<std::string> expr;
};

struct IdentityCase {
  IdentityId id;
  std::vector<int> params;
};

/// Maps each identity to the function that checks one parameter instance.
class IdentityRegistry {
 public:
  using Check = std::function<VerificationReport(const std::vector<int>& params)>;

  /// The identity checks shipped by the library.
  static const IdentityRegistry& standard();

  void set(IdentityId id, Check check) { checks_[id] = std::move(check); }
  VerificationReport run(const IdentityCase& c) const;

 private:
  std::map<IdentityId, Check> checks_;
};

/// Parses "3", "2,4,6" or "1..5" (inclusive). Throws std::invalid_argument.
std::vector<int> parse_int_list(const std::string& text);

/// Thread count from QBK_THREADS (unset or 0 means sequential).
unsigned threads_from_env();

/// Evaluates every case, at most `threads` at a time, and returns the reports in
/// (identity, params) order regardless of scheduling.
std::vector<VerificationReport> run_cases(const std::vector<IdentityCase>& cases,
                                          const IdentityRegistry& registry, unsigned threads);

/// CSV `n,k,value`, a JSON array, or aligned text; rows sorted by (n, k).
/// Throws OddOrder when an n in the range is odd.
std::string emit_table(const CliConfig& config);

/// Full command-line entry point. argv excludes the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err,
        const IdentityRegistry& registry = IdentityRegistry::standard());

}  // namespace qbk::cli
