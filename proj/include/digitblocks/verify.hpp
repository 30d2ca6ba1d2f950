#pragma once

// Verification suites: every closed form in the library checked against an
// independent numeric or structural route. The CLI `verify` command and the
// acceptance test binary both run these.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "digitblocks/json_io.hpp"

namespace digitblocks::verify {

enum class CheckKind { Exact, Symbolic, Numeric, Runtime };

std::string kind_name(CheckKind k);

struct CheckRecord {
  std::string id;  // "C03.deg2.w=101.enclosure"
  CheckKind kind;
  std::string lhs;
  std::string rhs;
  double tolerance;  // 0 for exact checks
  bool pass;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckRecord> records;  // sorted by id
  bool pass = true;
  double elapsed_seconds = 0.0;
};

struct VerifyOptions {
  /// Base term budget; criteria that sum 10^5 or 10^7 terms scale it by
  /// 1/10 and 10.
  std::uint64_t terms = 1'000'000;
  /// Multiplies every numeric tolerance.
  double tolerance_scale = 1.0;
  std::uint64_t seed = 20240611;
  /// Record id -> value substituted for the record's right-hand side.
  std::map<std::string, double> overrides;
};

/// Collects check records for one criterion.
class Checker {
public:
  Checker(std::string prefix, const VerifyOptions& options);

  void close(const std::string& id, double lhs, double rhs, double tol);
  void relative(const std::string& id, double lhs, double rhs, double rel_tol);
  void at_most(const std::string& id, double value, double bound);
  void exact(const std::string& id, bool ok, std::string lhs, std::string rhs);
  void symbolic(const std::string& id, const SymbolicConstant& lhs, const SymbolicConstant& rhs);
  void runtime(double seconds, double limit);

  const VerifyOptions& options() const noexcept { return options_; }
  std::vector<CheckRecord>& records() noexcept { return records_; }

private:
  double rhs_value(const std::string& full_id, double rhs) const;

  std::string prefix_;
  const VerifyOptions& options_;
  std::vector<CheckRecord> records_;
};

struct Criterion {
  int number;
  std::string suite;  // digits | special | theorems | base | transform
  std::string title;
  double max_seconds;  // 0: no runtime limit
  std::function<void(Checker&)> run;
};

/// The thirteen acceptance criteria, in order.
const std::vector<Criterion>& criteria();

struct CriterionResult {
  const Criterion* criterion;
  std::vector<CheckRecord> records;
  double seconds;
  bool pass;
};

CriterionResult run_criterion(const Criterion& c, const VerifyOptions& options);

/// "all" or one suite name.
bool is_suite(std::string_view name);
VerifyReport run_suite(std::string_view suite, const VerifyOptions& options);

Json to_json(const VerifyReport& report);
std::string to_text(const VerifyReport& report);

/// key=value lines; '#' starts a comment. Keys: terms, tolerance_scale,
/// seed, override.<record id>. Throws std::invalid_argument on bad input.
VerifyOptions parse_config(std::string_view text, VerifyOptions base = {});

/// Accepts integers and scientific notation ("1e6") that denote a positive
/// integer.
std::uint64_t parse_count(std::string_view text);

}  // namespace digitblocks::verify
