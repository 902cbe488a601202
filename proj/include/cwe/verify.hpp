#pragma once

// Oracle-versus-closed-form verification of single parameter points and of
// sweep plans. Every check compares a closed form against direct enumeration
// or direct summation; failures are recorded, never thrown.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cwe/closedform.hpp"
#include "cwe/codes.hpp"

namespace cwe {

enum class CheckStatus { pass, fail, warn, skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  /// The lemma or theorem the check exercises.
  std::string locus;
  CheckStatus status = CheckStatus::pass;
  nlohmann::json expected;
  nlohmann::json actual;
  std::string detail;
  std::int64_t wall_us = 0;
};

struct VerifyReport {
  nlohmann::json params;
  std::vector<CheckResult> checks;

  /// No check failed (warnings and skips allowed).
  bool passed() const;
  const CheckResult* find(std::string_view name) const;
};

struct VerifyOptions {
  /// B(b,c) is checked for every b when q is at most this, else on a sample.
  std::uint64_t full_b_limit = 81;
  unsigned b_samples = 32;
  std::uint64_t seed = 0x5eed'c0de;
};

/// Names of the checks verify_point runs, in order.
const std::vector<std::string>& check_plan();

VerifyReport verify_point(const CodeParams& params, const VerifyOptions& opts = {});

/// B(b, c) by direct triple summation over y, z in F_p^* and x in F_q.
std::int64_t direct_B(const CodeParams& params, std::span<const std::uint8_t> quad_table, FqElem b, FpElem rho);
std::int64_t direct_B(const CodeParams& params, FqElem b, FpElem rho);

/// #{b : f_a(X) = -b^{p^k} solvable}, by evaluating f_a on every X.
std::uint64_t solvable_b_count_exhaustive(const WeilParams& wp, FqElem a);

struct RatioResult {
  bool ratio_exceeds = false;
  std::uint64_t w_min = 0;
  std::uint64_t w_max = 0;
};
/// w_min * p > w_max * (p - 1). Throws std::invalid_argument without a nonzero weight.
RatioResult ratio_check(const CodeSummary& summary);

/// A parameter point as written in a plan, before field construction.
struct PointSpec {
  unsigned p = 0;
  unsigned e = 0;
  unsigned k = 0;
  /// "theta^t", "[c_0, ..., c_{e-1}]", "holds" or "fails" (least theta power in
  /// that condition class).
  std::string a;
  unsigned c = 0;
};

class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses an a specification against a field. Throws HypothesisError.
FqElem parse_a_spec(const WeilParams& wp, std::string_view spec);
/// Builds the field and parameters for a point. Throws HypothesisError.
CodeParams resolve_point(const PointSpec& spec);

struct SweepEntry {
  PointSpec spec;
  std::optional<VerifyReport> report;
  /// Set when the point was skipped or is a duplicate.
  std::string diagnostic;
};

struct SweepResult {
  std::vector<SweepEntry> entries;
  /// check name -> status name -> count
  std::map<std::string, std::map<std::string, std::uint64_t>> summary;
  std::uint64_t invalid_points = 0;
  bool all_pass() const;
};

/// Runs every valid point, concurrently when hardware allows. Invalid points
/// and duplicates become diagnostic entries.
SweepResult sweep(const std::vector<PointSpec>& plan, const VerifyOptions& opts = {});

/// The desk plan: p in {3,5,7}, (e,k) in {(4,1),(4,2),(6,1),(6,3)}, one a per
/// condition class, c in {0,1}.
std::vector<PointSpec> desk_plan();

}  // namespace cwe
