#ifndef THETARING_DRIVER_HPP
#define THETARING_DRIVER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thetaring/coefficients.hpp"

namespace thetaring {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { table, machine };

struct RunConfig {
  std::vector<std::uint64_t> primes;  // empty: default grid
  std::vector<unsigned> exponents;    // empty: default grid
  unsigned extra_precision = 1;       // nilpotence is also checked at m = e + 1 + this
  unsigned trials = 200;
  std::uint64_t seed = 1;
  std::uint64_t span_limit = 4096;    // largest p^{2e} attempted
  std::uint64_t degree_cap = 1024;    // largest p^n for the F_n lemmas
  std::string out_report;
  std::string out_certs;
  OutputFormat format = OutputFormat::table;

  /// Throws UsageError.
  void validate() const;
  /// (p, e) cells. Without --p/--e: p in {2,3,5} x e in {1,2}, plus (2,3).
  std::vector<std::pair<std::uint64_t, unsigned>> grid() const;
  std::vector<std::uint64_t> prime_list() const;
};

enum class Verdict { pass, fail, skipped };
std::string to_string(Verdict v);

struct VerdictRecord {
  std::string check;
  Verdict verdict = Verdict::skipped;
  std::string reason;
};

struct CellRecord {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::vector<VerdictRecord> verdicts;
  std::vector<std::string> certificates;
  double seconds = 0;  // table output only
};

struct SuiteRecord {
  std::string name;
  std::uint64_t p = 0;
  unsigned passed = 0;
  unsigned failed = 0;
  unsigned skipped = 0;
  std::vector<std::string> failures;
  std::string skip_reason;
};

struct Report {
  std::string command;
  std::vector<CellRecord> cells;
  std::vector<SuiteRecord> suites;

  bool passed() const;
  /// Stable JSON; contains no timings so equal configs give equal bytes.
  std::string to_machine() const;
  std::string to_table() const;
};

Report cmd_axioms(const RunConfig& config);
Report cmd_verify(const RunConfig& config);
Report cmd_fn_check(const RunConfig& config);
/// Throws std::domain_error for n = 0.
Integer cmd_bound(const Integer& n);

/// Writes the report to config.out_report (if set) in the configured format.
void write_report(const Report& report, const RunConfig& config);

}  // namespace thetaring

#endif  // THETARING_DRIVER_HPP
