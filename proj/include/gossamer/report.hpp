#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gossamer {

struct CaseResult {
  std::string id;
  std::string inputs;
  std::string expected;
  std::string actual;
  bool pass = false;

  friend bool operator==(const CaseResult&, const CaseResult&) = default;
};

struct ReportSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  double duration_ms = 0.0;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;
  ReportSummary summary;

  bool all_passed() const { return summary.failed == 0; }

  /// Sorts cases by id and recounts the summary from them.
  void finalize();

  /// JSON form. Timing is left out unless asked for, so that a fixed
  /// (suite, seed, cases) triple always serializes to identical bytes.
  std::string to_json(bool include_timing = false) const;
  static VerificationReport from_json(std::string_view text);

  /// One line per failing case plus a summary line.
  std::string to_text(bool verbose = false) const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Suite identifiers accepted by run_suite.
std::span<const std::string_view> suite_names();

/// Runs a module's invariant suite with `cases` random instances drawn from
/// `seed`. "all" runs every suite with `cases` instances each. Throws
/// DomainError for an unknown name.
VerificationReport run_suite(std::string_view name, std::uint64_t seed, std::size_t cases);

}  // namespace gossamer
