#pragma once

// Verification harness: runs identity grids across the computation paths
// and renders reports as text, JSON or CSV.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flowvol {

enum class CaseStatus { pass, fail, reported };

std::string_view status_name(CaseStatus status);

struct CaseRecord {
  std::string id;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string expected;
  std::string actual;
  CaseStatus status = CaseStatus::fail;
};

struct ReportSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t reported = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseRecord> cases;
  std::int64_t duration_ms = 0;

  ReportSummary summary() const;
  bool ok() const { return summary().fail == 0; }
};

struct VerifyOptions {
  std::optional<int> max_n;  // per-suite default when empty
  std::optional<int> max_k;
  unsigned workers = 1;
};

/// ps-ehrhart, car-ehrhart, dyck-counts, cyclic, volumes, all.
const std::vector<std::string> &suite_names();

/// Runs a suite; cases appear in canonical order whatever the worker count.
/// Throws std::invalid_argument on an unknown suite or bad bounds.
VerificationReport run_verification(std::string_view suite,
                                    const VerifyOptions &options);

std::string render_text(const VerificationReport &report);
/// One JSON document with a trailing newline.
std::string render_json(const VerificationReport &report);
std::string render_csv(const VerificationReport &report);

/// FLOWVOL_WORKERS as a positive integer; 1 when unset. Throws
/// std::invalid_argument on a malformed value.
unsigned workers_from_environment();

} // namespace flowvol
