#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cnmge/problems.hpp"
#include "cnmge/qge.hpp"

namespace cnmge {

enum class RunStatus { kSolved, kSolvedUnknownMin, kFailed };

std::string_view to_string(RunStatus status);
std::optional<RunStatus> parse_status(std::string_view text);

/// One row of the benchmark table.
struct RunReport {
  std::string problem;
  int n = 0;
  double f_min = 0.0;
  std::optional<double> known_min;
  RunStatus status = RunStatus::kFailed;
  int stationary_count = 0;
  long f_evals = 0;
  long jac_evals = 0;
  double wall_seconds = 0.0;

  bool converged_polish = false;
  std::string x_min_digest;  ///< first few coordinates, for the text table
};

enum class ReportFormat { kCsv, kJson, kTable };

namespace report {

/// Acceptance band for the unknown-minimum comparison against a reference value.
constexpr double kReferenceRelTol = 1e-3;

/// Status for a finished run: solved when |f - known| <= tol (f <= known + tol
/// for box-constrained values); without a known minimum, a run is compared
/// against the reference value when the dimension matches.
RunStatus classify(const Problem& problem, double f_min, double tol);

RunReport make_report(const Problem& problem, const GlobalResult& result, double tol);

/// Report row for a run that threw before producing a result.
RunReport failed_report(const Problem& problem);

/// First `count` coordinates formatted as "(a, b, c, ...)".
std::string digest(const Vector& x, int count = 4);

/// CSV header: problem,n,f_min,known_min,status,stationary_count,f_evals,jac_evals,wall_seconds
std::string write_report(const std::vector<RunReport>& reports, ReportFormat format);

/// Parses the JSON form back into rows (digest and polish flag are not serialized).
std::vector<RunReport> parse_json(const std::string& text);

}  // namespace report
}  // namespace cnmge
