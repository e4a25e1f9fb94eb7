#include "cnmge/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cnmge {

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kSolved:
      return "solved";
    case RunStatus::kSolvedUnknownMin:
      return "solved_unknown_min";
    case RunStatus::kFailed:
      return "failed";
  }
  return "failed";
}

std::optional<RunStatus> parse_status(std::string_view text) {
  if (text == "solved") return RunStatus::kSolved;
  if (text == "solved_unknown_min") return RunStatus::kSolvedUnknownMin;
  if (text == "failed") return RunStatus::kFailed;
  return std::nullopt;
}

namespace report {

namespace {

std::string g9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

// Rounds to 9 significant digits so JSON output carries the same digits as CSV.
double round9(double v) { return std::isfinite(v) ? std::stod(g9(v)) : v; }

nlohmann::json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round9(v);
}

}  // namespace

RunStatus classify(const Problem& problem, double f_min, double tol) {
  if (!std::isfinite(f_min)) return RunStatus::kFailed;
  if (problem.known_min) {
    const double known = *problem.known_min;
    const bool ok = problem.box_constrained_min ? f_min <= known + tol
                                                : std::abs(f_min - known) <= tol;
    return ok ? RunStatus::kSolved : RunStatus::kFailed;
  }
  if (problem.reference_value && problem.reference_dimension == problem.dimension) {
    const double ref = *problem.reference_value;
    if (f_min > ref + kReferenceRelTol * std::abs(ref)) return RunStatus::kFailed;
  }
  return RunStatus::kSolvedUnknownMin;
}

std::string digest(const Vector& x, int count) {
  std::ostringstream os;
  os << '(';
  const Eigen::Index shown = std::min<Eigen::Index>(x.size(), count);
  for (Eigen::Index i = 0; i < shown; ++i) {
    if (i > 0) os << ", ";
    os << std::setprecision(6) << x[i];
  }
  if (x.size() > shown) os << ", ...";
  os << ')';
  return os.str();
}

RunReport make_report(const Problem& problem, const GlobalResult& result, double tol) {
  RunReport r;
  r.problem = problem.key;
  r.n = problem.dimension;
  r.f_min = result.f_min;
  r.known_min = problem.known_min;
  r.status = classify(problem, result.f_min, tol);
  r.stationary_count = static_cast<int>(result.stationary.size());
  r.f_evals = result.f_evals;
  r.jac_evals = result.jac_evals;
  r.wall_seconds = result.wall_seconds;
  r.converged_polish = result.polish_converged;
  r.x_min_digest = digest(result.x_min);
  return r;
}

RunReport failed_report(const Problem& problem) {
  RunReport r;
  r.problem = problem.key;
  r.n = problem.dimension;
  r.f_min = std::nan("");
  r.known_min = problem.known_min;
  r.status = RunStatus::kFailed;
  return r;
}

std::string write_report(const std::vector<RunReport>& reports, ReportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ReportFormat::kCsv: {
      os << "problem,n,f_min,known_min,status,stationary_count,f_evals,jac_evals,wall_seconds\n";
      for (const RunReport& r : reports) {
        os << r.problem << ',' << r.n << ',' << g9(r.f_min) << ','
           << (r.known_min ? g9(*r.known_min) : std::string()) << ',' << to_string(r.status)
           << ',' << r.stationary_count << ',' << r.f_evals << ',' << r.jac_evals << ','
           << g9(r.wall_seconds) << '\n';
      }
      break;
    }
    case ReportFormat::kJson: {
      nlohmann::json rows = nlohmann::json::array();
      for (const RunReport& r : reports) {
        rows.push_back({
            {"problem", r.problem},
            {"n", r.n},
            {"f_min", number_or_null(r.f_min)},
            {"known_min", r.known_min ? number_or_null(*r.known_min) : nlohmann::json(nullptr)},
            {"status", to_string(r.status)},
            {"stationary_count", r.stationary_count},
            {"f_evals", r.f_evals},
            {"jac_evals", r.jac_evals},
            {"wall_seconds", number_or_null(r.wall_seconds)},
        });
      }
      os << rows.dump(2) << '\n';
      break;
    }
    case ReportFormat::kTable: {
      os << std::left << std::setw(24) << "problem" << std::right << std::setw(6) << "n"
         << std::setw(18) << "f_min" << std::setw(18) << "known_min" << "  " << std::left
         << std::setw(20) << "status" << std::right << std::setw(8) << "K" << std::setw(10)
         << "seconds" << "  x_min\n";
      for (const RunReport& r : reports) {
        os << std::left << std::setw(24) << r.problem << std::right << std::setw(6) << r.n
           << std::setw(18) << g9(r.f_min) << std::setw(18)
           << (r.known_min ? g9(*r.known_min) : std::string("-")) << "  " << std::left
           << std::setw(20) << to_string(r.status) << std::right << std::setw(8)
           << r.stationary_count << std::setw(10) << std::fixed << std::setprecision(3)
           << r.wall_seconds << std::defaultfloat << "  " << r.x_min_digest << '\n';
      }
      break;
    }
  }
  return os.str();
}

std::vector<RunReport> parse_json(const std::string& text) {
  const nlohmann::json rows = nlohmann::json::parse(text);
  if (!rows.is_array()) throw std::invalid_argument("report JSON must be an array");
  const auto number = [](const nlohmann::json& v) {
    return v.is_null() ? std::nan("") : v.get<double>();
  };
  std::vector<RunReport> out;
  for (const nlohmann::json& row : rows) {
    RunReport r;
    r.problem = row.at("problem").get<std::string>();
    r.n = row.at("n").get<int>();
    r.f_min = number(row.at("f_min"));
    if (!row.at("known_min").is_null()) r.known_min = row.at("known_min").get<double>();
    const auto status = parse_status(row.at("status").get<std::string>());
    if (!status) throw std::invalid_argument("unknown status in report JSON");
    r.status = *status;
    r.stationary_count = row.at("stationary_count").get<int>();
    r.f_evals = row.at("f_evals").get<long>();
    r.jac_evals = row.at("jac_evals").get<long>();
    r.wall_seconds = number(row.at("wall_seconds"));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace report
}  // namespace cnmge
