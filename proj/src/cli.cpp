#include "cnmge/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "cnmge/errors.hpp"
#include "cnmge/problems.hpp"
#include "cnmge/qge.hpp"
#include "cnmge/report.hpp"

namespace cnmge::cli {

namespace {

constexpr double kSmallTol = 1e-4;
constexpr double kLargeTol = 1e-1;

struct Options {
  std::vector<std::string> problems;
  std::string suite;
  int dim = 0;
  std::optional<double> tol;
  std::string format = "table";
  int max_stationary = 0;
  std::string seed_dump;
};

nlohmann::json dump_points(const Problem& problem, const GlobalResult& result) {
  nlohmann::json points = nlohmann::json::array();
  const StationaryPointSet& s = result.stationary;
  for (std::size_t i = 0; i < s.size(); ++i) {
    points.push_back({{"f", s.f_values[i]},
                      {"residual", s.residuals[i]},
                      {"start", s.origin_start[i]},
                      {"x", std::vector<double>(s.points[i].begin(), s.points[i].end())}});
  }
  return {{"problem", problem.key}, {"n", problem.dimension}, {"points", points}};
}

std::string valid_names() {
  std::string out;
  for (const std::string& k : problems::keys()) {
    if (!out.empty()) out += ", ";
    out += k;
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Runs the global minimizer on catalog problems and reports the results",
               "cnmge_cli"};
  app.add_option("--problem", opt.problems, "Problem name(s), comma separated")->delimiter(',');
  app.add_option("--suite", opt.suite, "Run a problem suite")
      ->check(CLI::IsMember({"small", "large", "all"}));
  app.add_option("--dim", opt.dim, "Dimension for scalable problems")->check(CLI::PositiveNumber);
  app.add_option("--tol", opt.tol, "Absolute tolerance against the known minimum")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  app.add_option("--max-stationary", opt.max_stationary,
                 "Cap on stationary points collected per problem (0 = none)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed-dump", opt.seed_dump, "Write found stationary points as JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllSolved;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  if (opt.problems.empty() && opt.suite.empty()) {
    err << "one of --problem or --suite is required\n" << app.help();
    return kUsageError;
  }

  std::vector<Problem> selected;
  try {
    for (const std::string& name : opt.problems) {
      const auto key = problems::resolve_key(name);
      if (!key) {
        err << "unknown problem '" << name << "'; valid names: " << valid_names() << '\n';
        return kUsageError;
      }
      const Problem probe = problems::make(*key);
      selected.push_back(problems::make(*key, probe.scalable ? opt.dim : 0));
      if (opt.dim > 0 && !probe.scalable && opt.dim != probe.dimension) {
        err << probe.name << " has fixed dimension " << probe.dimension << '\n';
        return kUsageError;
      }
    }
    if (!opt.suite.empty()) {
      for (const std::string& key : problems::keys()) {
        const Problem probe = problems::make(key);
        const bool wanted = opt.suite == "all" ||
                            (opt.suite == "small" && probe.scale == ProblemScale::kSmall) ||
                            (opt.suite == "large" && probe.scale == ProblemScale::kLarge);
        if (!wanted) continue;
        selected.push_back(probe.scalable && opt.dim > 0 ? problems::make(key, opt.dim) : probe);
      }
    }
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  SolverConfig config;
  config.max_stationary = opt.max_stationary;

  std::vector<RunReport> reports;
  nlohmann::json dumps = nlohmann::json::array();
  for (const Problem& problem : selected) {
    const double tol =
        opt.tol.value_or(problem.scale == ProblemScale::kSmall ? kSmallTol : kLargeTol);
    try {
      const GlobalResult result = qge::cnmge(problem, config);
      reports.push_back(report::make_report(problem, result, tol));
      if (!opt.seed_dump.empty()) dumps.push_back(dump_points(problem, result));
    } catch (const Error& e) {
      err << problem.key << ": " << e.what() << '\n';
      reports.push_back(report::failed_report(problem));
    }
  }

  const ReportFormat format = opt.format == "csv"    ? ReportFormat::kCsv
                              : opt.format == "json" ? ReportFormat::kJson
                                                     : ReportFormat::kTable;
  out << report::write_report(reports, format);

  if (!opt.seed_dump.empty()) {
    std::ofstream file(opt.seed_dump);
    if (!file) {
      err << "cannot write " << opt.seed_dump << '\n';
      return kUsageError;
    }
    file << dumps.dump(1) << '\n';
  }

  const bool all_ok = std::all_of(reports.begin(), reports.end(), [](const RunReport& r) {
    return r.status != RunStatus::kFailed;
  });
  return all_ok ? kAllSolved : kSomeFailed;
}

}  // namespace cnmge::cli
