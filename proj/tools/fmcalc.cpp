// fmcalc: scenario-driven front end.
//
//   fmcalc run scenario.yaml [--format json|csv|text] [--out FILE]
//   fmcalc transform --base P2 --params '{E: point}'
//   fmcalc scan --scenario models.yaml --parallel --format csv
//
// Exit codes: 0 all checks pass, 1 usage or parse error, 2 computation
// error, 3 an identity check failed.

#include "fmcalc/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace fmcalc;

enum Exit { kOk = 0, kUsage = 1, kComputation = 2, kCheckFailed = 3 };

struct Common {
  std::string format;
  std::string out;
  std::string check_level;
  bool parallel = false;
  bool no_header = false;
};

struct TaskArgs {
  std::string base;
  std::string params;
  std::string scenario;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", c.out, "Write the report to this file instead of stdout");
  sub->add_option("--check-level", c.check_level, "fast or full (full runs every oracle cross-check)")
      ->check(CLI::IsMember({"fast", "full"}));
  sub->add_flag("--parallel", c.parallel, "Split scan grids across threads (output order unchanged)");
  sub->add_flag("--no-header", c.no_header, "Omit the run metadata header");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string scenario_type(const std::string& subcommand) {
  return subcommand == "factor-check" ? "factorization-check" : subcommand;
}

int execute(const std::string& subcommand, const std::string& text, const std::string& source, const Common& c) {
  Scenario sc;
  try {
    sc = parse_scenario(text);
  } catch (const Error& e) {
    std::cerr << "fmcalc: " << source << ": " << e.what() << "\n";
    return kUsage;
  }
  if (subcommand != "run") {
    const std::string type = scenario_type(subcommand);
    std::erase_if(sc.tasks, [&](const Task& t) { return t.type != type; });
    if (sc.tasks.empty()) {
      std::cerr << "fmcalc: " << source << ": no '" << type << "' tasks\n";
      return kUsage;
    }
  }

  RunOptions opt;
  opt.parallel = c.parallel;
  opt.header = !c.no_header;
  opt.source = source;
  OutputFormat format = sc.format;
  try {
    if (!c.check_level.empty()) opt.check_level = parse_check_level(c.check_level);
    else if (const char* env = std::getenv("FMCALC_CHECK_LEVEL"); env && *env) opt.check_level = parse_check_level(env);
    else if (sc.check_level) opt.check_level = *sc.check_level;
    if (!c.format.empty()) format = parse_output_format(c.format);
  } catch (const Error& e) {
    std::cerr << "fmcalc: " << e.what() << "\n";
    return kUsage;
  }

  Json report;
  try {
    report = run_scenario(sc, opt);
  } catch (const Error& e) {
    std::cerr << "fmcalc: " << source << ": " << e.what() << "\n";
    return kComputation;
  }
  const std::string body =
      subcommand == "scan" && format == OutputFormat::Csv ? render_scan_csv(report) : render(report, format);
  if (c.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(c.out, std::ios::binary);
    if (!out || !(out << body)) {
      std::cerr << "fmcalc: cannot write '" << c.out << "'\n";
      return kComputation;
    }
  }
  if (!report["all_checks_pass"].get<bool>()) {
    std::cerr << "fmcalc: identity check failed\n";
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Fourier-Mukai, spectral cover, charge and stability calculator"};
  app.require_subcommand(1);

  Common common;
  std::string run_file;
  CLI::App* run = app.add_subcommand("run", "Run every task of a scenario file");
  run->add_option("scenario", run_file, "Scenario YAML file")->required();
  add_common(run, common);

  const std::vector<std::pair<std::string, std::string>> subs{
      {"transform", "Cohomological Fourier-Mukai transform of Chern data"},
      {"spectral", "Spectral-cover bundle invariants and anomaly check"},
      {"scan", "Scan (n, eta, lambda) grids of spectral-cover models"},
      {"charges", "Charge vectors, periods and central charges"},
      {"monodromy", "Orbit of a charge under conifold and large-volume monodromies"},
      {"stability", "Hilbert polynomials, slopes and transformed invariants"},
      {"factor-check", "Compare the four-factor composition with the transform"},
  };
  std::map<std::string, TaskArgs> args;
  for (const auto& [name, help] : subs) {
    CLI::App* sub = app.add_subcommand(name, help);
    TaskArgs& a = args[name];
    auto* base = sub->add_option("--base", a.base, "Catalog name or YAML flow mapping of a base");
    auto* params = sub->add_option("--params", a.params, "Task parameters as YAML flow mapping");
    auto* file = sub->add_option("--scenario", a.scenario, "Scenario file; only tasks of this type are run");
    base->excludes(file);
    params->excludes(file);
    params->needs(base);
    add_common(sub, common);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*run) {
    std::string text;
    try {
      text = read_file(run_file);
    } catch (const Error& e) {
      std::cerr << "fmcalc: " << e.what() << "\n";
      return kUsage;
    }
    return execute("run", text, run_file, common);
  }
  for (const auto& [name, help] : subs) {
    if (!app.got_subcommand(name)) continue;
    const TaskArgs& a = args[name];
    if (!a.scenario.empty()) {
      try {
        return execute(name, read_file(a.scenario), a.scenario, common);
      } catch (const Error& e) {
        std::cerr << "fmcalc: " << e.what() << "\n";
        return kUsage;
      }
    }
    if (a.base.empty()) {
      std::cerr << "fmcalc " << name << ": give --base (with --params) or --scenario\n";
      return kUsage;
    }
    const std::string text = "base: " + a.base + "\ntasks:\n  - " + scenario_type(name) + ": " +
                             (a.params.empty() ? std::string("{}") : a.params) + "\n";
    return execute(name, text, name, common);
  }
  return kUsage;
}
