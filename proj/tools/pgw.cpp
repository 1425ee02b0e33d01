// pgw: check the hypotheses of the non-inner automorphism theorem on a
// p-group given by a power-commutator presentation, and construct and verify
// the automorphism it promises.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pgw/errors.hpp"
#include "pgw/report.hpp"

namespace {

pgw::GroupFile load(const std::string& path) {
  if (path.rfind("builtin:", 0) == 0) return pgw::builtin(path.substr(8));
  return pgw::parse_file(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pgw - non-inner automorphisms of order p in finite p-groups"};
  std::string command;
  std::string file;
  pgw::RunOptions options;
  double budget = 0;
  std::string report_path;
  std::string format = "text";

  app.add_option("command", command, "info | check | construct | count | demo")
      ->required()
      ->check(CLI::IsMember({"info", "check", "construct", "count", "demo"}));
  app.add_option("file", file, "group file, or builtin:<key> (demo uses the built-in example)");
  app.add_flag("--with-oracle", options.with_oracle, "also enumerate Aut(G) by brute force");
  auto* budget_opt = app.add_option("--budget", budget, "abort the enumeration after this many seconds")
                         ->check(CLI::PositiveNumber);
  app.add_option("--jobs", options.jobs, "worker threads for the enumeration")->check(CLI::Range(1, 256));
  app.add_option("--report", report_path, "write the JSON report to this path");
  app.add_option("--format", format, "stdout format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : pgw::kExitInputError;
  }
  if (*budget_opt) options.budget_seconds = budget;

  try {
    pgw::RunReport report;
    if (command == "demo") {
      report = pgw::run_demo(options);
    } else {
      if (file.empty()) {
        std::cerr << "pgw: " << command << " needs a group file\n";
        return pgw::kExitInputError;
      }
      const pgw::GroupFile group = load(file);
      if (command == "info") report = pgw::run_info(group, options);
      if (command == "check") report = pgw::run_check(group, options);
      if (command == "construct") report = pgw::run_construct(group, options);
      if (command == "count") report = pgw::run_count(group, options);
    }
    if (format == "json")
      std::cout << pgw::render_json(report);
    else
      std::cout << pgw::render_text(report);
    if (!report_path.empty()) {
      std::ofstream out(report_path, std::ios::binary | std::ios::trunc);
      if (!out) {
        std::cerr << "pgw: cannot write " << report_path << "\n";
        return pgw::kExitInputError;
      }
      out << pgw::render_json(report);
    }
    return report.exit_code;
  } catch (const pgw::InputError& e) {
    std::cerr << "pgw: input error: " << e.what() << "\n";
    return pgw::kExitInputError;
  } catch (const pgw::Timeout& e) {
    std::cerr << "pgw: " << e.what() << "\n";
    return pgw::kExitInputError;
  } catch (const pgw::InternalContradiction& e) {
    std::cerr << "pgw: INTERNAL CONTRADICTION: " << e.what() << "\n";
    return pgw::kExitContradiction;
  } catch (const pgw::Error& e) {
    std::cerr << "pgw: " << e.what() << "\n";
    return pgw::kExitContradiction;
  }
}
