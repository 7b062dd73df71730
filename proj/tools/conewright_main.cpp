#include <conewright/errors.hpp>
#include <conewright/report.hpp>

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

// Prints the finished output and, when requested, writes the same bytes to a
// file. Returns the process exit code.
int emit(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return 2;
    }
    out << text;
    if (!out) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return 2;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact intersection-theory calculator for three families of determinantal "
      "Calabi-Yau threefolds: invariant tables, birational pushforward matrices, "
      "and movable-cone chamber decompositions."};
  app.name("conewright");
  app.require_subcommand(1);

  bool json = false;
  std::string out_path;
  std::string cone_case;
  std::string check_case;
  bool check_all = false;
  const std::vector<std::string> case_names{"v4", "v5", "gr24"};

  const std::array<const char*, 3> table_help = {
      "print the intersection numbers of the favored resolutions",
      "print the topological numbers of the smoothed threefolds",
      "print the invariants of the quintic family's far-side model"};
  std::array<CLI::App*, 3> table_cmds{};
  for (int i = 0; i < 3; ++i) {
    CLI::App* cmd = app.add_subcommand("table" + std::to_string(i + 1),
                                       table_help[static_cast<std::size_t>(i)]);
    cmd->add_flag("--json", json, "emit the machine-readable form");
    cmd->add_option("--out", out_path, "also write the output to this path");
    table_cmds[static_cast<std::size_t>(i)] = cmd;
  }

  CLI::App* cone_cmd =
      app.add_subcommand("cone", "print a movable-cone chamber decomposition");
  cone_cmd->add_option("--case", cone_case, "family to decompose")
      ->required()
      ->check(CLI::IsMember(case_names));
  cone_cmd->add_flag("--json", json, "emit the machine-readable form");
  cone_cmd->add_option("--out", out_path, "also write the output to this path");

  CLI::App* check_cmd = app.add_subcommand(
      "check", "recompute every embedded expected constant and report mismatches");
  CLI::Option* all_opt =
      check_cmd->add_flag("--all", check_all, "check all families (the default)");
  CLI::Option* case_opt = check_cmd->add_option("--case", check_case, "restrict to one family")
                              ->check(CLI::IsMember(case_names));
  all_opt->excludes(case_opt);
  case_opt->excludes(all_opt);
  check_cmd->add_option("--out", out_path, "also write the report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    for (CLI::App* cmd : table_cmds) {
      if (cmd->parsed()) {
        const conewright::report::TableData t =
            conewright::report::table_by_name(cmd->get_name());
        return emit(json ? to_json_string(t) : render(t), out_path);
      }
    }
    if (cone_cmd->parsed()) {
      const conewright::report::ConeData c =
          conewright::report::cone(conewright::detcy::case_from_name(cone_case));
      return emit(json ? to_json_string(c) : render(c), out_path);
    }
    if (check_cmd->parsed()) {
      std::optional<conewright::detcy::CaseId> only;
      if (!check_case.empty()) only = conewright::detcy::case_from_name(check_case);
      const conewright::report::CheckReport report = conewright::report::run_checks(only);
      const int rc = emit(report.render(), out_path);
      if (rc != 0) return rc;
      return report.all_pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
