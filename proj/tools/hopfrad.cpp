#include <CLI11.hpp>
#include <iostream>

#include "hopfrad/commands.hpp"
#include "hopfrad/errors.hpp"

using namespace hopfrad;

int main(int argc, char** argv) {
  CLI::App app{"hopfrad: radicals of finite-dimensional H-module algebras"};
  app.require_subcommand(1);

  CommandOptions opts;
  std::string level;
  app.add_option("--seed", opts.seed, "seed for randomized searches")->capture_default_str();
  app.add_option("--cap", opts.cap, "enumeration bound on p^dim")->capture_default_str();
  app.add_option("--format", opts.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--check-level", level, "action axioms to enforce (default: the file's expected_level)")
      ->check(CLI::IsMember({"weak", "module", "unital"}));

  std::string path, which, dir;
  auto* validate = app.add_subcommand("validate", "check algebra, Hopf and action axioms");
  validate->add_option("file", path, "definition file")->required();
  auto* radical = app.add_subcommand("radical", "compute H-radicals");
  radical->add_option("file", path, "definition file")->required();
  radical->add_option("which", which, "baer|jacobson|brownmccoy|gt|locnil|fisher:<base>|all")->required();
  auto* oracle = app.add_subcommand("oracle", "brute-force recomputation over all H-ideals");
  oracle->add_option("file", path, "definition file")->required();
  auto* regress = app.add_subcommand("regress", "run every check on a fixture directory");
  regress->add_option("dir", dir, "fixture directory")->required();
  auto* exporter = app.add_subcommand("export-fixtures", "write the builtin fixtures as definition files");
  exporter->add_option("dir", dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code::parse_failed;
  }
  if (!level.empty()) opts.check_level = parse_check_level(level);

  CommandOutput out;
  try {
    if (*validate) {
      out = cmd_validate(path, opts);
    } else if (*radical) {
      out = cmd_radical(path, which, opts);
    } else if (*oracle) {
      out = cmd_oracle(path, opts);
    } else if (*regress) {
      out = cmd_regress(dir, opts);
    } else {
      out = cmd_export_fixtures(dir, opts);
    }
  } catch (const CapExceeded& e) {
    out = {exit_code::cap_exceeded, "", std::string("cap exceeded: ") + e.what() + "\n"};
  } catch (const Contradiction& e) {
    out = {exit_code::contradiction, "", std::string("contradiction: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    out = {exit_code::parse_failed, "", std::string("parse error: ") + e.what() + "\n"};
  }
  std::cout << out.out;
  std::cerr << out.err;
  return out.exit_code;
}
