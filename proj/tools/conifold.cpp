#include <CLI11.hpp>

#include <iostream>

#include "conifold/cli.hpp"

namespace {

int emit(const conifold::CommandResult& r) {
  std::cout << r.output.dump(2) << '\n';
  if (!r.diagnostics.empty()) std::cerr << "conifold: " << r.diagnostics << '\n';
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for conifold transitions"};
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "check a presentation file");
  validate->add_option("path", path, "presentation file")->required();

  conifold::ReportOptions options;
  int series_order = -1;
  auto* report = app.add_subcommand("report", "residues, monodromy, Yukawa couplings and glue verdicts");
  report->add_option("path", path, "presentation file")->required();
  report->add_flag("--monodromy", options.monodromy, "Dubrovin residues, monodromy blocks, Picard-Lefschetz pairings");
  report->add_flag("--yukawa", options.yukawa, "Yukawa principal parts and Gauss-Manin residues");
  report->add_flag("--glue", options.glue, "glue verdicts");
  auto* order_opt = report->add_option("--series-order", series_order, "truncation order for structural coefficients");

  std::string direction;
  auto* transform = app.add_subcommand("transform", "move a GW coefficient list across the transition");
  transform->add_option("path", path, "presentation file")->required();
  transform->add_option("--direction", direction, "x-to-y or y-to-x")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : conifold::exit_code::kParseOrUsage;
  }

  if (*validate) return emit(conifold::cmd_validate(path));
  if (*report) {
    if (*order_opt) options.series_order = series_order;
    return emit(conifold::cmd_report(path, options));
  }
  return emit(conifold::cmd_transform(path, direction));
}
