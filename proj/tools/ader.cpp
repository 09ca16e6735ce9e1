// Command-line front end: single runs, convergence studies and preset listing.

#include <iostream>

#include "CLI11.hpp"
#include "ader/errors.hpp"
#include "ader/harness.hpp"
#include "ader/kernels/kernels.hpp"

namespace {

struct Options {
  std::string system;
  std::string out = "out";
  std::string orders;
  std::string meshes;
  std::string bc;
  std::string variant = "recursive";
  int order = 3;
  int cells = 0;
  int threads = 0;
  int sweeps = 0;
  double cfl = 0.0;
  double tout = -1.0;
  double beta = 0.0;
  double amplitude = 1.0;
};

ader::Overrides to_overrides(const Options& o, const CLI::App& cmd) {
  auto given = [&](const std::string& name) {
    const CLI::Option* opt = cmd.get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  ader::Overrides ov;
  ov.order = o.order;
  if (given("--orders")) ov.orders = ader::parse_int_list(o.orders);
  if (given("--meshes")) ov.meshes = ader::parse_int_list(o.meshes);
  if (given("--cells")) ov.cells = o.cells;
  if (given("--cfl")) ov.cfl = o.cfl;
  if (given("--tout")) ov.t_out = o.tout;
  if (given("--beta")) ov.beta = o.beta;
  if (given("--amplitude")) ov.amplitude = o.amplitude;
  if (given("--bc")) ov.boundary = ader::parse_boundary(o.bc);
  if (given("--threads")) ov.threads = o.threads;
  if (given("--sweeps")) ov.predictor.sweeps = o.sweeps;
  if (o.variant == "literal") ov.predictor.variant = ader::CkVariant::kLiteral;
  return ov;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--system", o.system, "Preset name")
      ->required()
      ->check(CLI::IsMember(ader::preset_names()));
  cmd->add_option("--cfl", o.cfl, "CFL number in (0, 1)");
  cmd->add_option("--tout", o.tout, "Output time");
  cmd->add_option("--beta", o.beta, "Source parameter");
  cmd->add_option("--amplitude", o.amplitude, "Density-wave amplitude (shu-osher)");
  cmd->add_option("--bc", o.bc, "periodic|transmissive");
  cmd->add_option("--threads", o.threads, "Worker threads (default: ADER_NUM_THREADS or 1)");
  cmd->add_option("--ck", o.variant, "CK closed form")->check(CLI::IsMember({"recursive", "literal"}));
  cmd->add_option("--sweeps", o.sweeps, "Predictor sweeps (default: M)")->check(CLI::Range(1, ader::kMaxSweeps));
  cmd->add_option("--out", o.out, "Output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-dimensional ADER finite-volume solver"};
  app.set_config("--config", "", "TOML/INI file with the same keys as the command line");
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Print kernel selection");

  Options solve_opts;
  auto* solve = app.add_subcommand("solve", "Run one preset at one order and mesh");
  add_common(solve, solve_opts);
  solve->add_option("--order", solve_opts.order, "Scheme order 2..5")->check(CLI::Range(2, 5));
  solve->add_option("--cells", solve_opts.cells, "Number of cells");

  Options conv_opts;
  auto* converge = app.add_subcommand("converge", "Convergence study over orders and meshes");
  add_common(converge, conv_opts);
  converge->add_option("--orders", conv_opts.orders, "Orders, e.g. 2..5 or 3,5");
  converge->add_option("--meshes", conv_opts.meshes, "Cell counts, e.g. 8,16,32");
  converge->add_option("--cells", conv_opts.cells, "Cells for shu-osher runs");

  auto* list = app.add_subcommand("list", "List presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verbose) std::cerr << "kernels: " << ader::kernels::isa_name(ader::kernels::active_isa()) << '\n';
    if (list->parsed()) {
      for (const auto& name : ader::preset_names()) std::cout << name << '\n';
      return 0;
    }
    const bool is_conv = converge->parsed();
    const Options& o = is_conv ? conv_opts : solve_opts;
    const auto files = ader::run_preset(o.system, to_overrides(o, is_conv ? *converge : *solve), o.out, is_conv);
    for (const auto& f : files) std::cout << f.string() << '\n';
  } catch (const ader::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
