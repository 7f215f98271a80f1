#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "colorcode/cli_core.hpp"
#include "colorcode/colex.hpp"
#include "colorcode/verify.hpp"

namespace {

using namespace colorcode;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file " + out_path);
  os << text;
}

std::vector<Color> parse_hard_colors(const std::string& spec) {
  std::vector<Color> out;
  for (char ch : spec) {
    if (ch == ',') continue;
    if (ch == 'r') out.push_back(Color::Red);
    else if (ch == 'g') out.push_back(Color::Green);
    else if (ch == 'b') out.push_back(Color::Blue);
    else throw std::invalid_argument(std::string("unknown hard color '") + ch +
                                     "' (use r, g, b)");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-temperature entanglement for 2D color codes"};
  app.require_subcommand(1);

  std::string lattice = "torus:3x3", region = "hexagon:0";
  std::string lambda_spec = "1,1,1", temps_spec, ksigma_spec, hard_spec;
  std::string format = "csv", out_path;
  int grid_points = 12;
  unsigned seed = 1;

  auto add_common = [&](CLI::App* cmd, bool with_region) {
    cmd->add_option("--lattice", lattice, "lattice spec (torus:LUxLV, triangular:SIZE)");
    if (with_region)
      cmd->add_option("--region", region,
                      "region spec (hexagon:ID, annulus:R,r, levinwen:R,r, qubits:...)");
    cmd->add_option("--lambda-x", lambda_spec, "per-color couplings R,B,G");
    cmd->add_option("--temps", temps_spec, "temperature grid start:stop:step");
    cmd->add_option("--hard-x", hard_spec, "hard-constrained colors, e.g. r,b");
    cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out_path, "output path (default stdout)");
  };

  CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep over a temperature or K-Sigma grid");
  add_common(sweep, true);
  sweep->add_option("--ksigma", ksigma_spec, "K-Sigma grid start:stop:step (holds T fixed, scales the region)");

  CLI::App* mutual = app.add_subcommand("mutual", "mutual information sweep");
  add_common(mutual, true);

  CLI::App* validate_cmd = app.add_subcommand("validate", "build a lattice and run the validator");
  validate_cmd->add_option("--lattice", lattice, "lattice spec");

  CLI::App* verify_cmd = app.add_subcommand("verify", "brute-force oracle vs closed-form checks");
  verify_cmd->add_option("--lattice", lattice, "lattice spec");
  verify_cmd->add_option("--grid", grid_points, "temperature grid points per lambda configuration");
  verify_cmd->add_option("--seed", seed, "seed for the random test region");

  CLI::App* dump = app.add_subcommand("dump-lattice", "emit the lattice as JSON");
  dump->add_option("--lattice", lattice, "lattice spec");
  dump->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sweep->parsed() || mutual->parsed()) {
      SweepConfig cfg;
      cfg.lattice = lattice;
      cfg.region = region;
      cfg.lambda_x = parse_lambda(lambda_spec);
      if (!temps_spec.empty()) cfg.temps = parse_grid(temps_spec);
      if (!ksigma_spec.empty()) cfg.ksigma = parse_grid(ksigma_spec);
      cfg.hard_colors = parse_hard_colors(hard_spec);
      cfg.format = format;
      auto rows = sweep->parsed() ? run_sweep(cfg) : run_mutual(cfg);
      emit(format == "json" ? format_rows_json(rows) : format_rows_csv(rows),
           out_path);
      return 0;
    }
    if (validate_cmd->parsed()) {
      ValidationReport rep = validate(parse_lattice(lattice));
      std::cout << rep.summary();
      return rep.all_pass() ? 0 : 1;
    }
    if (verify_cmd->parsed()) {
      VerifyReport rep = verify_lattice(parse_lattice(lattice), grid_points, seed);
      std::cout << rep.summary();
      return rep.all_pass() ? 0 : 1;
    }
    if (dump->parsed()) {
      emit(dump_lattice_json(parse_lattice(lattice)), out_path);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
