#ifndef COLORCODE_CLI_CORE_HPP
#define COLORCODE_CLI_CORE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "colorcode/bipartition.hpp"
#include "colorcode/colex.hpp"

namespace colorcode {

// Lattice spec strings: "torus:LUxLV", "triangular:SIZE".
Colex parse_lattice(const std::string& spec);

// Region spec strings: "hexagon:ID", "annulus:R,r", "levinwen:R,r",
// "qubits:1,2,5,...".
enum class RegionKind { Hexagon, Annulus, LevinWen, Qubits };

struct RegionSpec {
  RegionKind kind = RegionKind::Hexagon;
  int outer = 0;  // hexagon id, or outer radius R
  int inner = 0;  // inner radius r
  std::vector<int> qubits;
};

RegionSpec parse_region(const std::string& spec);

// "a:b:step" -> {a, a+step, ..., <= b + step/2}; step > 0, nonempty.
std::vector<double> parse_grid(const std::string& spec);

// "R,B,G" per-color lambda values, returned indexed by Color (r, g, b).
std::array<double, 3> parse_lambda(const std::string& spec);

struct SweepConfig {
  std::string lattice;
  std::string region;
  std::array<double, 3> lambda_x = {1, 1, 1};  // indexed by Color
  std::vector<double> temps;
  std::vector<double> ksigma;      // nonempty selects the K-Sigma mode
  std::vector<Color> hard_colors;  // forced k_c = 0
  std::string format = "csv";      // csv | json
};

struct SweepRow {
  double temperature = 0;
  std::array<double, 3> k = {0, 0, 0};
  std::optional<double> s_a;
  std::optional<double> s_topo;
  std::optional<double> i_ab;
};

std::vector<SweepRow> run_sweep(const SweepConfig& config);
std::vector<SweepRow> run_mutual(const SweepConfig& config);

// Fixed schema:
// T,k_r,k_b,k_g,S_A_nats,S_A_ln2,S_topo_nats,S_topo_ln2,I_AB_nats
// 12 significant digits, "\n" endings, absent columns empty.
std::string format_rows_csv(const std::vector<SweepRow>& rows);
std::string format_rows_json(const std::vector<SweepRow>& rows);

}  // namespace colorcode

#endif
