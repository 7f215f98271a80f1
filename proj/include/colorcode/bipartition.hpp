#ifndef COLORCODE_BIPARTITION_HPP
#define COLORCODE_BIPARTITION_HPP

#include <array>
#include <vector>

#include "colorcode/colex.hpp"

namespace colorcode {

struct Bipartition {
  std::vector<char> in_a;  // size num_qubits; 1 = qubit belongs to A

  static Bipartition from_qubits(const Colex& colex, const std::vector<int>& a_qubits);
  std::vector<int> a_qubits() const;
  Bipartition complement() const;
};

// Per-component counts Sigma_i^c = Sigma_{B_i}^c + Sigma_{AB_i}^c: plaquettes
// of color c touching the disconnected component B_i.  Components whose
// plaquette neighbourhood stays clear of every lattice border are "enclosed"
// and carry collective strings.  at_infinity marks synthetic components
// standing in for an unbounded exterior in thermodynamic-limit evaluations.
struct ComponentStats {
  std::array<double, 3> sigma = {0, 0, 0};  // indexed by Color
  bool enclosed = true;
  bool at_infinity = false;
};

struct RegionStats {
  BoundaryKind boundary_kind = BoundaryKind::Torus;
  double n_per_color = 0;  // N
  double total_plaquettes = 0;
  std::array<double, 3> sigma_a = {0, 0, 0};  // Sigma_A^c
  std::array<double, 3> sigma_b = {0, 0, 0};  // Sigma_B^c
  double sigma_ab = 0;                        // boundary plaquettes, all colors
  int m_a = 1;
  int m_b = 1;                 // 0 for the whole-system pseudo-bipartition
  int enclosed_a_components = 0;  // planar cardinality input
  std::vector<ComponentStats> components;  // string-bearing (enclosed) B comps

  double sigma_a_total() const { return sigma_a[0] + sigma_a[1] + sigma_a[2]; }
  double sigma_b_total() const { return sigma_b[0] + sigma_b[1] + sigma_b[2]; }
};

struct GroupCardinalities {
  double log2_g = 0;
  double log2_d_a = 0;
  double log2_d_b = 0;
};

struct CollectiveString {
  Color color = Color::Red;  // the string's color (the component's bar-bar c)
  int component = -1;
  std::vector<int> plaquette_factors;
  std::vector<int> support;  // mod-2 support of the product; must lie in A
};

RegionStats region_stats(const Colex& colex, const Bipartition& bp);

// Whole-system pseudo-bipartition (B empty): Sigma_A = all plaquettes,
// m_b = 0.  Used by mutual information for S_{A union B}.
RegionStats whole_system_stats(const Colex& colex);

GroupCardinalities group_cardinalities(const RegionStats& stats);

std::vector<CollectiveString> collective_strings(const Colex& colex,
                                                 const Bipartition& bp);

// The four Levin-Wen bipartitions built from an annulus of hexagon rings
// r < d <= R around a base cell, cut into four arcs:
//   1 = full annulus, 2 = arcs 1+2+3, 3 = arcs 3+4+1, 4 = arcs 1+3.
struct TopoBipartitions {
  std::array<Bipartition, 4> bipartitions;
  std::array<RegionStats, 4> stats;
};

TopoBipartitions canonical_topo_bipartitions(const Colex& colex, int R, int r);

// Qubits of all hexagon cells at ring distance r < d <= R from cell (0,0);
// r >= 0, R > r (r = 0 leaves only the base cell inside).
Bipartition annulus_bipartition(const Colex& colex, int R, int r);

// Check the count relations the topological combination relies on
// (per-color Sigma_A and total Sigma_AB sum rules, component layout).
// Throws std::invalid_argument on violation.
void check_topo_relations(const std::array<RegionStats, 4>& stats);

// Synthetic four-bipartition stats for large-N / thermodynamic-limit
// evaluations: per-color inner disk count sigma_inner, annulus count
// sigma_annulus, on a torus with N plaquettes per color.  If
// outer_at_infinity, the exterior component is marked at_infinity and
// n_per_color is ignored for it.
std::array<RegionStats, 4> make_levin_wen_stats(double n_per_color,
                                                double sigma_inner,
                                                double sigma_annulus,
                                                bool outer_at_infinity);

// Single annulus bipartition stats (m_a = 1, m_b = 2), same parameterization.
// inner_at_infinity additionally scales the inner disk to infinity (the
// "large bipartitions" reading of the thermodynamic limit).
RegionStats make_annulus_stats(double n_per_color, double sigma_inner,
                               double sigma_annulus, bool outer_at_infinity,
                               bool inner_at_infinity = false);

// Stats of the annulus complement (A = inner disk + exterior, B = annulus).
RegionStats make_annulus_complement_stats(double n_per_color, double sigma_inner,
                                          double sigma_annulus,
                                          bool annulus_at_infinity = false);

// Synthetic whole-system pseudo-bipartition for a torus with N per color.
RegionStats make_whole_system_stats(double n_per_color);

// Planar analogue of make_levin_wen_stats (triangular canonical geometry):
// border-touching exterior carries no strings.
std::array<RegionStats, 4> make_levin_wen_stats_planar(double n_per_color,
                                                       double sigma_inner,
                                                       double sigma_annulus);

}  // namespace colorcode

#endif
