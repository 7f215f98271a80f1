#ifndef COLORCODE_THERMO_HPP
#define COLORCODE_THERMO_HPP

#include <array>
#include <string>
#include <vector>

#include "colorcode/bipartition.hpp"
#include "colorcode/colex.hpp"
#include "colorcode/signed_log.hpp"

namespace colorcode {

// Temperature and per-color couplings in the hard-constrained limit
// (lambda_z fixed at +infinity).  k_c = -ln(tanh(lambda_x^c / T)):
// zero at T = 0 or lambda = +inf, +inf at T = +inf or lambda = 0.
struct Couplings {
  double temperature = 0;
  std::array<double, 3> lambda_x = {0, 0, 0};  // indexed by Color
  std::array<double, 3> k = {0, 0, 0};

  double x(int c) const { return std::cosh(k[size_t(c)] / 2); }
  double y(int c) const { return std::sinh(k[size_t(c)] / 2); }
  bool all_k_finite() const;
  bool any_k_infinite() const;
  bool all_k_zero_or_infinite() const;
};

Couplings make_couplings(const std::array<double, 3>& lambda_x,
                         double temperature);

// Ising chain partition function, Eq.-20 form:
// 2^n [sinh^n(k/2) +/- j_product cosh^n(k/2)].
double ising_partition(double k, double n, bool antiperiodic, int j_product);

// The four transfer-matrix eigenvalue functions of a component, stored as
// log-magnitudes (xi1..xi3 >= 0 and xi4 > 0 for nonnegative arguments).
struct XiQuad {
  std::array<double, 4> log_xi = {kNegInf, kNegInf, kNegInf, 0};
  double xi(int m) const { return std::exp(log_xi[size_t(m)]); }
};

XiQuad xi_values(double b, double g, double r);
XiQuad xi_values(const Couplings& cp, const ComponentStats& comp);

// String-sector partition function with boundary pattern ppp/aap/paa/apa:
// 4^n [ +/-J_b xi1^n +/- J_g xi2^n +/- J_r xi3^n + xi4^n ].
double string_partition(const XiQuad& xi, double n, const std::string& pattern,
                        int j_r, int j_b, int j_g);

// The explicit 4x4 transfer matrix whose spectrum is
// {4 J_b xi1, 4 J_g xi2, 4 J_r xi3, 4 xi4}.
std::array<std::array<double, 4>, 4> transfer_matrix(double b, double g,
                                                     double r, int j_b,
                                                     int j_g, int j_r);

// F^(n)_j terms and their replica derivatives, kept in log domain.
// On the torus log_norm = ln(4 Z_0) = ln(F_1+F_2+F_3+F_4); on planar
// lattices only the j=1 branch exists and log_norm = ln Z_1 = ln F_1.
struct FTerms {
  bool torus = true;
  double n_per_color = 0;
  std::array<double, 3> k = {0, 0, 0};
  std::array<double, 3> sigma_a = {0, 0, 0};
  std::array<double, 4> log_f = {0, 0, 0, 0};  // ln F^(1)_j
  double log_norm = 0;
  std::array<double, 4> plaq_g = {0, 0, 0, 0};  // plaquette part of dF_j/F_j

  struct Comp {
    std::array<double, 3> a = {0, 0, 0};  // a_c = k_c Sigma_i^c / 2
    XiQuad xi;
  };
  std::vector<Comp> comps;

  int n_branches() const { return torus ? 4 : 1; }
  double log_z0() const;
  double log_f_n(int j, double n) const;  // ln F^(n)_j
  double f(int j, double n = 1) const;    // linear domain (desk-scale only)
  double df(int j) const;                 // dF_j, linear domain
};

FTerms f_terms(const Couplings& cp, const RegionStats& stats);

struct EntropyBreakdown {
  double s_total = 0;
  double term_log_group = 0;  // -ln(d_A d_B / |G|)
  double term_log_z0 = 0;     // ln Z_0 (ln Z_1 on planar lattices)
  double term_df = 0;         // -(1/4Z_0) sum_j dF_j
};

// S_A(T) per the replica closed form.  Couplings with k in {0, +inf}
// (T = 0, T = +inf, hard or vanishing lambda) take exact limit branches;
// in the k = +inf branch the Z_0 and derivative pieces are reported
// combined in term_log_z0.
EntropyBreakdown entanglement_entropy(const RegionStats& stats,
                                      const Couplings& cp);

// Tr[rho_A^n]; n = 1 returns 1.  Real n >= 1 accepted.
double trace_rho_n(const RegionStats& stats, const Couplings& cp, double n);

// (S_A + S_B - S_{A u B}) / 2.
double mutual_information(const RegionStats& stats_a, const RegionStats& stats_b,
                          const RegionStats& stats_union, const Couplings& cp);

// Thermodynamic-limit (N -> infinity first) entropy: only the F_1 branch
// survives; components flagged at_infinity contribute their large-size
// asymptote ln(4 / |{j : eps_j^c = +1 for all c with k_c > 0}|).
double entropy_thermodynamic_limit(const RegionStats& stats,
                                   const Couplings& cp);

double mutual_information_thermodynamic_limit(const RegionStats& stats_a,
                                              const RegionStats& stats_b,
                                              const RegionStats& stats_union,
                                              const Couplings& cp);

// -S_1 + S_2 + S_3 - S_4 over the four canonical bipartitions.  Finite
// torus instances with finite couplings are additionally evaluated through
// the direct transcription of the closed-form S_topo expression; the two
// paths must agree to 1e-9.  Stats containing at_infinity components are
// composed through the thermodynamic-limit entropy.
double topological_entropy(const std::array<RegionStats, 4>& four_stats,
                           const Couplings& cp);

// The transcription path alone (torus, finite couplings, finite components).
double topological_entropy_transcription(
    const std::array<RegionStats, 4>& four_stats, const Couplings& cp);

// Same evaluation as topological_entropy; requires at least one
// hard-constrained color (k_c = 0 with T > 0).
double topo_color_limits(const std::array<RegionStats, 4>& four_stats,
                         const Couplings& cp);

// Characteristic dropping temperature lambda / ln sqrt(2 sigma').
double t_drop(double lambda_x, double sigma_prime);

// Defect separation length scale, exp(lambda / T).  Narrative helper.
double zeta(double lambda_x, double temperature);

}  // namespace colorcode

#endif
