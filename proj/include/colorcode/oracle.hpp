#ifndef COLORCODE_ORACLE_HPP
#define COLORCODE_ORACLE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "colorcode/bipartition.hpp"
#include "colorcode/colex.hpp"
#include "colorcode/thermo.hpp"

namespace colorcode {

// One element of the X-type stabilizer group, as a subset of the canonical
// generator list (on the torus all plaquettes except the designated
// dependent blue and red ones) together with its qubit-flip pattern.
struct GroupElement {
  std::uint32_t plaquette_set = 0;   // bits over the canonical generator list
  std::uint64_t qubit_flip_set = 0;  // bits over qubits
  std::array<int, 3> n_c = {0, 0, 0};  // plaquette counts by Color
};

// Canonical generators: the torus drops the highest-id blue and highest-id
// red plaquette; planar lattices keep every plaquette.
std::vector<int> canonical_generators(const Colex& colex);

// Full group enumeration.  Guard: at most 24 generators and 64 qubits.
std::vector<GroupElement> enumerate_group(const Colex& colex);

// eta_T(h~) for an element with plaquette counts n_c, per the quotient of
// exponential sums on the torus and the single exponential on planar
// lattices.  n is the per-color plaquette count N (torus).
double eta_weight(const std::array<int, 3>& n_c, const Couplings& cp, int n,
                  bool torus);

// Reduced density matrix on region A, restricted to its reachable block:
// the computational-basis states {h|0> restricted to A}.  Every basis state
// of A outside this block carries eigenvalue zero, so spectral quantities
// are unchanged by the restriction.
struct ReducedDensityMatrix {
  int a_qubits = 0;                        // |A|
  std::vector<std::uint64_t> basis;        // reachable A-masks, sorted
  std::vector<std::vector<double>> rho;    // dense symmetric block
  std::uint64_t group_order = 0;
  std::uint64_t ga_order = 0;              // |G_A| (trivial on B)
  std::uint64_t gb_order = 0;              // |G_B| (trivial on A)
};

ReducedDensityMatrix reduced_density_matrix(const Colex& colex,
                                            const Bipartition& bp,
                                            const Couplings& cp);

struct BruteResult {
  double entropy = 0;     // von Neumann, nats
  double trace_rho_2 = 0;
  double trace_rho_3 = 0;
  double min_eigenvalue = 0;
  double trace = 0;       // should be 1
};

BruteResult brute_entropy_and_traces(const ReducedDensityMatrix& rdm);

// log2 |G_A| and log2 |G_B|.  Within the enumeration guard the counts come
// from a direct restriction test over all of G; larger instances use the
// GF(2) kernel dimension of the generator-support map restricted to the
// complementary region (the same membership criterion, solved linearly).
struct LocalSubgroupDims {
  int log2_ga = 0;
  int log2_gb = 0;
};

LocalSubgroupDims enumerate_local_subgroup(const Colex& colex,
                                           const Bipartition& bp);

}  // namespace colorcode

#endif
