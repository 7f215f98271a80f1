#include "colorcode/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include <Eigen/Dense>

namespace colorcode {

namespace {

std::uint64_t generator_mask(const Colex& colex, int plaquette_id) {
  std::uint64_t m = 0;
  for (int q : colex.plaquette_support(plaquette_id)) m |= 1ull << q;
  return m;
}

double safe_kn(double k, double n) { return n == 0 ? 0.0 : k * n; }

}  // namespace

std::vector<int> canonical_generators(const Colex& colex) {
  std::vector<int> gens;
  int drop_blue = -1, drop_red = -1;
  if (colex.boundary_kind == BoundaryKind::Torus) {
    for (const auto& p : colex.plaquettes) {
      if (p.color == Color::Blue) drop_blue = std::max(drop_blue, p.id);
      if (p.color == Color::Red) drop_red = std::max(drop_red, p.id);
    }
  }
  for (const auto& p : colex.plaquettes)
    if (p.id != drop_blue && p.id != drop_red) gens.push_back(p.id);
  return gens;
}

std::vector<GroupElement> enumerate_group(const Colex& colex) {
  std::vector<int> gens = canonical_generators(colex);
  if (gens.size() > 24)
    throw std::invalid_argument("group enumeration guard: > 24 generators");
  if (colex.num_qubits > 64)
    throw std::invalid_argument("group enumeration guard: > 64 qubits");

  std::vector<std::uint64_t> masks(gens.size());
  std::vector<int> colors(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    masks[i] = generator_mask(colex, gens[i]);
    colors[i] = int(colex.plaquettes[size_t(gens[i])].color);
  }

  std::vector<GroupElement> out(size_t(1) << gens.size());
  GroupElement cur;  // Gray-code walk: one generator toggled per step
  out[0] = cur;
  std::uint32_t prev_gray = 0;
  for (std::uint64_t i = 1; i < out.size(); ++i) {
    std::uint32_t gray = std::uint32_t(i ^ (i >> 1));
    int bit = std::countr_zero(prev_gray ^ gray);
    prev_gray = gray;
    cur.plaquette_set ^= 1u << bit;
    cur.qubit_flip_set ^= masks[size_t(bit)];
    cur.n_c[size_t(colors[size_t(bit)])] +=
        (cur.plaquette_set >> bit & 1) ? +1 : -1;
    out[i] = cur;
  }
  return out;
}

double eta_weight(const std::array<int, 3>& n_c, const Couplings& cp, int n,
                  bool torus) {
  for (int c = 0; c < 3; ++c)
    if (n_c[size_t(c)] < 0 || n_c[size_t(c)] > n)
      throw std::invalid_argument("eta_weight: n_c outside [0, N]");
  auto k = [&](Color c) { return cp.k[size_t(int(c))]; };
  auto nn = [&](Color c) { return double(n_c[size_t(int(c))]); };
  double direct = std::exp(-safe_kn(k(Color::Red), nn(Color::Red)) -
                           safe_kn(k(Color::Green), nn(Color::Green)) -
                           safe_kn(k(Color::Blue), nn(Color::Blue)));
  if (!torus) return direct;
  double num = direct, den = 1;
  for (int ci = 0; ci < 3; ++ci) {
    Color c = Color(ci), cb = bar(c), cbb = bar2(c);
    num += std::exp(-(k(cb) + k(cbb)) * n - safe_kn(k(c), nn(c)) +
                    safe_kn(k(cb), nn(cb)) + safe_kn(k(cbb), nn(cbb)));
    den += std::exp(-(k(cb) + k(cbb)) * n);
  }
  return num / den;
}

ReducedDensityMatrix reduced_density_matrix(const Colex& colex,
                                            const Bipartition& bp,
                                            const Couplings& cp) {
  std::vector<GroupElement> group = enumerate_group(colex);
  std::uint64_t a_mask = 0;
  int a_count = 0;
  for (int q = 0; q < colex.num_qubits; ++q)
    if (bp.in_a[size_t(q)]) { a_mask |= 1ull << q; ++a_count; }
  if (a_count > 14)
    throw std::invalid_argument("reduced_density_matrix guard: |A| > 14");
  std::uint64_t b_mask = ~a_mask & ((colex.num_qubits == 64)
                                        ? ~0ull
                                        : (1ull << colex.num_qubits) - 1);
  bool torus = colex.boundary_kind == BoundaryKind::Torus;
  int n = colex.n_per_color;

  ReducedDensityMatrix rdm;
  rdm.a_qubits = a_count;
  rdm.group_order = group.size();

  std::vector<const GroupElement*> ga, gb;
  for (const auto& h : group) {
    if ((h.qubit_flip_set & b_mask) == 0) ga.push_back(&h);
    if ((h.qubit_flip_set & a_mask) == 0) gb.push_back(&h);
  }
  rdm.ga_order = ga.size();
  rdm.gb_order = gb.size();

  std::map<std::uint64_t, int> index;
  for (const auto& h : group) index.emplace(h.qubit_flip_set & a_mask, -1);
  rdm.basis.reserve(index.size());
  for (auto& [mask, idx] : index) {
    idx = int(rdm.basis.size());
    rdm.basis.push_back(mask);
  }
  size_t dim = rdm.basis.size();
  rdm.rho.assign(dim, std::vector<double>(dim, 0.0));
  double inv_g = 1.0 / double(group.size());
  for (const auto& h : group) {
    int row = index.at(h.qubit_flip_set & a_mask);
    for (const GroupElement* ht : ga) {
      int col = index.at((h.qubit_flip_set ^ ht->qubit_flip_set) & a_mask);
      rdm.rho[size_t(row)][size_t(col)] +=
          inv_g * eta_weight(ht->n_c, cp, n, torus);
    }
  }
  return rdm;
}

BruteResult brute_entropy_and_traces(const ReducedDensityMatrix& rdm) {
  size_t dim = rdm.basis.size();
  Eigen::MatrixXd m(dim, dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) m(long(i), long(j)) = rdm.rho[i][j];
  if (!m.isApprox(m.transpose(), 1e-12))
    throw std::invalid_argument("brute_entropy_and_traces: matrix not symmetric");

  BruteResult out;
  out.trace = m.trace();
  Eigen::MatrixXd m2 = m * m;
  out.trace_rho_2 = m2.trace();
  out.trace_rho_3 = (m2 * m).trace();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigen-decomposition failed");
  out.min_eigenvalue = solver.eigenvalues().minCoeff();
  double s = 0;
  for (long i = 0; i < solver.eigenvalues().size(); ++i) {
    double lam = solver.eigenvalues()(i);
    if (lam > 0) s -= lam * std::log(lam);
  }
  out.entropy = s;
  return out;
}

namespace {

int gf2_rank_rows(std::vector<std::vector<std::uint64_t>> rows, int ncols) {
  int words = (ncols + 63) / 64, rank = 0;
  for (int col = 0; col < ncols; ++col) {
    int w = col / 64, b = col % 64;
    size_t pivot = size_t(-1);
    for (size_t r = size_t(rank); r < rows.size(); ++r)
      if (rows[r][size_t(w)] >> b & 1) { pivot = r; break; }
    if (pivot == size_t(-1)) continue;
    std::swap(rows[size_t(rank)], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != size_t(rank) && (rows[r][size_t(w)] >> b & 1))
        for (int ww = 0; ww < words; ++ww)
          rows[r][size_t(ww)] ^= rows[size_t(rank)][size_t(ww)];
    ++rank;
  }
  return rank;
}

// Rank of the canonical generator supports restricted to the qubits where
// keep[q] is true; kernel dimension = #generators - rank.
int restricted_rank(const Colex& colex, const std::vector<int>& gens,
                    const std::vector<char>& keep) {
  int words = (colex.num_qubits + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  for (int g : gens) {
    std::vector<std::uint64_t> row(size_t(words), 0);
    for (int q : colex.plaquette_support(g))
      if (keep[size_t(q)]) row[size_t(q / 64)] |= 1ull << (q % 64);
    rows.push_back(std::move(row));
  }
  return gf2_rank_rows(std::move(rows), colex.num_qubits);
}

}  // namespace

LocalSubgroupDims enumerate_local_subgroup(const Colex& colex,
                                           const Bipartition& bp) {
  std::vector<int> gens = canonical_generators(colex);
  LocalSubgroupDims out;
  if (gens.size() <= 24 && colex.num_qubits <= 64) {
    std::uint64_t a_mask = 0;
    for (int q = 0; q < colex.num_qubits; ++q)
      if (bp.in_a[size_t(q)]) a_mask |= 1ull << q;
    std::uint64_t full = (colex.num_qubits == 64)
                             ? ~0ull
                             : (1ull << colex.num_qubits) - 1;
    std::uint64_t b_mask = ~a_mask & full;
    std::uint64_t ga = 0, gb = 0;
    for (const auto& h : enumerate_group(colex)) {
      if ((h.qubit_flip_set & b_mask) == 0) ++ga;
      if ((h.qubit_flip_set & a_mask) == 0) ++gb;
    }
    out.log2_ga = std::countr_zero(ga);
    out.log2_gb = std::countr_zero(gb);
    if ((1ull << out.log2_ga) != ga || (1ull << out.log2_gb) != gb)
      throw std::logic_error("subgroup order is not a power of two");
    return out;
  }
  std::vector<char> in_b(size_t(colex.num_qubits));
  for (int q = 0; q < colex.num_qubits; ++q) in_b[size_t(q)] = !bp.in_a[size_t(q)];
  out.log2_ga = int(gens.size()) - restricted_rank(colex, gens, in_b);
  out.log2_gb = int(gens.size()) - restricted_rank(colex, gens, bp.in_a);
  return out;
}

}  // namespace colorcode
