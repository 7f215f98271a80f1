#include "colorcode/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "colorcode/bipartition.hpp"
#include "colorcode/oracle.hpp"
#include "colorcode/thermo.hpp"

namespace colorcode {

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  worst="
       << c.worst << "  tol=" << c.tolerance;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << (all_pass() ? "all checks passed" : "VERIFICATION FAILED") << "\n";
  return os.str();
}

namespace {

struct Worst {
  double value = 0;
  std::string where;
  void track(double v, const std::string& w) {
    if (v > value) { value = v; where = w; }
  }
};

std::vector<int> random_connected_patch(const Colex& cx, int size,
                                        std::mt19937& rng) {
  std::vector<std::vector<int>> adj(size_t(cx.num_qubits));
  for (const auto& l : cx.links) {
    adj[size_t(l.a)].push_back(l.b);
    adj[size_t(l.b)].push_back(l.a);
  }
  std::set<int> chosen;
  std::vector<int> frontier = {int(rng() % unsigned(cx.num_qubits))};
  while (!frontier.empty() && int(chosen.size()) < size) {
    std::swap(frontier[rng() % frontier.size()], frontier.back());
    int q = frontier.back();
    frontier.pop_back();
    if (!chosen.insert(q).second) continue;
    for (int t : adj[size_t(q)])
      if (!chosen.count(t)) frontier.push_back(t);
  }
  return {chosen.begin(), chosen.end()};
}

std::vector<std::pair<std::string, std::vector<int>>> test_regions(
    const Colex& cx, std::mt19937& rng) {
  std::vector<std::pair<std::string, std::vector<int>>> regions;
  regions.emplace_back("plaquette0", cx.plaquette_support(0));
  if (cx.boundary_kind == BoundaryKind::Torus) {
    // two adjacent hexagons: plaquette 0 plus a neighbor sharing two qubits
    std::set<int> a(cx.plaquettes[0].support.begin(),
                    cx.plaquettes[0].support.end());
    for (const auto& p : cx.plaquettes) {
      if (p.id == 0) continue;
      int shared = 0;
      for (int q : p.support) shared += a.count(q);
      if (shared == 2) {
        for (int q : p.support) a.insert(q);
        break;
      }
    }
    regions.emplace_back("two-hexagons", std::vector<int>(a.begin(), a.end()));
    regions.emplace_back("patch8", random_connected_patch(cx, 8, rng));
  } else {
    regions.emplace_back("patch3", random_connected_patch(cx, 3, rng));
  }
  return regions;
}

}  // namespace

VerifyReport verify_lattice(const Colex& cx, int grid_points, unsigned seed) {
  std::mt19937 rng(seed);
  auto regions = test_regions(cx, rng);
  const std::vector<std::array<double, 3>> lambdas = {
      {0.5, 0.5, 0.5}, {1, 1, 1}, {2, 2, 2}, {0.5, 1, 2}, {2, 0.5, 1}};
  bool torus = cx.boundary_kind == BoundaryKind::Torus;

  Worst w_entropy, w_tr2, w_tr3, w_trace, w_eig, w_card, w_eta;
  std::vector<GroupElement> group = enumerate_group(cx);

  for (const auto& [rname, qubits] : regions) {
    Bipartition bp = Bipartition::from_qubits(cx, qubits);
    RegionStats st = region_stats(cx, bp);
    GroupCardinalities gc = group_cardinalities(st);
    LocalSubgroupDims dims = enumerate_local_subgroup(cx, bp);
    w_card.track(std::abs(dims.log2_ga - gc.log2_d_a), rname + " |G_A|");
    w_card.track(std::abs(dims.log2_gb - gc.log2_d_b), rname + " |G_B|");

    for (const auto& lam : lambdas) {
      double lo = 0.02 * *std::min_element(lam.begin(), lam.end());
      double hi = 50.0 * *std::max_element(lam.begin(), lam.end());
      for (int g = 0; g < grid_points; ++g) {
        double t = lo * std::pow(hi / lo, grid_points == 1
                                              ? 0.0
                                              : double(g) / (grid_points - 1));
        Couplings cp = make_couplings(lam, t);
        std::ostringstream tag;
        tag << rname << " lambda=(" << lam[0] << "," << lam[1] << ","
            << lam[2] << ") T=" << t;

        ReducedDensityMatrix rdm = reduced_density_matrix(cx, bp, cp);
        BruteResult br = brute_entropy_and_traces(rdm);
        w_trace.track(std::abs(br.trace - 1), tag.str());
        w_eig.track(std::max(0.0, -br.min_eigenvalue), tag.str());

        double s_closed = entanglement_entropy(st, cp).s_total;
        w_entropy.track(std::abs(s_closed - br.entropy), tag.str());
        w_tr2.track(std::abs(trace_rho_n(st, cp, 2) / br.trace_rho_2 - 1),
                    tag.str());
        w_tr3.track(std::abs(trace_rho_n(st, cp, 3) / br.trace_rho_3 - 1),
                    tag.str());
      }
    }
  }

  // eta invariance under the four-to-one representation change (torus)
  if (torus) {
    int n = cx.n_per_color;
    for (const auto& lam : lambdas) {
      for (double t : {0.3 * lam[0], lam[1], 7.0 * lam[2]}) {
        Couplings cp = make_couplings(lam, t);
        for (const auto& h : group) {
          std::array<int, 3> nc = h.n_c;
          double base = eta_weight(nc, cp, n, true);
          const int flips[3][2] = {{0, 1}, {1, 2}, {0, 2}};
          for (const auto& f : flips) {
            std::array<int, 3> alt = nc;
            alt[size_t(f[0])] = n - alt[size_t(f[0])];
            alt[size_t(f[1])] = n - alt[size_t(f[1])];
            double v = eta_weight(alt, cp, n, true);
            std::ostringstream tag;
            tag << "element n_c=(" << nc[0] << "," << nc[1] << "," << nc[2]
                << ") T=" << t;
            w_eta.track(std::abs(v / base - 1), tag.str());
          }
        }
      }
    }
  }

  VerifyReport rep;
  auto add = [&](const std::string& name, const Worst& w, double tol) {
    rep.checks.push_back({name, w.value <= tol, w.value, tol, w.where});
  };
  add("entropy closed-form vs spectral oracle (abs)", w_entropy, 1e-8);
  add("Tr rho^2 closed-form vs matrix power (rel)", w_tr2, 1e-10);
  add("Tr rho^3 closed-form vs matrix power (rel)", w_tr3, 1e-10);
  add("rho_A trace = 1", w_trace, 1e-12);
  add("rho_A eigenvalues >= -1e-12", w_eig, 1e-12);
  add("subgroup cardinalities vs counting formulas", w_card, 0.0);
  if (torus) add("eta four-representation invariance (rel)", w_eta, 1e-12);
  return rep;
}

}  // namespace colorcode
