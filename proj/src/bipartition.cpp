#include "colorcode/bipartition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace colorcode {

Bipartition Bipartition::from_qubits(const Colex& colex,
                                     const std::vector<int>& a_qubits) {
  Bipartition bp;
  bp.in_a.assign(size_t(colex.num_qubits), 0);
  for (int q : a_qubits) {
    if (q < 0 || q >= colex.num_qubits)
      throw std::invalid_argument("qubit index " + std::to_string(q) +
                                  " out of range");
    bp.in_a[size_t(q)] = 1;
  }
  return bp;
}

std::vector<int> Bipartition::a_qubits() const {
  std::vector<int> out;
  for (size_t q = 0; q < in_a.size(); ++q)
    if (in_a[q]) out.push_back(int(q));
  return out;
}

Bipartition Bipartition::complement() const {
  Bipartition bp;
  bp.in_a.reserve(in_a.size());
  for (char c : in_a) bp.in_a.push_back(c ? 0 : 1);
  return bp;
}

namespace {

// Connected components over the qubit graph where two qubits are adjacent
// iff they co-occur in some plaquette support.  Returns component id per
// qubit (-1 for qubits outside the mask), and the component count.
int label_components(const Colex& cx, const std::vector<char>& mask,
                     std::vector<int>& comp) {
  comp.assign(size_t(cx.num_qubits), -1);
  std::vector<std::vector<int>> adj(size_t(cx.num_qubits));
  for (const auto& p : cx.plaquettes) {
    for (size_t i = 0; i < p.support.size(); ++i)
      for (size_t j = i + 1; j < p.support.size(); ++j) {
        adj[size_t(p.support[i])].push_back(p.support[j]);
        adj[size_t(p.support[j])].push_back(p.support[i]);
      }
  }
  int n = 0;
  for (int s = 0; s < cx.num_qubits; ++s) {
    if (!mask[size_t(s)] || comp[size_t(s)] >= 0) continue;
    std::queue<int> bfs;
    bfs.push(s);
    comp[size_t(s)] = n;
    while (!bfs.empty()) {
      int q = bfs.front();
      bfs.pop();
      for (int t : adj[size_t(q)]) {
        if (mask[size_t(t)] && comp[size_t(t)] < 0) {
          comp[size_t(t)] = n;
          bfs.push(t);
        }
      }
    }
    ++n;
  }
  return n;
}

}  // namespace

RegionStats region_stats(const Colex& cx, const Bipartition& bp) {
  if (int(bp.in_a.size()) != cx.num_qubits)
    throw std::invalid_argument("bipartition size does not match lattice");
  int na = int(std::count(bp.in_a.begin(), bp.in_a.end(), char(1)));
  if (na == 0) throw std::invalid_argument("region A is empty");
  if (na == cx.num_qubits)
    throw std::invalid_argument("region B is empty (use whole_system_stats)");

  RegionStats st;
  st.boundary_kind = cx.boundary_kind;
  st.n_per_color = cx.n_per_color;
  st.total_plaquettes = double(cx.plaquettes.size());

  std::vector<char> b_mask(bp.in_a.size());
  for (size_t q = 0; q < bp.in_a.size(); ++q) b_mask[q] = bp.in_a[q] ? 0 : 1;
  std::vector<int> a_comp, b_comp;
  st.m_a = label_components(cx, bp.in_a, a_comp);
  st.m_b = label_components(cx, b_mask, b_comp);

  // per-B-component tallies; component order = discovery order
  std::vector<ComponentStats> comps(size_t(st.m_b));
  std::vector<char> comp_near_border(size_t(st.m_b), 0);
  std::vector<char> a_comp_near_border(size_t(st.m_a), 0);

  for (const auto& p : cx.plaquettes) {
    bool touches_a = false;
    std::set<int> touched_b;
    bool near_border = false;
    for (int q : p.support) {
      if (bp.in_a[size_t(q)]) touches_a = true;
      else touched_b.insert(b_comp[size_t(q)]);
      if (!cx.border_qubit.empty() && cx.border_qubit[size_t(q)]) near_border = true;
    }
    int c = int(p.color);
    if (touched_b.empty()) {
      st.sigma_a[size_t(c)] += 1;
    } else {
      if (!touches_a) st.sigma_b[size_t(c)] += 1;
      else st.sigma_ab += 1;
      for (int bc : touched_b) {
        comps[size_t(bc)].sigma[size_t(c)] += 1;
        if (near_border) comp_near_border[size_t(bc)] = 1;
      }
    }
    if (touches_a && near_border) {
      for (int q : p.support)
        if (bp.in_a[size_t(q)]) a_comp_near_border[size_t(a_comp[size_t(q)])] = 1;
    }
  }

  bool planar = cx.boundary_kind == BoundaryKind::PlanarTriangular;
  if (planar) {
    for (size_t q = 0; q < bp.in_a.size(); ++q) {
      if (!cx.border_qubit[q]) continue;
      if (bp.in_a[q]) a_comp_near_border[size_t(a_comp[q])] = 1;
      else comp_near_border[size_t(b_comp[q])] = 1;
    }
  }
  for (int i = 0; i < st.m_a; ++i)
    if (!planar || !a_comp_near_border[size_t(i)]) ++st.enclosed_a_components;
  for (int i = 0; i < st.m_b; ++i) {
    comps[size_t(i)].enclosed = !planar || !comp_near_border[size_t(i)];
    if (comps[size_t(i)].enclosed) st.components.push_back(comps[size_t(i)]);
  }
  return st;
}

RegionStats whole_system_stats(const Colex& cx) {
  RegionStats st;
  st.boundary_kind = cx.boundary_kind;
  st.n_per_color = cx.n_per_color;
  st.total_plaquettes = double(cx.plaquettes.size());
  for (const auto& p : cx.plaquettes) st.sigma_a[size_t(int(p.color))] += 1;
  st.m_a = 1;
  st.m_b = 0;
  if (cx.boundary_kind == BoundaryKind::PlanarTriangular)
    st.enclosed_a_components = 0;  // the whole lattice touches its borders
  return st;
}

GroupCardinalities group_cardinalities(const RegionStats& st) {
  GroupCardinalities gc;
  if (st.boundary_kind == BoundaryKind::Torus) {
    gc.log2_g = 3 * st.n_per_color - 2;
    gc.log2_d_a = st.sigma_a_total() + 2 * st.m_b - 2;
    gc.log2_d_b = st.sigma_b_total() + 2 * st.m_a - 2;
    if (st.m_b == 0) {
      // whole-system pseudo-bipartition: G_A = G, G_B trivial
      gc.log2_d_a = gc.log2_g;
      gc.log2_d_b = 0;
    }
  } else {
    gc.log2_g = st.total_plaquettes;
    gc.log2_d_a = st.sigma_a_total() + 2 * double(st.components.size());
    gc.log2_d_b = st.sigma_b_total() + 2 * double(st.enclosed_a_components);
  }
  return gc;
}

std::vector<CollectiveString> collective_strings(const Colex& cx,
                                                 const Bipartition& bp) {
  std::vector<char> b_mask(bp.in_a.size());
  for (size_t q = 0; q < bp.in_a.size(); ++q) b_mask[q] = bp.in_a[q] ? 0 : 1;
  std::vector<int> b_comp;
  int m_b = label_components(cx, b_mask, b_comp);

  bool planar = cx.boundary_kind == BoundaryKind::PlanarTriangular;
  std::vector<std::set<int>> touching(static_cast<size_t>(m_b));  // plaquette ids per comp
  std::vector<char> near_border(size_t(m_b), 0);
  for (const auto& p : cx.plaquettes) {
    bool nb = false;
    std::set<int> touched;
    for (int q : p.support) {
      if (!bp.in_a[size_t(q)]) touched.insert(b_comp[size_t(q)]);
      if (!cx.border_qubit.empty() && cx.border_qubit[size_t(q)]) nb = true;
    }
    for (int bc : touched) {
      touching[size_t(bc)].insert(p.id);
      if (nb) near_border[size_t(bc)] = 1;
    }
  }
  if (planar) {
    for (size_t q = 0; q < b_mask.size(); ++q)
      if (b_mask[q] && cx.border_qubit[q]) near_border[size_t(b_comp[q])] = 1;
  }

  std::vector<CollectiveString> out;
  for (int i = 0; i < m_b; ++i) {
    if (planar && near_border[size_t(i)]) continue;
    for (int cc = 0; cc < 3; ++cc) {  // string color
      CollectiveString s;
      s.color = Color(cc);
      s.component = i;
      std::vector<char> flip(size_t(cx.num_qubits), 0);
      for (int pid : touching[size_t(i)]) {
        const auto& p = cx.plaquettes[size_t(pid)];
        if (int(p.color) == cc) continue;  // product of c- and c-bar plaquettes
        s.plaquette_factors.push_back(pid);
        for (int q : p.support) flip[size_t(q)] ^= 1;
      }
      for (int q = 0; q < cx.num_qubits; ++q)
        if (flip[size_t(q)]) s.support.push_back(q);
      for (int q : s.support)
        if (!bp.in_a[size_t(q)])
          throw std::runtime_error("collective string support leaks into B");
      out.push_back(std::move(s));
    }
  }
  return out;
}

namespace {

int hex_norm(int du, int dv) {
  return (std::abs(du) + std::abs(dv) + std::abs(du + dv)) / 2;
}

// Shortest torus representative of a cell displacement, plus its hex norm.
void torus_disp(int du, int dv, int lu, int lv, int& best_du, int& best_dv,
                int& best_d) {
  best_d = 1 << 28;
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      int u = du + a * lu, v = dv + b * lv;
      int d = hex_norm(u, v);
      if (d < best_d) {
        best_d = d;
        best_du = u;
        best_dv = v;
      }
    }
  }
}

}  // namespace

void check_topo_relations(const std::array<RegionStats, 4>& st) {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("topological bipartition relations violated: " +
                                what);
  };
  const int want_ma[4] = {1, 1, 1, 2};
  const int want_mb[4] = {2, 1, 1, 1};
  for (int j = 0; j < 4; ++j) {
    if (st[size_t(j)].m_a != want_ma[j] || st[size_t(j)].m_b != want_mb[j])
      fail("m values of bipartition " + std::to_string(j + 1));
  }
  for (int c = 0; c < 3; ++c) {
    double lhs = st[0].sigma_a[size_t(c)] + st[3].sigma_a[size_t(c)];
    double rhs = st[1].sigma_a[size_t(c)] + st[2].sigma_a[size_t(c)];
    if (std::abs(lhs - rhs) > 1e-9) fail("per-color Sigma_A sum rule");
  }
  if (std::abs((st[0].sigma_ab + st[3].sigma_ab) -
               (st[1].sigma_ab + st[2].sigma_ab)) > 1e-9)
    fail("Sigma_AB sum rule");
}

Bipartition annulus_bipartition(const Colex& cx, int R, int r) {
  if (cx.boundary_kind != BoundaryKind::Torus)
    throw std::invalid_argument("annulus regions require a torus lattice");
  if (r < 0 || R <= r)
    throw std::invalid_argument("need radii R > r >= 0");
  std::vector<int> qubits;
  for (int u = 0; u < cx.lu; ++u)
    for (int v = 0; v < cx.lv; ++v) {
      int du, dv, d;
      torus_disp(u, v, cx.lu, cx.lv, du, dv, d);
      if (d > r && d <= R) {
        qubits.push_back(cx.qubit_id(u, v, 0));
        qubits.push_back(cx.qubit_id(u, v, 1));
      }
    }
  return Bipartition::from_qubits(cx, qubits);
}

TopoBipartitions canonical_topo_bipartitions(const Colex& cx, int R, int r) {
  if (cx.boundary_kind != BoundaryKind::Torus)
    throw std::invalid_argument(
        "canonical topological bipartitions require a torus lattice");
  if (r < 1 || R <= r)
    throw std::invalid_argument("need outer radius R > inner radius r >= 1");
  if (R - r < 2)
    throw std::invalid_argument(
        "annulus width R - r must be >= 2 so no plaquette bridges the inner "
        "and outer regions");

  // Hexagon-ring distances from the base cell (0,0) and angular arc labels.
  int lu = cx.lu, lv = cx.lv;
  std::vector<int> dist(size_t(lu * lv)), arc(size_t(lu * lv));
  bool outer_nonempty = false;
  for (int u = 0; u < lu; ++u) {
    for (int v = 0; v < lv; ++v) {
      int du, dv, d;
      torus_disp(u, v, lu, lv, du, dv, d);
      dist[size_t(u * lv + v)] = d;
      double x = du - 0.5 * dv, y = 0.8660254037844386 * dv;
      double ang = std::atan2(y, x);  // (-pi, pi]
      if (ang < 0) ang += 2 * 3.14159265358979323846;
      arc[size_t(u * lv + v)] = std::min(3, int(ang / (0.5 * 3.14159265358979323846)));
      if (d > R) outer_nonempty = true;
    }
  }
  if (!outer_nonempty)
    throw std::invalid_argument("lattice too small: no cells outside radius R");

  auto region = [&](bool use_arc, std::set<int> arcs) {
    std::vector<int> qubits;
    for (int u = 0; u < lu; ++u)
      for (int v = 0; v < lv; ++v) {
        int cell = u * lv + v;
        if (dist[size_t(cell)] <= r || dist[size_t(cell)] > R) continue;
        if (use_arc && !arcs.count(arc[size_t(cell)])) continue;
        qubits.push_back(2 * cell);
        qubits.push_back(2 * cell + 1);
      }
    return Bipartition::from_qubits(cx, qubits);
  };

  TopoBipartitions tb;
  tb.bipartitions[0] = region(false, {});
  tb.bipartitions[1] = region(true, {0, 1, 2});
  tb.bipartitions[2] = region(true, {2, 3, 0});
  tb.bipartitions[3] = region(true, {0, 2});
  for (int j = 0; j < 4; ++j)
    tb.stats[size_t(j)] = region_stats(cx, tb.bipartitions[size_t(j)]);
  // Component order for bipartition 1: put the inner (smaller) component
  // first so downstream reporting is deterministic.
  auto& comps = tb.stats[0].components;
  if (comps.size() == 2) {
    double s0 = comps[0].sigma[0] + comps[0].sigma[1] + comps[0].sigma[2];
    double s1 = comps[1].sigma[0] + comps[1].sigma[1] + comps[1].sigma[2];
    if (s0 > s1) std::swap(comps[0], comps[1]);
  }
  try {
    check_topo_relations(tb.stats);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(e.what()) +
                                " (lattice too small for requested radii?)");
  }
  return tb;
}

namespace {

RegionStats synth_base(double n, bool planar) {
  RegionStats st;
  st.boundary_kind = planar ? BoundaryKind::PlanarTriangular : BoundaryKind::Torus;
  st.n_per_color = n;
  st.total_plaquettes = 3 * n;
  return st;
}

}  // namespace

RegionStats make_annulus_stats(double n, double s, double a,
                               bool outer_at_infinity, bool inner_at_infinity) {
  if (s <= 0 || a < 8 || (!outer_at_infinity && n < s + a + 4))
    throw std::invalid_argument("annulus stats parameters too small");
  RegionStats st = synth_base(n, false);
  st.m_a = 1;
  st.m_b = 2;
  st.sigma_ab = 12;
  for (int c = 0; c < 3; ++c) {
    st.sigma_a[size_t(c)] = a;
    st.sigma_b[size_t(c)] = n - a - 4;
  }
  ComponentStats inner, outer;
  for (int c = 0; c < 3; ++c) {
    inner.sigma[size_t(c)] = s;
    outer.sigma[size_t(c)] = n - a - s;
  }
  inner.at_infinity = inner_at_infinity;
  outer.at_infinity = outer_at_infinity;
  st.components = {inner, outer};
  return st;
}

RegionStats make_annulus_complement_stats(double n, double s, double a,
                                          bool annulus_at_infinity) {
  RegionStats st = synth_base(n, false);
  st.m_a = 2;
  st.m_b = 1;
  st.sigma_ab = 12;
  ComponentStats annulus;
  for (int c = 0; c < 3; ++c) {
    st.sigma_a[size_t(c)] = n - a - 4;  // solely inside the disk or exterior
    st.sigma_b[size_t(c)] = a;
    annulus.sigma[size_t(c)] = a + 4;   // annulus plus both boundary rings
  }
  annulus.at_infinity = annulus_at_infinity;
  st.components = {annulus};
  return st;
}

RegionStats make_whole_system_stats(double n) {
  RegionStats st = synth_base(n, false);
  for (int c = 0; c < 3; ++c) st.sigma_a[size_t(c)] = n;
  st.m_a = 1;
  st.m_b = 0;
  return st;
}

std::array<RegionStats, 4> make_levin_wen_stats(double n, double s, double a,
                                                bool outer_at_infinity) {
  std::array<RegionStats, 4> st = {
      make_annulus_stats(n, s, a, outer_at_infinity), synth_base(n, false),
      synth_base(n, false), synth_base(n, false)};

  double q = std::floor(a / 4);
  double sig_a[4] = {a, a - q, 3 * q, 2 * q};
  double sig_ab[4] = {12, 14, 14, 16};
  int m_a[4] = {1, 1, 1, 2}, m_b[4] = {2, 1, 1, 1};
  for (int j = 1; j < 4; ++j) {
    st[size_t(j)].m_a = m_a[j];
    st[size_t(j)].m_b = m_b[j];
    st[size_t(j)].sigma_ab = sig_ab[j];
    ComponentStats comp;
    comp.at_infinity = outer_at_infinity;
    for (int c = 0; c < 3; ++c) {
      st[size_t(j)].sigma_a[size_t(c)] = sig_a[j];
      st[size_t(j)].sigma_b[size_t(c)] = n - sig_a[j] - sig_ab[j] / 3.0;
      comp.sigma[size_t(c)] = n - sig_a[j];
    }
    st[size_t(j)].components = {comp};
  }
  check_topo_relations(st);
  return st;
}

std::array<RegionStats, 4> make_levin_wen_stats_planar(double n, double s,
                                                       double a) {
  // Same counting layout, but the exterior touches the lattice border:
  // it generates no collective strings and the planar cardinality rules
  // count enclosed components instead of the torus -2 reduction.
  std::array<RegionStats, 4> st = make_levin_wen_stats(n, s, a, false);
  for (int j = 0; j < 4; ++j) {
    st[size_t(j)].boundary_kind = BoundaryKind::PlanarTriangular;
    if (j == 0) {
      st[size_t(j)].components.resize(1);  // keep the inner component only
      st[size_t(j)].enclosed_a_components = 1;
    } else {
      st[size_t(j)].components.clear();
      st[size_t(j)].enclosed_a_components = (j == 3) ? 2 : 1;
    }
  }
  return st;
}

}  // namespace colorcode
