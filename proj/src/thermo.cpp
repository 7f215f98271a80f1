#include "colorcode/thermo.hpp"

#include <cmath>
#include <stdexcept>

namespace colorcode {

namespace {

const double kLn2 = std::log(2.0);
const double kLn4 = std::log(4.0);

// Per-branch color signs eps_j^c (j = 0..3 for F_1..F_4), indexed by Color.
constexpr int kEps[4][3] = {
    {+1, +1, +1},  // F_1
    {-1, +1, -1},  // F_2: r-, g+, b-
    {+1, -1, -1},  // F_3: r+, g-, b-
    {-1, -1, +1},  // F_4: r-, g-, b+
};

// Sign of xi_{m+1} inside branch j: xi1 pairs with blue, xi2 with green,
// xi3 with red, xi4 always +.
inline int str_sign(int j, int m) {
  switch (m) {
    case 0: return kEps[j][int(Color::Blue)];
    case 1: return kEps[j][int(Color::Green)];
    case 2: return kEps[j][int(Color::Red)];
    default: return +1;
  }
}

// e^{-eps k/2} (x ln x + eps y ln y) with x = cosh(k/2), y = sinh(k/2),
// evaluated without forming the overflowing hyperbolics.
double plaq_term(double k, int eps) {
  if (k == 0) return 0;
  double t = std::exp(-k);
  double lnx = k / 2 + std::log1p(t) - kLn2;
  double lny = k / 2 + std::log1p(-t) - kLn2;
  if (eps > 0) return (1 + t) / 2 * lnx + (1 - t) / 2 * lny;
  if (t == 0) return 1 + lny;  // k beyond exp underflow
  double d = std::log1p(t) - std::log1p(-t);
  return (1 + t) / (2 * t) * d + lny;
}

// phi(k) of the thermodynamic-limit entropy density; phi(0) = 0,
// phi(k) -> -ln 2 as k -> infinity.
double phi(double k) { return plaq_term(k, +1) - k / 2; }

// Number of branches j whose eps_j^c is +1 for every color in the mask.
int surviving_branches(const std::array<bool, 3>& mask) {
  int count = 0;
  for (int j = 0; j < 4; ++j) {
    bool ok = true;
    for (int c = 0; c < 3; ++c)
      if (mask[size_t(c)] && kEps[j][c] < 0) ok = false;
    if (ok) ++count;
  }
  return count;
}

double log_sinh(double t) {  // t >= 0; -inf at 0
  if (t == 0) return kNegInf;
  return t + std::log1p(-std::exp(-2 * t)) - kLn2;
}

void require_sane(const RegionStats& st) {
  for (int c = 0; c < 3; ++c) {
    if (st.sigma_a[size_t(c)] < 0 || st.sigma_b[size_t(c)] < 0)
      throw std::invalid_argument("inconsistent stats: negative counts");
  }
  if (st.sigma_ab < 0 || st.m_a < 1 || st.m_b < 0)
    throw std::invalid_argument("inconsistent stats");
}

double log_group_term(const RegionStats& st) {
  GroupCardinalities gc = group_cardinalities(st);
  return -kLn2 * (gc.log2_d_a + gc.log2_d_b - gc.log2_g);
}

}  // namespace

bool Couplings::all_k_finite() const {
  return std::isfinite(k[0]) && std::isfinite(k[1]) && std::isfinite(k[2]);
}

bool Couplings::any_k_infinite() const { return !all_k_finite(); }

bool Couplings::all_k_zero_or_infinite() const {
  for (double kc : k)
    if (kc != 0 && std::isfinite(kc)) return false;
  return true;
}

Couplings make_couplings(const std::array<double, 3>& lambda_x, double T) {
  if (T < 0) throw std::invalid_argument("temperature must be nonnegative");
  Couplings cp;
  cp.temperature = T;
  cp.lambda_x = lambda_x;
  for (int c = 0; c < 3; ++c) {
    double lam = lambda_x[size_t(c)];
    if (lam < 0) throw std::invalid_argument("lambda_x must be nonnegative");
    double kc;
    if (lam == kPosInf || T == 0) kc = 0;           // hard constraint / ground state
    else if (lam == 0 || T == kPosInf) kc = kPosInf;
    else {
      kc = -std::log(std::tanh(lam / T));
      if (!(kc > 0)) kc = 0;
    }
    cp.k[size_t(c)] = kc;
  }
  return cp;
}

double ising_partition(double k, double n, bool antiperiodic, int j_product) {
  double s = std::pow(std::sinh(k / 2), n), c = std::pow(std::cosh(k / 2), n);
  double sign = antiperiodic ? -1 : 1;
  return std::pow(2.0, n) * (s + sign * j_product * c);
}

XiQuad xi_values(double b, double g, double r) {
  if (b < 0 || g < 0 || r < 0)
    throw std::invalid_argument("xi arguments must be nonnegative");
  XiQuad q;
  double tp = b + log_cosh(g + r) - kLn2;
  double tm = -b + log_cosh(g - r) - kLn2;
  q.log_xi[0] = log_sub_exp(tp, tm);
  q.log_xi[3] = log_add_exp(tp, tm);
  double up = g + log_cosh(b + r) - kLn2;
  double um = -g + log_cosh(b - r) - kLn2;
  q.log_xi[1] = log_sub_exp(up, um);
  double vp = r + log_cosh(b + g) - kLn2;
  double vm = -r + log_cosh(b - g) - kLn2;
  q.log_xi[2] = log_sub_exp(vp, vm);
  return q;
}

XiQuad xi_values(const Couplings& cp, const ComponentStats& comp) {
  return xi_values(cp.k[int(Color::Blue)] * comp.sigma[int(Color::Blue)] / 2,
                   cp.k[int(Color::Green)] * comp.sigma[int(Color::Green)] / 2,
                   cp.k[int(Color::Red)] * comp.sigma[int(Color::Red)] / 2);
}

double string_partition(const XiQuad& xi, double n, const std::string& pattern,
                        int j_r, int j_b, int j_g) {
  int sb, sg, sr;
  if (pattern == "ppp") { sb = +1; sg = +1; sr = +1; }
  else if (pattern == "aap") { sb = -1; sg = +1; sr = -1; }
  else if (pattern == "paa") { sb = -1; sg = -1; sr = +1; }
  else if (pattern == "apa") { sb = +1; sg = -1; sr = -1; }
  else throw std::invalid_argument("unknown boundary pattern: " + pattern);
  auto p = [&](int m) { return std::exp(n * xi.log_xi[size_t(m)]); };
  return std::pow(4.0, n) *
         (sb * j_b * p(0) + sg * j_g * p(1) + sr * j_r * p(2) + p(3));
}

std::array<std::array<double, 4>, 4> transfer_matrix(double b, double g,
                                                     double r, int j_b,
                                                     int j_g, int j_r) {
  if (j_b * j_g * j_r != 1)
    throw std::invalid_argument(
        "boundary signs must multiply to +1 (realizable twists only)");
  // Entry sign patterns for (b, g, r): the four Z2 x Z2 characters.
  static constexpr int S[4][3] = {
      {+1, +1, +1}, {-1, -1, +1}, {+1, -1, -1}, {-1, +1, -1}};
  // Boundary twist: the group element whose character values reproduce
  // (j_b, j_g, j_r) on the (xi1, xi2, xi3) sectors.
  int p = 0;
  if (j_b < 0 && j_g < 0) p = 1;
  else if (j_g < 0 && j_r < 0) p = 2;
  else if (j_b < 0 && j_r < 0) p = 3;
  std::array<std::array<double, 4>, 4> m;
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < 4; ++col) {
      const int* s = S[(row ^ col) ^ p];
      m[size_t(row)][size_t(col)] = std::exp(s[0] * b + s[1] * g + s[2] * r);
    }
  return m;
}

double FTerms::log_z0() const { return torus ? log_norm - kLn4 : log_norm; }

double FTerms::log_f_n(int j, double n) const {
  double lf = 0;
  for (int c = 0; c < 3; ++c) {
    double lx = log_cosh(k[size_t(c)] / 2), ly = log_sinh(k[size_t(c)] / 2);
    double term = kEps[j][c] > 0 ? log_add_exp(n * lx, n * ly)
                                 : log_sub_exp(n * lx, n * ly);
    lf += sigma_a[size_t(c)] * term;
  }
  for (const auto& comp : comps) {
    double pos = kNegInf, neg = kNegInf;
    for (int m = 0; m < 4; ++m) {
      double l = n * comp.xi.log_xi[size_t(m)];
      if (l == kNegInf && comp.xi.log_xi[size_t(m)] == kNegInf) continue;
      if (str_sign(j, m) > 0) pos = log_add_exp(pos, l);
      else neg = log_add_exp(neg, l);
    }
    lf += log_sub_exp(pos, neg);
  }
  return lf;
}

double FTerms::f(int j, double n) const { return std::exp(log_f_n(j, n)); }

double FTerms::df(int j) const {
  double g = plaq_g[size_t(j)];
  for (const auto& comp : comps) {
    double e = 0, str = 0;
    for (int c = 0; c < 3; ++c) e += kEps[j][c] * comp.a[size_t(c)];
    for (int m = 0; m < 4; ++m) {
      double l = comp.xi.log_xi[size_t(m)];
      if (l == kNegInf) continue;
      str += str_sign(j, m) * l * std::exp(l);
    }
    g += std::exp(-e) * str;
  }
  return f(j, 1) * g;
}

FTerms f_terms(const Couplings& cp, const RegionStats& st) {
  require_sane(st);
  if (!cp.all_k_finite())
    throw std::invalid_argument(
        "symbolic k = +inf outside a supported limit path");
  for (const auto& comp : st.components)
    if (comp.at_infinity)
      throw std::invalid_argument(
          "at_infinity components require the thermodynamic-limit path");

  bool torus = st.boundary_kind == BoundaryKind::Torus;
  if (torus) {
    for (int c = 0; c < 3; ++c) {
      double sum = st.sigma_a[size_t(c)];
      for (const auto& comp : st.components) sum += comp.sigma[size_t(c)];
      if (std::abs(sum - st.n_per_color) > 1e-6)
        throw std::invalid_argument(
            "inconsistent stats: per-color plaquette identity "
            "Sigma_A^c + sum_i Sigma_i^c = N violated");
    }
  }

  FTerms ft;
  ft.torus = torus;
  ft.n_per_color = st.n_per_color;
  ft.k = cp.k;
  ft.sigma_a = st.sigma_a;
  for (const auto& comp : st.components) {
    FTerms::Comp fc;
    for (int c = 0; c < 3; ++c)
      fc.a[size_t(c)] = cp.k[size_t(c)] * comp.sigma[size_t(c)] / 2;
    fc.xi = xi_values(cp, comp);
    ft.comps.push_back(fc);
  }
  for (int j = 0; j < (torus ? 4 : 1); ++j) {
    double lf = 0;
    if (torus) {
      for (int c = 0; c < 3; ++c)
        lf += kEps[j][c] * cp.k[size_t(c)] / 2 * st.n_per_color;
    } else {
      for (int c = 0; c < 3; ++c) {
        double sum = st.sigma_a[size_t(c)];
        for (const auto& comp : st.components) sum += comp.sigma[size_t(c)];
        lf += cp.k[size_t(c)] / 2 * sum;
      }
    }
    ft.log_f[size_t(j)] = lf;
    double g = 0;
    for (int c = 0; c < 3; ++c)
      g += st.sigma_a[size_t(c)] * plaq_term(cp.k[size_t(c)], kEps[j][c]);
    ft.plaq_g[size_t(j)] = g;
  }
  ft.log_norm = ft.log_f[0];
  if (torus)
    for (int j = 1; j < 4; ++j)
      ft.log_norm = log_add_exp(ft.log_norm, ft.log_f[size_t(j)]);
  return ft;
}

namespace {

// Exact S_A for couplings whose k are all 0 or +inf.
EntropyBreakdown entropy_limit_branch(const RegionStats& st,
                                      const Couplings& cp) {
  EntropyBreakdown out;
  out.term_log_group = log_group_term(st);
  std::array<bool, 3> hot = {cp.k[0] == kPosInf, cp.k[1] == kPosInf,
                             cp.k[2] == kPosInf};
  double sum_sa = 0;
  for (int c = 0; c < 3; ++c)
    if (hot[size_t(c)]) sum_sa += st.sigma_a[size_t(c)];
  double ln_ns = kLn4 - std::log(double(surviving_branches(hot)));
  double ncomp = double(st.components.size());
  bool torus = st.boundary_kind == BoundaryKind::Torus;
  out.term_log_z0 = sum_sa * kLn2 + (torus ? ncomp - 1 : ncomp) * ln_ns;
  out.term_df = 0;
  out.s_total = out.term_log_group + out.term_log_z0;
  return out;
}

}  // namespace

EntropyBreakdown entanglement_entropy(const RegionStats& st,
                                      const Couplings& cp) {
  if (cp.any_k_infinite()) {
    if (!cp.all_k_zero_or_infinite())
      throw std::invalid_argument(
          "mixed finite and infinite k is not a supported limit path");
    require_sane(st);
    return entropy_limit_branch(st, cp);
  }
  FTerms ft = f_terms(cp, st);
  EntropyBreakdown out;
  out.term_log_group = log_group_term(st);
  out.term_log_z0 = ft.log_z0();
  double corr = 0;
  for (int j = 0; j < ft.n_branches(); ++j) {
    double wlog = ft.log_f[size_t(j)] - ft.log_norm;
    corr += std::exp(wlog) * ft.plaq_g[size_t(j)];
    for (const auto& comp : ft.comps) {
      double e = 0;
      for (int c = 0; c < 3; ++c) e += kEps[j][c] * comp.a[size_t(c)];
      for (int m = 0; m < 4; ++m) {
        double l = comp.xi.log_xi[size_t(m)];
        if (l == kNegInf) continue;
        corr += str_sign(j, m) * l * std::exp(wlog - e + l);
      }
    }
  }
  out.term_df = -corr;
  out.s_total = out.term_log_group + out.term_log_z0 + out.term_df;
  return out;
}

double trace_rho_n(const RegionStats& st, const Couplings& cp, double n) {
  if (n < 1) throw std::invalid_argument("replica index n must be >= 1");
  if (n == 1) return 1.0;
  FTerms ft = f_terms(cp, st);
  double log_ratio = -log_group_term(st) - ft.log_z0();  // ln(dAdB/(Z0|G|))
  double lsum = kNegInf;
  for (int j = 0; j < ft.n_branches(); ++j)
    lsum = log_add_exp(lsum, ft.log_f_n(j, n));
  return std::exp((n - 1) * log_ratio - ft.log_norm + lsum);
}

double mutual_information(const RegionStats& sa, const RegionStats& sb,
                          const RegionStats& su, const Couplings& cp) {
  if (su.m_b != 0)
    throw std::invalid_argument(
        "stats_union must be the whole-system pseudo-bipartition");
  return (entanglement_entropy(sa, cp).s_total +
          entanglement_entropy(sb, cp).s_total -
          entanglement_entropy(su, cp).s_total) / 2;
}

double entropy_thermodynamic_limit(const RegionStats& st, const Couplings& cp) {
  if (cp.any_k_infinite())
    throw std::invalid_argument(
        "thermodynamic-limit path requires finite k (use the exact limit "
        "branches for T = +inf)");
  require_sane(st);
  bool torus = st.boundary_kind == BoundaryKind::Torus;
  double constant;
  if (torus)
    constant = kLn2 * (st.sigma_ab + 2 - 2 * st.m_a - 2 * st.m_b) - kLn4;
  else
    constant = kLn2 * (st.sigma_ab - 2 * double(st.components.size()) -
                       2 * st.enclosed_a_components);
  double s = constant;
  for (int c = 0; c < 3; ++c) s -= phi(cp.k[size_t(c)]) * st.sigma_a[size_t(c)];
  // "k_c > 0" in exact arithmetic: k vanishes only at T = 0 or hard lambda.
  // (The computed k can underflow to 0 at T << lambda while the infinite
  // components still see an extensive, nonzero k_c Sigma^c.)
  std::array<bool, 3> pos;
  for (int c = 0; c < 3; ++c)
    pos[size_t(c)] =
        cp.temperature > 0 && cp.lambda_x[size_t(c)] != kPosInf;
  double ln_ns = kLn4 - std::log(double(surviving_branches(pos)));
  for (const auto& comp : st.components) {
    if (comp.at_infinity) {
      s += ln_ns;
      continue;
    }
    double asum = 0;
    for (int c = 0; c < 3; ++c)
      asum += cp.k[size_t(c)] * comp.sigma[size_t(c)] / 2;
    XiQuad xi = xi_values(cp, comp);
    double str = 0;
    for (int m = 0; m < 4; ++m) {
      double l = xi.log_xi[size_t(m)];
      if (l == kNegInf) continue;
      str += l * std::exp(l - asum);
    }
    s += asum - str;
  }
  return s;
}

double mutual_information_thermodynamic_limit(const RegionStats& sa,
                                              const RegionStats& sb,
                                              const RegionStats& su,
                                              const Couplings& cp) {
  if (su.m_b != 0)
    throw std::invalid_argument(
        "stats_union must be the whole-system pseudo-bipartition");
  return (entropy_thermodynamic_limit(sa, cp) +
          entropy_thermodynamic_limit(sb, cp) -
          entropy_thermodynamic_limit(su, cp)) / 2;
}

double topological_entropy_transcription(
    const std::array<RegionStats, 4>& st, const Couplings& cp) {
  if (st[0].boundary_kind != BoundaryKind::Torus)
    throw std::invalid_argument("transcription path is torus-only");
  if (!cp.all_k_finite())
    throw std::invalid_argument("transcription path requires finite k");
  double n = st[0].n_per_color;
  double log_4z0 = kNegInf;
  for (int j = 0; j < 4; ++j) {
    double lf = 0;
    for (int c = 0; c < 3; ++c) lf += kEps[j][c] * cp.k[size_t(c)] / 2 * n;
    log_4z0 = log_add_exp(log_4z0, lf);
  }
  static constexpr int kBipSign[4] = {+1, -1, -1, +1};
  double acc = 4 * kLn2;
  for (int bip = 0; bip < 4; ++bip) {
    for (const auto& comp : st[size_t(bip)].components) {
      if (comp.at_infinity)
        throw std::invalid_argument("transcription path requires finite components");
      XiQuad xi = xi_values(cp, comp);
      for (int j = 0; j < 4; ++j) {
        double e = 0;
        for (int c = 0; c < 3; ++c)
          e += kEps[j][c] * cp.k[size_t(c)] / 2 * (n - comp.sigma[size_t(c)]);
        for (int m = 0; m < 4; ++m) {
          double l = xi.log_xi[size_t(m)];
          if (l == kNegInf) continue;
          acc += kBipSign[bip] * str_sign(j, m) * l * std::exp(e + l - log_4z0);
        }
      }
    }
  }
  return acc;
}

double topological_entropy(const std::array<RegionStats, 4>& st,
                           const Couplings& cp) {
  check_topo_relations(st);
  bool any_inf_comp = false;
  for (const auto& s : st)
    for (const auto& comp : s.components)
      if (comp.at_infinity) any_inf_comp = true;

  if (any_inf_comp) {
    return -entropy_thermodynamic_limit(st[0], cp) +
           entropy_thermodynamic_limit(st[1], cp) +
           entropy_thermodynamic_limit(st[2], cp) -
           entropy_thermodynamic_limit(st[3], cp);
  }
  double s = -entanglement_entropy(st[0], cp).s_total +
             entanglement_entropy(st[1], cp).s_total +
             entanglement_entropy(st[2], cp).s_total -
             entanglement_entropy(st[3], cp).s_total;
  if (st[0].boundary_kind == BoundaryKind::Torus && cp.all_k_finite()) {
    double s2 = topological_entropy_transcription(st, cp);
    if (std::abs(s - s2) > 1e-9)
      throw std::logic_error(
          "composition and transcription paths disagree: " +
          std::to_string(s) + " vs " + std::to_string(s2));
  }
  return s;
}

double topo_color_limits(const std::array<RegionStats, 4>& st,
                         const Couplings& cp) {
  bool any_hard = false;
  for (int c = 0; c < 3; ++c)
    if (cp.lambda_x[size_t(c)] == kPosInf) any_hard = true;
  if (!any_hard)
    throw std::invalid_argument(
        "topo_color_limits expects at least one hard-constrained color");
  return topological_entropy(st, cp);
}

double t_drop(double lambda_x, double sigma_prime) {
  if (lambda_x <= 0) throw std::invalid_argument("lambda_x must be positive");
  if (sigma_prime < 2)
    throw std::invalid_argument("sigma_prime must be >= 2 (log nonpositive)");
  return lambda_x / std::log(std::sqrt(2 * sigma_prime));
}

double zeta(double lambda_x, double temperature) {
  return std::exp(lambda_x / temperature);
}

}  // namespace colorcode
