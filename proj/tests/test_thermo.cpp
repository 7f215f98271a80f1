#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "colorcode/bipartition.hpp"
#include "colorcode/colex.hpp"
#include "colorcode/thermo.hpp"

using namespace colorcode;

namespace {
const double kLn2 = std::log(2.0);
}

TEST_CASE("couplings: value and limits") {
  Couplings cp = make_couplings({1, 1, 1}, 1);
  CHECK(cp.k[0] == doctest::Approx(-std::log(std::tanh(1.0))).epsilon(1e-12));
  CHECK(cp.k[0] == doctest::Approx(0.2723414).epsilon(1e-6));

  CHECK(make_couplings({1, 1, 1}, 0).k[0] == 0);
  CHECK(make_couplings({kPosInf, 1, 1}, 5).k[0] == 0);
  CHECK(make_couplings({1, 1, 1}, kPosInf).k[0] == kPosInf);
  CHECK(make_couplings({0, 1, 1}, 1).k[0] == kPosInf);
  CHECK(make_couplings({1, 1, 1}, 1e9).k[0] > 0);  // clamped, never negative
  CHECK_THROWS_AS(make_couplings({1, 1, 1}, -1), std::invalid_argument);
  CHECK_THROWS_AS(make_couplings({-1, 1, 1}, 1), std::invalid_argument);
}

TEST_CASE("Ising chain partition form") {
  // 2^n [sinh^n(k/2) + j cosh^n(k/2)], periodic, j=+1, n=3, k=1
  double z = ising_partition(1.0, 3, false, +1);
  CHECK(z == doctest::Approx(12.6027).epsilon(1e-4));
  double zp = ising_partition(0.7, 4, false, +1);
  double za = ising_partition(0.7, 4, true, +1);
  double s = std::sinh(0.35), c = std::cosh(0.35);
  CHECK(zp == doctest::Approx(16 * (std::pow(s, 4) + std::pow(c, 4))));
  CHECK(za == doctest::Approx(16 * (std::pow(s, 4) - std::pow(c, 4))));
}

TEST_CASE("xi quadruple pinned values") {
  XiQuad q = xi_values(0.5, 0.5, 0.5);
  CHECK(q.xi(0) == doctest::Approx(0.9687915).epsilon(1e-6));
  CHECK(q.xi(3) == doctest::Approx(1.5753221).epsilon(1e-6));
  // direct linear-domain evaluation
  auto direct = [](double b, double g, double r) {
    return 0.5 * std::exp(b) * std::cosh(g + r) -
           0.5 * std::exp(-b) * std::cosh(g - r);
  };
  CHECK(q.xi(0) == doctest::Approx(direct(0.5, 0.5, 0.5)).epsilon(1e-12));
  CHECK(q.xi(1) == doctest::Approx(direct(0.5, 0.5, 0.5)).epsilon(1e-12));
  XiQuad asym = xi_values(0.2, 0.9, 1.4);
  CHECK(asym.xi(0) == doctest::Approx(direct(0.2, 0.9, 1.4)).epsilon(1e-12));
  CHECK(asym.xi(1) == doctest::Approx(direct(0.9, 0.2, 1.4)).epsilon(1e-12));
  CHECK(asym.xi(2) == doctest::Approx(direct(1.4, 0.2, 0.9)).epsilon(1e-12));

  XiQuad zero = xi_values(0, 0, 0);
  CHECK(zero.log_xi[0] == kNegInf);
  CHECK(zero.log_xi[1] == kNegInf);
  CHECK(zero.log_xi[2] == kNegInf);
  CHECK(zero.xi(3) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(xi_values(-0.1, 0, 0), std::invalid_argument);
}

TEST_CASE("transfer-matrix spectrum matches the xi quadruple") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(1e-6, 2.0);
  std::uniform_int_distribution<int> pick(0, 3);
  // realizable boundary twists: J_b J_g J_r = +1
  const int patterns[4][3] = {
      {+1, +1, +1}, {-1, -1, +1}, {+1, -1, -1}, {-1, +1, -1}};
  for (int trial = 0; trial < 100; ++trial) {
    double b = dist(rng), g = dist(rng), r = dist(rng);
    const int* pat = patterns[pick(rng)];
    int jb = pat[0], jg = pat[1], jr = pat[2];
    auto m = transfer_matrix(b, g, r, jb, jg, jr);
    Eigen::Matrix4d em;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) em(i, j) = m[size_t(i)][size_t(j)];
    Eigen::Vector4cd ev = em.eigenvalues();
    std::vector<double> got;
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(ev(i).imag()) < 1e-10);
      got.push_back(ev(i).real());
    }
    XiQuad q = xi_values(b, g, r);
    std::vector<double> want = {4 * jb * q.xi(0), 4 * jg * q.xi(1),
                                4 * jr * q.xi(2), 4 * q.xi(3)};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    for (int i = 0; i < 4; ++i)
      CHECK(got[size_t(i)] == doctest::Approx(want[size_t(i)]).epsilon(1e-12));
  }
}

TEST_CASE("transfer matrix rejects unrealizable boundary twists") {
  CHECK_THROWS_AS(transfer_matrix(1, 1, 1, -1, 1, 1), std::invalid_argument);
}

TEST_CASE("string partition sign patterns") {
  XiQuad q = xi_values(0.3, 0.7, 0.4);
  double z = string_partition(q, 2, "ppp", 1, 1, 1);
  CHECK(z == doctest::Approx(16 * (q.xi(0) * q.xi(0) + q.xi(1) * q.xi(1) +
                                   q.xi(2) * q.xi(2) + q.xi(3) * q.xi(3))));
  double za = string_partition(q, 1, "aap", 1, 1, 1);
  CHECK(za == doctest::Approx(4 * (-q.xi(0) + q.xi(1) - q.xi(2) + q.xi(3))));
  CHECK_THROWS_AS(string_partition(q, 1, "xyz", 1, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("branch weights normalize and derivatives match finite differences") {
  Colex cx = build_torus_colex(3, 3);
  Bipartition bp = Bipartition::from_qubits(cx, cx.plaquette_support(0));
  RegionStats st = region_stats(cx, bp);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> lam(0.3, 3.0), temp(0.2, 6.0);
  for (int trial = 0; trial < 100; ++trial) {
    Couplings cp = make_couplings({lam(rng), lam(rng), lam(rng)}, temp(rng));
    FTerms ft = f_terms(cp, st);
    double sum = 0;
    for (int j = 0; j < 4; ++j)
      sum += std::exp(ft.log_f[size_t(j)] - ft.log_norm);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));

    for (int j = 0; j < 4; ++j) {
      double h = 1e-5;
      double fd = (ft.f(j, 1 + h) - ft.f(j, 1 - h)) / (2 * h);
      CHECK(ft.df(j) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("zero-temperature entropy equals the group-counting constant") {
  Colex cx = build_torus_colex(3, 3);
  Bipartition bp = Bipartition::from_qubits(cx, cx.plaquette_support(0));
  RegionStats st = region_stats(cx, bp);
  Couplings cp = make_couplings({1, 1, 1}, 0);
  CHECK(entanglement_entropy(st, cp).s_total ==
        doctest::Approx(4 * kLn2).epsilon(1e-14));
}

TEST_CASE("high-temperature branch: S_A = (Sigma_AB + Sigma_A - 2 m_A) ln 2") {
  Colex cx = build_torus_colex(3, 3);
  Bipartition bp = Bipartition::from_qubits(cx, cx.plaquette_support(0));
  RegionStats st = region_stats(cx, bp);
  Couplings cp = make_couplings({1, 1, 1}, kPosInf);
  double want = (st.sigma_ab + st.sigma_a_total() - 2 * st.m_a) * kLn2;
  CHECK(entanglement_entropy(st, cp).s_total == doctest::Approx(want).epsilon(1e-14));
  // the generic engine converges to the same constant at large finite T
  Couplings warm = make_couplings({1, 1, 1}, 3000);
  CHECK(entanglement_entropy(st, warm).s_total ==
        doctest::Approx(want).epsilon(1e-4));
}

TEST_CASE("entropy is continuous across the k = 0 branch switch") {
  Colex cx = build_torus_colex(3, 3);
  Bipartition bp = Bipartition::from_qubits(cx, cx.plaquette_support(0));
  RegionStats st = region_stats(cx, bp);
  double s0 = entanglement_entropy(st, make_couplings({1, 1, 1}, 0)).s_total;
  double s_eps = entanglement_entropy(st, make_couplings({1, 1, 1}, 0.02)).s_total;
  CHECK(std::abs(s0 - s_eps) < 1e-10);
}

TEST_CASE("Renyi traces: ordering and monotonicity") {
  Colex cx = build_torus_colex(3, 3);
  Bipartition bp = Bipartition::from_qubits(cx, cx.plaquette_support(0));
  RegionStats st = region_stats(cx, bp);
  Couplings cp = make_couplings({1, 1, 1}, 1);
  CHECK(trace_rho_n(st, cp, 1) == 1.0);
  double t2 = trace_rho_n(st, cp, 2), t3 = trace_rho_n(st, cp, 3),
         t4 = trace_rho_n(st, cp, 4);
  CHECK(t2 < 1);
  CHECK(t3 < t2);
  CHECK(t4 < t3);
  CHECK(-std::log(t2) <= entanglement_entropy(st, cp).s_total);
  CHECK_THROWS_AS(trace_rho_n(st, cp, 0.5), std::invalid_argument);
}

TEST_CASE("mutual information limits on torus(3,3) hexagon") {
  Colex cx = build_torus_colex(3, 3);
  Bipartition bp = Bipartition::from_qubits(cx, cx.plaquette_support(0));
  RegionStats sa = region_stats(cx, bp);
  RegionStats sb = region_stats(cx, bp.complement());
  RegionStats su = whole_system_stats(cx);
  CHECK(mutual_information(sa, sb, su, make_couplings({1, 1, 1}, 0)) ==
        doctest::Approx(4 * kLn2).epsilon(1e-12));
  double want = 0.5 * (sa.sigma_ab - 2 * sa.m_a - 2 * sa.m_b + 2) * kLn2;
  CHECK(mutual_information(sa, sb, su, make_couplings({1, 1, 1}, kPosInf)) ==
        doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("thermodynamic-limit entropy: order-of-limits gap") {
  // N -> infinity first, then T -> 0 keeps only 2(m_B - 1) ln 2 less than
  // the T-first branch for the same annulus.
  for (double n : {300.0, 3000.0}) {
    RegionStats finite = make_annulus_stats(n, 20, 40, false);
    RegionStats at_inf = make_annulus_stats(n, 20, 40, true, true);
    Couplings cold = make_couplings({1, 1, 1}, 1.0 / 50);
    double t_first = entanglement_entropy(finite, cold).s_total;
    double n_first = entropy_thermodynamic_limit(at_inf, cold);
    CHECK(n_first - t_first == doctest::Approx(2 * kLn2).epsilon(1e-4));
  }
}

TEST_CASE("topological entropy: plateaus and two-path agreement") {
  Couplings cold = make_couplings({1, 1, 1}, 1.0 / 50);
  Couplings hot = make_couplings({1, 1, 1}, kPosInf);
  auto st = make_levin_wen_stats(200, 10, 24, false);
  CHECK(topological_entropy(st, cold) == doctest::Approx(4 * kLn2).epsilon(1e-9));
  CHECK(topological_entropy(st, hot) == doctest::Approx(2 * kLn2).epsilon(1e-12));

  std::mt19937 rng(23);
  std::uniform_real_distribution<double> lam(0.3, 3.0), temp(0.3, 8.0);
  std::uniform_int_distribution<int> inner(2, 30), ann(8, 40);
  for (int trial = 0; trial < 100; ++trial) {
    auto stats = make_levin_wen_stats(500, inner(rng), 4 * (ann(rng) / 4), false);
    Couplings cp = make_couplings({lam(rng), lam(rng), lam(rng)}, temp(rng));
    double composed = topological_entropy(stats, cp);  // throws if paths split
    double transcribed = topological_entropy_transcription(stats, cp);
    CHECK(std::abs(composed - transcribed) <= 1e-9);
  }
}

TEST_CASE("S_topo(T) is nonincreasing on a fixed geometry") {
  Colex cx = build_torus_colex(9, 9);
  TopoBipartitions tb = canonical_topo_bipartitions(cx, 3, 1);
  double prev = kPosInf;
  for (double t = 0.2; t <= 60; t *= 1.5) {
    double s = topological_entropy(tb.stats, make_couplings({1, 1, 1}, t));
    CHECK(s <= prev + 1e-12);
    prev = s;
  }
}

TEST_CASE("hard-color plateaus of the large-size limit") {
  // two hard colors (r, b): half the drop; one hard color (b): full drop
  auto st = make_levin_wen_stats(5e4 + 2048, 5e4, 64, true);
  Couplings two_hard = make_couplings({kPosInf, 1, kPosInf}, 1);
  CHECK(topo_color_limits(st, two_hard) ==
        doctest::Approx(4 * kLn2 - kLn2).epsilon(1e-3));
  Couplings one_hard = make_couplings({1, 1, kPosInf}, 1);
  CHECK(topo_color_limits(st, one_hard) ==
        doctest::Approx(4 * kLn2 - 2 * kLn2).epsilon(1e-3));
  Couplings no_hard = make_couplings({1, 1, 1}, 1);
  CHECK_THROWS_AS(topo_color_limits(st, no_hard), std::invalid_argument);
}

TEST_CASE("t_drop pinned value and preconditions") {
  CHECK(t_drop(1, 300) == doctest::Approx(0.31265).epsilon(1e-4));
  CHECK(t_drop(2, 300) == doctest::Approx(2 * t_drop(1, 300)).epsilon(1e-12));
  CHECK_THROWS_AS(t_drop(0, 300), std::invalid_argument);
  CHECK_THROWS_AS(t_drop(1, 1), std::invalid_argument);
  CHECK(zeta(1, 0.5) == doctest::Approx(std::exp(2.0)));
}

TEST_CASE("unsupported coupling combinations are rejected") {
  Colex cx = build_torus_colex(3, 3);
  Bipartition bp = Bipartition::from_qubits(cx, cx.plaquette_support(0));
  RegionStats st = region_stats(cx, bp);
  Couplings mixed = make_couplings({0, 1, 1}, 1);  // k_r = inf, others finite
  CHECK_THROWS_AS(entanglement_entropy(st, mixed), std::invalid_argument);
  CHECK_THROWS_AS(f_terms(mixed, st), std::invalid_argument);
  CHECK_THROWS_AS(
      entropy_thermodynamic_limit(st, make_couplings({1, 1, 1}, kPosInf)),
      std::invalid_argument);
}
