#include "colorcode/cli_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "colorcode/thermo.hpp"

namespace colorcode {

namespace {

[[noreturn]] void parse_fail(const std::string& spec, size_t pos,
                             const std::string& what) {
  throw std::invalid_argument("cannot parse '" + spec + "' at position " +
                              std::to_string(pos) + ": " + what);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

int to_int(const std::string& spec, const std::string& tok) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    parse_fail(spec, spec.find(tok), "expected an integer, got '" + tok + "'");
  }
}

double to_double(const std::string& spec, const std::string& tok) {
  try {
    size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    parse_fail(spec, spec.find(tok), "expected a number, got '" + tok + "'");
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

Colex parse_lattice(const std::string& spec) {
  size_t colon = spec.find(':');
  if (colon == std::string::npos)
    parse_fail(spec, spec.size(), "expected 'torus:LUxLV' or 'triangular:SIZE'");
  std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "torus") {
    size_t x = arg.find('x');
    if (x == std::string::npos)
      parse_fail(spec, colon + 1, "expected dimensions 'LUxLV'");
    return build_torus_colex(to_int(spec, arg.substr(0, x)),
                             to_int(spec, arg.substr(x + 1)));
  }
  if (kind == "triangular") return build_triangular_colex(to_int(spec, arg));
  parse_fail(spec, 0, "unknown lattice kind '" + kind + "'");
}

RegionSpec parse_region(const std::string& spec) {
  size_t colon = spec.find(':');
  if (colon == std::string::npos)
    parse_fail(spec, spec.size(),
               "expected 'hexagon:ID', 'annulus:R,r', 'levinwen:R,r' or "
               "'qubits:...'");
  std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  RegionSpec rs;
  if (kind == "hexagon") {
    rs.kind = RegionKind::Hexagon;
    rs.outer = to_int(spec, arg);
    return rs;
  }
  if (kind == "annulus" || kind == "levinwen") {
    rs.kind = kind == "annulus" ? RegionKind::Annulus : RegionKind::LevinWen;
    auto parts = split(arg, ',');
    if (parts.size() != 2) parse_fail(spec, colon + 1, "expected 'R,r'");
    rs.outer = to_int(spec, parts[0]);
    rs.inner = to_int(spec, parts[1]);
    return rs;
  }
  if (kind == "qubits") {
    rs.kind = RegionKind::Qubits;
    for (const auto& tok : split(arg, ','))
      rs.qubits.push_back(to_int(spec, tok));
    if (rs.qubits.empty()) parse_fail(spec, colon + 1, "empty qubit list");
    return rs;
  }
  parse_fail(spec, 0, "unknown region kind '" + kind + "'");
}

std::vector<double> parse_grid(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.size() != 3) parse_fail(spec, 0, "expected 'start:stop:step'");
  double a = to_double(spec, parts[0]), b = to_double(spec, parts[1]),
         step = to_double(spec, parts[2]);
  if (step <= 0) parse_fail(spec, 0, "step must be > 0");
  std::vector<double> out;
  for (double t = a; t <= b + step * 1e-9; t += step) out.push_back(t);
  if (out.empty()) parse_fail(spec, 0, "empty grid (start > stop)");
  return out;
}

std::array<double, 3> parse_lambda(const std::string& spec) {
  auto parts = split(spec, ',');
  if (parts.size() != 3) parse_fail(spec, 0, "expected 'R,B,G'");
  std::array<double, 3> lam;
  lam[size_t(int(Color::Red))] = to_double(spec, parts[0]);
  lam[size_t(int(Color::Blue))] = to_double(spec, parts[1]);
  lam[size_t(int(Color::Green))] = to_double(spec, parts[2]);
  for (double v : lam)
    if (!(v > 0)) parse_fail(spec, 0, "lambda values must be positive");
  return lam;
}

namespace {

std::array<double, 3> effective_lambda(const SweepConfig& cfg) {
  std::array<double, 3> lam = cfg.lambda_x;
  for (Color c : cfg.hard_colors) lam[size_t(int(c))] = kPosInf;
  return lam;
}

Bipartition region_bipartition(const Colex& cx, const RegionSpec& rs) {
  switch (rs.kind) {
    case RegionKind::Hexagon: {
      if (rs.outer < 0 || rs.outer >= int(cx.plaquettes.size()))
        throw std::invalid_argument("hexagon id out of range");
      return Bipartition::from_qubits(cx, cx.plaquette_support(rs.outer));
    }
    case RegionKind::Annulus:
      return annulus_bipartition(cx, rs.outer, rs.inner);
    case RegionKind::Qubits:
      return Bipartition::from_qubits(cx, rs.qubits);
    default:
      throw std::invalid_argument(
          "levinwen regions only make sense for sweep's S_topo output");
  }
}

// K-Sigma mode: hold T fixed and scale the inner-region plaquette count so
// that sum_c k_c Sigma_inner^c equals the requested grid value.
std::vector<SweepRow> run_ksigma(const SweepConfig& cfg) {
  double t = cfg.temps.empty() ? 1.0 : cfg.temps.front();
  std::vector<SweepRow> rows;
  for (double s : cfg.ksigma) {
    Couplings cp = make_couplings(effective_lambda(cfg), t);
    double ksum = cp.k[0] + cp.k[1] + cp.k[2];
    if (!(ksum > 0) || !cp.all_k_finite())
      throw std::invalid_argument(
          "K-Sigma sweep needs at least one finite nonzero coupling");
    if (!(s > 0))
      throw std::invalid_argument("K-Sigma grid values must be positive");
    double sigma = s / ksum;  // per-color inner plaquette count
    // n only pads the bookkeeping counts; the at_infinity components make
    // the evaluation independent of it.
    auto st = make_levin_wen_stats(sigma + 2048, sigma, /*annulus=*/64,
                                   /*outer_at_infinity=*/true);
    SweepRow row;
    row.temperature = t;
    row.k = cp.k;
    row.s_a = entropy_thermodynamic_limit(st[0], cp);
    row.s_topo = topological_entropy(st, cp);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  if (!cfg.ksigma.empty()) return run_ksigma(cfg);
  if (cfg.temps.empty()) throw std::invalid_argument("empty temperature grid");
  Colex cx = parse_lattice(cfg.lattice);
  RegionSpec rs = parse_region(cfg.region);
  std::array<double, 3> lam = effective_lambda(cfg);

  std::vector<SweepRow> rows;
  if (rs.kind == RegionKind::LevinWen) {
    TopoBipartitions tb = canonical_topo_bipartitions(cx, rs.outer, rs.inner);
    for (double t : cfg.temps) {
      Couplings cp = make_couplings(lam, t);
      SweepRow row;
      row.temperature = t;
      row.k = cp.k;
      row.s_a = entanglement_entropy(tb.stats[0], cp).s_total;
      row.s_topo = topological_entropy(tb.stats, cp);
      rows.push_back(row);
    }
    return rows;
  }
  Bipartition bp = region_bipartition(cx, rs);
  RegionStats st = region_stats(cx, bp);
  for (double t : cfg.temps) {
    Couplings cp = make_couplings(lam, t);
    SweepRow row;
    row.temperature = t;
    row.k = cp.k;
    row.s_a = entanglement_entropy(st, cp).s_total;
    rows.push_back(row);
  }
  return rows;
}

std::vector<SweepRow> run_mutual(const SweepConfig& cfg) {
  if (cfg.temps.empty()) throw std::invalid_argument("empty temperature grid");
  Colex cx = parse_lattice(cfg.lattice);
  RegionSpec rs = parse_region(cfg.region);
  if (rs.kind == RegionKind::LevinWen)
    throw std::invalid_argument("mutual information needs a plain region");
  std::array<double, 3> lam = effective_lambda(cfg);
  Bipartition bp = region_bipartition(cx, rs);
  RegionStats sa = region_stats(cx, bp);
  RegionStats sb = region_stats(cx, bp.complement());
  RegionStats su = whole_system_stats(cx);

  std::vector<SweepRow> rows;
  for (double t : cfg.temps) {
    Couplings cp = make_couplings(lam, t);
    SweepRow row;
    row.temperature = t;
    row.k = cp.k;
    row.s_a = entanglement_entropy(sa, cp).s_total;
    row.i_ab = mutual_information(sa, sb, su, cp);
    rows.push_back(row);
  }
  return rows;
}

std::string format_rows_csv(const std::vector<SweepRow>& rows) {
  const double ln2 = std::log(2.0);
  std::string out =
      "T,k_r,k_b,k_g,S_A_nats,S_A_ln2,S_topo_nats,S_topo_ln2,I_AB_nats\n";
  for (const auto& r : rows) {
    out += fmt(r.temperature);
    out += ',' + fmt(r.k[size_t(int(Color::Red))]);
    out += ',' + fmt(r.k[size_t(int(Color::Blue))]);
    out += ',' + fmt(r.k[size_t(int(Color::Green))]);
    out += ',';
    if (r.s_a) out += fmt(*r.s_a) + ',' + fmt(*r.s_a / ln2);
    else out += ",";
    out += ',';
    if (r.s_topo) out += fmt(*r.s_topo) + ',' + fmt(*r.s_topo / ln2);
    else out += ",";
    out += ',';
    if (r.i_ab) out += fmt(*r.i_ab);
    out += '\n';
  }
  return out;
}

std::string format_rows_json(const std::vector<SweepRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  const double ln2 = std::log(2.0);
  for (const auto& r : rows) {
    nlohmann::json row;
    row["T"] = r.temperature;
    row["k_r"] = r.k[size_t(int(Color::Red))];
    row["k_b"] = r.k[size_t(int(Color::Blue))];
    row["k_g"] = r.k[size_t(int(Color::Green))];
    if (r.s_a) {
      row["S_A_nats"] = *r.s_a;
      row["S_A_ln2"] = *r.s_a / ln2;
    }
    if (r.s_topo) {
      row["S_topo_nats"] = *r.s_topo;
      row["S_topo_ln2"] = *r.s_topo / ln2;
    }
    if (r.i_ab) row["I_AB_nats"] = *r.i_ab;
    arr.push_back(row);
  }
  return arr.dump(2) + "\n";
}

}  // namespace colorcode
