#include "colorcode/colex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace colorcode {

const char* color_name(Color c) {
  switch (c) {
    case Color::Red: return "red";
    case Color::Green: return "green";
    case Color::Blue: return "blue";
  }
  return "?";
}

namespace {

int imod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

int Colex::qubit_id(int u, int v, int s) const {
  return 2 * (imod(u, lu) * lv + imod(v, lv)) + s;
}

int Colex::plaquette_id(int u, int v) const {
  return imod(u, lu) * lv + imod(v, lv);
}

const std::vector<int>& Colex::plaquette_support(int id) const {
  if (id < 0 || id >= int(plaquettes.size()))
    throw std::out_of_range("plaquette id " + std::to_string(id) +
                            " out of range [0," +
                            std::to_string(plaquettes.size()) + ")");
  return plaquettes[size_t(id)].support;
}

Colex build_torus_colex(int lu, int lv) {
  if (lu < 3 || lv < 3 || lu % 3 != 0 || lv % 3 != 0)
    throw std::invalid_argument(
        "torus dimensions must be >= 3 and multiples of 3 (the (u-v) mod 3 "
        "plaquette coloring does not close otherwise); got " +
        std::to_string(lu) + "x" + std::to_string(lv));

  Colex cx;
  cx.boundary_kind = BoundaryKind::Torus;
  cx.lu = lu;
  cx.lv = lv;
  cx.num_qubits = 2 * lu * lv;
  cx.n_per_color = lu * lv / 3;

  // One hexagon per cell (u,v), two qubit sublattices A=0, B=1.  The
  // boundary walk below visits the six vertices in cyclic order.
  for (int u = 0; u < lu; ++u) {
    for (int v = 0; v < lv; ++v) {
      Plaquette p;
      p.id = cx.plaquette_id(u, v);
      p.color = Color(imod(u - v, 3));
      p.support = {cx.qubit_id(u, v, 0),     cx.qubit_id(u, v, 1),
                   cx.qubit_id(u + 1, v, 0), cx.qubit_id(u + 1, v - 1, 1),
                   cx.qubit_id(u + 1, v - 1, 0), cx.qubit_id(u, v - 1, 1)};
      cx.plaquettes.push_back(std::move(p));
    }
  }
  std::sort(cx.plaquettes.begin(), cx.plaquettes.end(),
            [](const Plaquette& a, const Plaquette& b) { return a.id < b.id; });

  // Three links per A-vertex cover every edge exactly once.
  for (int u = 0; u < lu; ++u) {
    for (int v = 0; v < lv; ++v) {
      cx.links.push_back(
          {cx.qubit_id(u, v, 0), cx.qubit_id(u, v, 1), Color(imod(u - v + 2, 3))});
      cx.links.push_back(
          {cx.qubit_id(u, v, 0), cx.qubit_id(u - 1, v, 1), Color(imod(u - v, 3))});
      cx.links.push_back(
          {cx.qubit_id(u, v, 0), cx.qubit_id(u, v - 1, 1), Color(imod(u - v + 1, 3))});
    }
  }
  cx.border_qubit.assign(size_t(cx.num_qubits), 0);
  return cx;
}

Colex build_triangular_colex(int size) {
  if (size != 1)
    throw std::invalid_argument(
        "unsupported triangular code size " + std::to_string(size) +
        "; available sizes: 1");

  // The 7-qubit code: three quadrilateral plaquettes meeting at the central
  // qubit 2, corners 0, 4, 6, and three colored borders.
  Colex cx;
  cx.boundary_kind = BoundaryKind::PlanarTriangular;
  cx.family_size = 1;
  cx.num_qubits = 7;
  cx.n_per_color = 1;
  cx.plaquettes = {
      {0, Color::Red, {0, 1, 2, 3}},
      {1, Color::Green, {1, 4, 5, 2}},
      {2, Color::Blue, {2, 5, 6, 3}},
  };
  cx.links = {
      {1, 2, Color::Blue},  {2, 3, Color::Green}, {2, 5, Color::Red},
      {0, 1, Color::Green}, {1, 4, Color::Red},   {4, 5, Color::Blue},
      {5, 6, Color::Green}, {3, 6, Color::Red},   {0, 3, Color::Blue},
  };
  cx.border_qubit = {1, 1, 0, 1, 1, 1, 1};
  return cx;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(int n) { return Bits(size_t((n + 63) / 64), 0); }

void flip_bit(Bits& b, int i) { b[size_t(i) / 64] ^= (std::uint64_t(1) << (i % 64)); }

bool get_bit(const Bits& b, int i) {
  return (b[size_t(i) / 64] >> (i % 64)) & 1;
}

// GF(2) rank of the plaquette-support matrix.
int gf2_rank(std::vector<Bits> rows) {
  int rank = 0;
  size_t words = rows.empty() ? 0 : rows[0].size();
  for (size_t w = 0; w < words; ++w) {
    for (int bit = 0; bit < 64; ++bit) {
      std::uint64_t mask = std::uint64_t(1) << bit;
      size_t pivot = rows.size();
      for (size_t r = size_t(rank); r < rows.size(); ++r) {
        if (rows[r][w] & mask) { pivot = r; break; }
      }
      if (pivot == rows.size()) continue;
      std::swap(rows[size_t(rank)], rows[pivot]);
      for (size_t r = 0; r < rows.size(); ++r) {
        if (int(r) != rank && (rows[r][w] & mask)) {
          for (size_t ww = 0; ww < words; ++ww) rows[r][ww] ^= rows[size_t(rank)][ww];
        }
      }
      ++rank;
    }
  }
  return rank;
}

void add_check(ValidationReport& rep, const std::string& name, bool pass,
               const std::string& detail = "") {
  rep.checks.push_back({name, pass, detail});
}

}  // namespace

bool ValidationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "pass" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

ValidationReport validate(const Colex& cx) {
  ValidationReport rep;
  bool torus = cx.boundary_kind == BoundaryKind::Torus;
  int nq = cx.num_qubits;

  // vertex degrees from links
  {
    std::vector<int> deg(size_t(nq), 0);
    bool ok = true;
    for (const auto& l : cx.links) {
      if (l.a < 0 || l.a >= nq || l.b < 0 || l.b >= nq) { ok = false; continue; }
      ++deg[size_t(l.a)];
      ++deg[size_t(l.b)];
    }
    int bad = 0;
    for (int q = 0; q < nq; ++q) {
      if (torus ? deg[size_t(q)] != 3 : (deg[size_t(q)] != 3 && deg[size_t(q)] != 2))
        ++bad;
    }
    add_check(rep, "vertex degree 3 (planar: 3 or 2 on corners)", ok && bad == 0,
              bad ? std::to_string(bad) + " bad vertices" : "");
  }

  // qubit membership in plaquettes
  {
    std::vector<std::array<int, 3>> count(size_t(nq), {0, 0, 0});
    for (const auto& p : cx.plaquettes)
      for (int q : p.support) ++count[size_t(q)][size_t(int(p.color))];
    int bad = 0;
    for (int q = 0; q < nq; ++q) {
      for (int c = 0; c < 3; ++c) {
        int expect_max = 1;
        int got = count[size_t(q)][size_t(c)];
        if (torus ? got != 1 : got > expect_max) ++bad;
      }
    }
    add_check(rep, "each qubit in at most one plaquette per color (torus: exactly one)",
              bad == 0, bad ? std::to_string(bad) + " violations" : "");
  }

  // pairwise even overlaps + adjacency coloring
  {
    bool even_ok = true, color_ok = true;
    for (size_t i = 0; i < cx.plaquettes.size(); ++i) {
      std::set<int> si(cx.plaquettes[i].support.begin(), cx.plaquettes[i].support.end());
      for (size_t j = i + 1; j < cx.plaquettes.size(); ++j) {
        int overlap = 0;
        for (int q : cx.plaquettes[j].support) overlap += si.count(q);
        if (overlap % 2 != 0) even_ok = false;
        if (overlap > 0 && cx.plaquettes[i].color == cx.plaquettes[j].color)
          color_ok = false;
      }
    }
    add_check(rep, "plaquette supports overlap evenly", even_ok);
    add_check(rep, "adjacent plaquettes never share a color", color_ok);
  }

  // link coloring: plaquettes containing exactly one endpoint carry the link
  // color; plaquettes containing both endpoints carry a different color.
  {
    bool ok = true;
    std::string detail;
    for (const auto& l : cx.links) {
      int n_one = 0, n_two = 0;
      for (const auto& p : cx.plaquettes) {
        bool ha = std::count(p.support.begin(), p.support.end(), l.a) != 0;
        bool hb = std::count(p.support.begin(), p.support.end(), l.b) != 0;
        if (ha && hb) {
          ++n_two;
          if (p.color == l.color) ok = false;
        } else if (ha || hb) {
          ++n_one;
          if (p.color != l.color) ok = false;
        }
      }
      if (torus && (n_one != 2 || n_two != 2)) ok = false;
      if (!ok && detail.empty())
        detail = "link " + std::to_string(l.a) + "-" + std::to_string(l.b);
    }
    add_check(rep, "c-link connects c-plaquettes", ok, detail);
  }

  if (torus) {
    std::array<int, 3> per_color = {0, 0, 0};
    for (const auto& p : cx.plaquettes) ++per_color[size_t(int(p.color))];
    bool balanced = per_color[0] == cx.n_per_color &&
                    per_color[1] == cx.n_per_color && per_color[2] == cx.n_per_color;
    add_check(rep, "torus: N plaquettes per color, 3N total",
              balanced && int(cx.plaquettes.size()) == 3 * cx.n_per_color);
    add_check(rep, "torus: qubit count = 2*(3N)", nq == 6 * cx.n_per_color);

    std::array<Bits, 3> prod = {make_bits(nq), make_bits(nq), make_bits(nq)};
    for (const auto& p : cx.plaquettes)
      for (int q : p.support) flip_bit(prod[size_t(int(p.color))], q);
    add_check(rep, "torus: per-color total products coincide",
              prod[0] == prod[1] && prod[1] == prod[2]);
  } else {
    std::vector<Bits> rows;
    for (const auto& p : cx.plaquettes) {
      Bits b = make_bits(nq);
      for (int q : p.support) flip_bit(b, q);
      rows.push_back(std::move(b));
    }
    int rank = gf2_rank(rows);
    add_check(rep, "planar: all plaquette operators independent",
              rank == int(cx.plaquettes.size()),
              "rank " + std::to_string(rank));
    add_check(rep, "planar: one encoded qubit",
              nq - 2 * int(cx.plaquettes.size()) == 1);
    bool border_ok = int(cx.border_qubit.size()) == nq;
    add_check(rep, "planar: border flags sized", border_ok);
  }

  return rep;
}

std::string dump_lattice_json(const Colex& cx) {
  std::ostringstream os;
  os << "{\n  \"boundary_kind\": \""
     << (cx.boundary_kind == BoundaryKind::Torus ? "torus" : "planar_triangular")
     << "\",\n  \"num_qubits\": " << cx.num_qubits << ",\n  \"plaquettes\": [";
  for (size_t i = 0; i < cx.plaquettes.size(); ++i) {
    const auto& p = cx.plaquettes[i];
    os << (i ? ",\n    " : "\n    ") << "{\"id\": " << p.id << ", \"color\": \""
       << color_name(p.color) << "\", \"support\": [";
    for (size_t j = 0; j < p.support.size(); ++j)
      os << (j ? "," : "") << p.support[j];
    os << "]}";
  }
  os << "\n  ],\n  \"links\": [";
  for (size_t i = 0; i < cx.links.size(); ++i) {
    const auto& l = cx.links[i];
    os << (i ? ",\n    " : "\n    ") << "{\"a\": " << l.a << ", \"b\": " << l.b
       << ", \"color\": \"" << color_name(l.color) << "\"}";
  }
  os << "\n  ]\n}\n";
  return os.str();
}

}  // namespace colorcode
