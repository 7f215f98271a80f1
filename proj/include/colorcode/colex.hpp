#ifndef COLORCODE_COLEX_HPP
#define COLORCODE_COLEX_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace colorcode {

// Plaquette colors. bar() cycles r -> g -> b -> r.
enum class Color : int { Red = 0, Green = 1, Blue = 2 };

constexpr Color bar(Color c) { return Color((int(c) + 1) % 3); }
constexpr Color bar2(Color c) { return Color((int(c) + 2) % 3); }
const char* color_name(Color c);

enum class BoundaryKind { Torus, PlanarTriangular };

struct Plaquette {
  int id = -1;
  Color color = Color::Red;
  std::vector<int> support;  // qubit indices around the plaquette
};

struct Link {
  int a = -1;
  int b = -1;
  Color color = Color::Red;
};

// A 2-colex: trivalent lattice with three-colored plaquettes, qubits on
// vertices. Immutable after construction.
struct Colex {
  BoundaryKind boundary_kind = BoundaryKind::Torus;
  int lu = 0, lv = 0;      // torus wrap lengths (hexagon grid)
  int family_size = 0;     // planar family index
  int num_qubits = 0;
  int n_per_color = 0;     // N (torus); planar codes need not be balanced
  std::vector<Plaquette> plaquettes;
  std::vector<Link> links;
  std::vector<char> border_qubit;  // planar: qubit lies on a lattice border

  // torus helpers: qubit id for hexagon cell (u,v), sublattice s in {0,1}
  int qubit_id(int u, int v, int s) const;
  int plaquette_id(int u, int v) const;

  const std::vector<int>& plaquette_support(int id) const;
};

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass() const;
  std::string summary() const;
};

// lu, lv must be positive multiples of 3 so the (u - v) mod 3 coloring
// closes around both handles.
Colex build_torus_colex(int lu, int lv);

// Triangular planar color codes with three colored borders, one encoded
// qubit. Shipped family: size 1 (7-qubit code).
Colex build_triangular_colex(int size);

ValidationReport validate(const Colex& colex);

// JSON dump of plaquettes, links and boundary kind.
std::string dump_lattice_json(const Colex& colex);

}  // namespace colorcode

#endif
