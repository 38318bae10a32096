#pragma once

#include <string>
#include <vector>

#include "cgk/matrix.hpp"
#include "cgk/modular.hpp"

namespace cgk {

// Oriented knot diagram in Wirtinger form. Arcs are 0..arcs-1; at each
// crossing the under-strand passes from arc `in` to arc `out` beneath arc
// `over`.
struct Crossing {
  std::size_t over = 0, in = 0, out = 0;
  int sign = 1;
};

struct Diagram {
  std::size_t arcs = 1;
  std::vector<Crossing> crossings;
};

// Grammar (whitespace and commas between crossings are ignored):
//   code     := [ "PD" "[" ] { crossing } [ "]" ]
//   crossing := "X" "[" int "," int "," int "," int "]" [ "+" | "-" ]
// X[i,j,k,l] lists the edges at a crossing counterclockwise starting from
// the incoming under-edge i; k is the outgoing under-edge and j, l are the
// over-edges. Without a suffix the sign is read from the over-edge labels
// (positive when j = l + 1 cyclically).
Diagram parse_pd(const std::string& text);
void validate_diagram(const Diagram& d);

// Connected sum along arc 0 of each diagram.
Diagram connected_sum(const Diagram& a, const Diagram& b);
// Reidemeister I kink on arc x with the given crossing sign.
Diagram add_kink(const Diagram& d, std::size_t x, int sign);

// <t, r | t^d = 1, r^n = 1, t r t^-1 = r^q>.
struct MetacyclicGroup {
  i64 d = 2, n = 3, q = -1;
  void validate() const;
  static MetacyclicGroup dihedral(i64 n) { return {2, n, -1}; }
};

// Meridians go to r^{b_i} t. With overstrand i and understrand j -> k the
// labels satisfy b_k = q^e b_j + (1 - q^e) b_i, e the crossing sign.
IntMatrix relation_matrix(const Diagram& d, const MetacyclicGroup& g);

struct LabelingSpace {
  i64 n = 0;
  Int size;                       // number of labelings
  std::vector<i64> module;        // kernel as sum of Z/m (nontrivial m)
  std::vector<i64> mod_translation;  // quotient by constant labelings
  Int classes_mod_translation;
  // Nonzero classes modulo translation, up to multiplication by units of
  // Z/n; -1 when the quotient was too large to scan.
  long classes_up_to_scaling = -1;
};
LabelingSpace labeling_space(const Diagram& d, const MetacyclicGroup& g, std::size_t budget = 1000000);

// Labelings modulo translation as a Z/n-module (n a prime power).
std::vector<i64> classify_characters(const Diagram& d, const MetacyclicGroup& g);

}  // namespace cgk
