#pragma once

#include <utility>
#include <vector>

#include "cgk/poly.hpp"

namespace cgk {

// Integer polynomial, ascending coefficients, trimmed.
using ZPoly = std::vector<Int>;

struct QFactorization {
  Rat unit;  // f = unit * prod(factor^mult)
  // Primitive integer factors with positive leading coefficient, sorted.
  std::vector<std::pair<ZPoly, int>> factors;
};

// Complete factorization of a nonzero polynomial over Q into irreducibles
// (Yun squarefree split, Cantor-Zassenhaus mod p, Hensel lifting, subset
// recombination).
QFactorization factor_over_q(const QPoly& f);

QPoly to_qpoly(const ZPoly& z);
ZPoly primitive_zpoly(const QPoly& f);  // positive leading coefficient
bool is_irreducible_over_q(const QPoly& f);

}  // namespace cgk
