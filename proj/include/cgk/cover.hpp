#pragma once

#include <optional>
#include <vector>

#include "cgk/matrix.hpp"
#include "cgk/modular.hpp"

namespace cgk {

// Finite abelian group given as a direct sum of cyclic groups Z/n_i (the n_i
// need not form a divisibility chain) with a symmetric Q/Z-valued pairing
// and an automorphism T. Pairing values are stored as numerators over the
// group exponent N: lk(g_i, g_j) = gram[i][j] / N mod 1.
struct LinkingForm {
  std::vector<i64> factors;
  i64 exponent = 1;
  std::vector<ModRow> gram;
  std::vector<ModRow> deck;  // T g_j = sum_i deck[i][j] g_i

  static LinkingForm make(std::vector<i64> factors, const std::vector<std::vector<Rat>>& gram,
                          std::vector<ModRow> deck);
  std::size_t rank() const { return factors.size(); }
  i64 order() const;
  Rat value(std::size_t i, std::size_t j) const;
  // Numerator over N of lk(x, y) for coordinate vectors.
  i64 pair(const ModRow& x, const ModRow& y) const;
  ModRow apply_deck(const ModRow& x) const;
  ModRow reduce(ModRow x) const;
};

struct CoverHomology {
  int degree = 0;
  IntMatrix presentation;          // H_1(M_d) = coker(presentation)
  std::vector<Int> invariant_factors;  // nontrivial, divisibility chain
  Int order;
  // Smith data of the presentation; nontrivial coordinates listed in `active`.
  IntMatrix left, left_inv, right;
  std::vector<Int> diag;
  std::vector<std::size_t> active;
  std::vector<ModRow> deck;  // on the SNF generators, row i reduced mod n_i
};

// Symmetric presentation of H_1 of the d-fold branched cover (block form of
// the intersection form of the branched cover of the 4-ball).
IntMatrix cover_presentation(const IntMatrix& v, int d);
// Block deck map a_i -> a_{i+1}, a_{d-1} -> -(a_1 + ... + a_{d-1}).
IntMatrix block_deck(std::size_t n, int d);
// Alternative presentation Gamma^d - (Gamma - 1)^d, Gamma = (V - V^T)^{-1} V.
IntMatrix gamma_presentation(const IntMatrix& v, int d);

CoverHomology branched_cover(const IntMatrix& v, int d);
LinkingForm linking_form(const CoverHomology& h);
LinkingForm linking_form(const IntMatrix& v, int d);

// Checks symmetry, nonsingularity and deck invariance; throws
// InternalInvariantViolation on failure.
void validate_linking_form(const LinkingForm& l);
bool is_nonsingular(const LinkingForm& l);

LinkingForm direct_sum(const LinkingForm& a, const LinkingForm& b);
LinkingForm negate(const LinkingForm& l);
// The p-primary summand, on generators (n_i / p^{e_i}) g_i.
LinkingForm primary_part(const LinkingForm& l, i64 p);

// Brute-force search for a form-preserving isomorphism; returns the images
// of the generators of `a` in coordinates of `b`.
std::optional<std::vector<ModRow>> find_isometry(const LinkingForm& a, const LinkingForm& b,
                                                 bool respect_deck = false);

struct CharSpace {
  i64 p = 0;
  std::vector<std::size_t> coords;  // generator indices with p | n_i
  std::vector<ModRow> basis;        // spans the space, rows of length coords.size()
  struct Eigen {
    i64 lambda;
    std::vector<ModRow> basis;  // rows of length coords.size()
  };
  std::vector<Eigen> eigen;
  bool diagonalizable = true;
  std::size_t ambient() const { return coords.size(); }
  std::size_t dim() const { return basis.size(); }
  // Embed a coordinate row into full generator coordinates.
  ModRow embed(const ModRow& c, std::size_t rank) const;
};

CharSpace char_space(const std::vector<i64>& factors, const std::vector<ModRow>& deck, i64 p);
CharSpace char_space(const CoverHomology& h, i64 p);
CharSpace char_space(const LinkingForm& l, i64 p);

struct DualForm {
  i64 modulus = 1;              // p^e
  bool eigen_basis = false;
  std::vector<i64> eigenvalues;  // per basis element (empty unless eigen_basis)
  std::vector<ModRow> basis;     // characters as rows over Z/p^e on primary generators
  std::vector<ModRow> gram;      // lk*(basis_a, basis_b) * p^e mod p^e
};
DualForm dual_linking(const LinkingForm& l, i64 p);

}  // namespace cgk
