#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cgk/cover.hpp"

namespace cgk {

inline constexpr std::size_t kDefaultBudget = 1000000;

// Subgroups of a finite abelian group sum Z/n_i are carried in canonical
// form: the Howell form of the generators after embedding Z/n_i into Z/N by
// x -> (N/n_i) x, N the exponent. Two generator sets span the same subgroup
// exactly when their canonical forms agree.
struct Subgroup {
  std::vector<ModRow> howell;      // embedded coordinates over Z/N
  std::vector<ModRow> generators;  // the same rows in group coordinates
  i64 order = 1;

  bool operator==(const Subgroup& o) const { return howell == o.howell; }
  bool operator<(const Subgroup& o) const { return howell < o.howell; }
};

Subgroup span(const std::vector<i64>& factors, const std::vector<ModRow>& gens);
bool contains(const std::vector<i64>& factors, const Subgroup& h, const ModRow& x);
// All elements of the subgroup, each exactly once.
std::vector<ModRow> elements(const std::vector<i64>& factors, const Subgroup& h,
                             std::size_t budget = kDefaultBudget);

using Metabolizer = Subgroup;

// Checks lk(A, A) = 0 and |A|^2 = |G| (and T A = A when asked).
bool is_metabolizer(const LinkingForm& l, const Subgroup& a, bool require_invariant = false);

// Every metabolizer (every T-invariant one when invariant_only), sorted by
// canonical form. The budget caps the number of stored cyclic candidates
// plus visited subgroups; the raw element scan of each primary part is
// capped at 16 * budget. Throws BudgetExceeded beyond either.
std::vector<Metabolizer> enumerate_metabolizers(const LinkingForm& l, bool invariant_only,
                                                std::size_t budget = kDefaultBudget);

// Given a metabolizer A of G1 + G2 and a metabolizer A1 of G1, returns
// {g in G2 : (g1, g) in A for some g1 in A1}.
Metabolizer project_metabolizer(const LinkingForm& g1, const LinkingForm& g2, const Metabolizer& a,
                                const Metabolizer& a1, std::size_t budget = kDefaultBudget);

// Z/p-valued characters vanishing on A, split along the deck eigenspaces
// when A is T-invariant.
CharSpace vanishing_chars(const LinkingForm& l, const Subgroup& a, i64 p);

// An odd vector (odd number of nonzero coordinates) in the row span of
// `basis` over Z/p, or nullopt when none exists.
std::optional<ModRow> find_odd_char(const std::vector<ModRow>& basis, std::size_t n, i64 p);
bool is_odd(const ModRow& v);

struct DiagonalLemmaReport {
  i64 p = 0;
  int k = 0;
  std::size_t total = 0;
  std::size_t nonsingular = 0;
  std::size_t without_odd = 0;
  std::size_t permuted_diagonal = 0;
  std::size_t counterexamples = 0;
  bool exhaustive = true;
};
// For every nonsingular k x k matrix E over Z/p whose (I E) row span has no
// odd vector, checks E = diagonal * column permutation.
DiagonalLemmaReport check_diagonal_lemma(i64 p, int k, std::size_t budget = kDefaultBudget);
bool is_permuted_diagonal(const std::vector<ModRow>& e);

// sum_i eps_i a_i b_i = 0 mod p.
bool admissible_pair(const ModRow& a, const ModRow& b, const std::vector<int>& eps, i64 p = 7);

}  // namespace cgk
