#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgk/cover.hpp"
#include "cgk/knotspec.hpp"
#include "cgk/metab.hpp"
#include "cgk/poly.hpp"
#include "cgk/seifert.hpp"

namespace cgk {

// Class of the sequence (c * 2^k)_k modulo bounded sequences.
struct SigGrowth {
  Rat coefficient = 0;
  bool is_zero() const { return coefficient == 0; }
  bool operator==(const SigGrowth& o) const { return coefficient == o.coefficient; }
};
SigGrowth sig_add(const SigGrowth& x, const SigGrowth& y);
// Tying J into a curve whose chosen lift carries character value `value`
// (mod p) adds sigma_{value/p}(J) to the growth coefficient.
SigGrowth satellite_sigma(const SigGrowth& base, const IntMatrix& j, i64 value, i64 p);

// Formal discriminant: opaque self-conjugate residual tokens times shifted
// Alexander factors Delta_id(zeta^shift t).
struct DiscExpr {
  i64 p = 7;
  std::map<std::string, int> residual;
  std::map<std::pair<std::string, i64>, int> factors;

  bool operator==(const DiscExpr& o) const {
    return p == o.p && residual == o.residual && factors == o.factors;
  }
  std::string str() const;
};
DiscExpr disc_mul(const DiscExpr& x, const DiscExpr& y);
DiscExpr satellite_delta(const DiscExpr& base, const std::string& poly_id, const std::vector<i64>& lift_values);

std::vector<i64> orbit_exponents(i64 a, i64 p = 7);
std::vector<i64> mixed_exponents(i64 c, int eps, i64 p = 7);

struct PolyHypotheses {
  std::string poly;
  Int discriminant;
  Int squarefree_part;
  bool symmetric = false;
  bool irreducible_over_q = false;
  bool irreducible_over_cyclotomic = false;  // over Q(zeta_7)
  bool not_t7_form = false;
  bool passes = false;
  std::vector<std::string> notes;
};
// Quadratics only; UnsupportedShape otherwise.
PolyHypotheses check_poly_hypotheses(const RatLaurent& f);

enum class NormVerdict { Norm, NotNorm, Unknown };
const char* verdict_name(NormVerdict v);

// Registered base polynomials by id. Coprimality of the residual tokens to
// the polynomial factors is an assumption recorded by callers.
struct Genericity {
  std::map<std::string, RatLaurent> polys;
};
NormVerdict norm_test(const DiscExpr& e, const Genericity& hyp);

// Characters on the cover of a knot model, expressed per summand in the
// eigencharacter basis of that summand's own cover. Summands with sign -1
// use the negated linking form on the same generators.
class CharacterModel {
 public:
  CharacterModel(const KnotModel& model, int d, i64 p);

  const KnotModel& model() const { return model_; }
  const LinkingForm& form() const { return form_; }
  const CharSpace& space() const { return space_; }
  int degree() const { return d_; }
  i64 prime() const { return p_; }
  std::size_t summands() const { return parts_.size(); }
  const std::vector<i64>& eigenvalues(std::size_t s) const { return parts_[s].lambdas; }

  // chi in coordinates of space().coords.
  std::vector<std::vector<i64>> coefficients(const ModRow& chi) const;
  ModRow from_coefficients(const std::vector<std::vector<i64>>& coef) const;
  std::vector<i64> lift_values(std::size_t s, std::size_t inf, const std::vector<i64>& coef) const;

  SigGrowth sigma(const ModRow& chi) const;
  DiscExpr delta(const ModRow& chi) const;
  const Genericity& genericity() const { return generic_; }

 private:
  struct Part {
    std::size_t offset = 0, width = 0;  // slice of space().coords
    std::vector<i64> lambdas;
    std::vector<ModRow> eigvecs;  // one per eigenvalue, length width
    std::string token;
  };
  KnotModel model_;
  int d_;
  i64 p_;
  LinkingForm form_;
  CharSpace space_;
  std::vector<Part> parts_;
  Genericity generic_;
  std::map<std::string, SignatureFunction> sigfun_;  // keyed by signed companion id
};

// ---------------------------------------------------------------- drivers

struct SigmaCase {
  Metabolizer metabolizer;
  std::size_t char_dim = 0;
  ModRow character;  // first nonzero coefficient scaled to 1; empty if none
  SigGrowth growth;
  bool obstructed = false;  // some nontrivial vanishing character has nonzero growth
  std::vector<std::pair<ModRow, SigGrowth>> all;  // every nontrivial vanishing character
};
struct SigmaReport {
  int d = 0;
  i64 p = 0;
  std::vector<SigmaCase> cases;
  bool all_characters_nonzero = false;  // over the full character space
  bool not_cg_slice = false;            // every metabolizer obstructed
  std::vector<std::string> notes;
};
SigmaReport cg_sigma(const KnotModel& model, int d, i64 p, std::size_t budget = kDefaultBudget);

struct TwistedDoubleReport {
  long a = 0;
  i64 p = 0;
  std::vector<std::pair<i64, SigGrowth>> by_value;  // sigma_{j/p}(T(-a,a+1)), j = 1..p-1
  bool all_positive = false;
  SigmaReport sigma;
  std::vector<std::string> notes;
};
// Requires a > 1 with 2a+1 prime.
TwistedDoubleReport twisted_double_obstruction(long a, std::size_t budget = kDefaultBudget);
SigmaReport twisted_double_sum(long a, int n, std::size_t budget = kDefaultBudget);
// K_{T_i} # K_{T_j} with T_i the i-fold sum of T(2,7).
SigmaReport order_two_obstruction(int i, int j, std::size_t budget = kDefaultBudget);

struct MutantCase {
  std::string source;             // "metabolizer" or "abstract"
  std::vector<ModRow> generators;  // metabolizer generators (enumerated mode)
  std::vector<ModRow> span2, span4;  // A*_2, A*_4 as coefficient vectors (a_i), (b_i)
  std::string branch;             // odd-2, odd-4, even
  ModRow a, b;                    // chosen character
  DiscExpr delta;
  NormVerdict verdict = NormVerdict::Unknown;
  // Every pair from span2 x span4 satisfies sum eps_i a_i b_i = 0. Reported
  // only: 7G-type metabolizers with dim A* > n violate it.
  bool admissible = false;
  bool character_admissible = false;  // the chosen (a, b) satisfies the constraint
};
struct MutantReport {
  std::vector<std::string> companions;
  std::vector<int> eps;
  std::string mode;  // enumerated, abstract
  std::size_t metabolizers = 0;
  std::vector<MutantCase> cases;
  bool all_not_norm = false;
  std::vector<std::string> notes;
};
enum class MutantMode { Auto, Enumerate, Abstract };
MutantReport mutant_sum_obstruction(const std::vector<nlohmann::json>& companions, const std::vector<int>& eps,
                                    std::size_t budget = kDefaultBudget, MutantMode mode = MutantMode::Auto);

// One step of the case analysis on an abstract pair (A*_2, A*_4).
MutantCase decide_mutant_case(const CharacterModel& cm, const std::vector<ModRow>& span2,
                              const std::vector<ModRow>& span4, const std::vector<int>& eps);

// All subspaces of (Z/p)^n of dimension k, as RREF bases.
std::vector<std::vector<ModRow>> subspaces(std::size_t n, std::size_t k, i64 p);

}  // namespace cgk
