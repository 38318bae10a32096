#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cgk/factor.hpp"
#include "cgk/matrix.hpp"
#include "cgk/poly.hpp"

namespace cgk {

// Throws InvalidInput unless V is square, of even size, and det(V - V^T) = 1.
void validate_seifert(const IntMatrix& v);

RatLaurent alexander(const IntMatrix& v);

// Levine-Tristram signature function of a fixed Seifert matrix. All
// per-matrix work (Alexander polynomial, the determinant polynomial in
// c = cot(pi t) and its Sturm sequence) is done once at construction.
class SignatureFunction {
 public:
  explicit SignatureFunction(IntMatrix v);

  // sigma_t for rational t in (0, 1). Throws SingularAtT at jump points.
  int at(const Rat& t) const;
  bool singular_at(const Rat& t) const;
  const RatLaurent& alexander_poly() const { return delta_; }
  std::size_t size() const { return s_.rows(); }

 private:
  IntMatrix s_, a_;
  RatLaurent delta_;
  QPoly detpoly_;  // det(S - i c A) as a polynomial in c
  SturmSequence sturm_;
};

int lt_signature(const IntMatrix& v, const Rat& t);

// Polynomial in c whose roots are cot(pi j / d), j = 1..d-1.
QPoly cot_polynomial(long d);

struct FoxMilnorResult {
  bool passes = false;
  QFactorization factors;
  std::vector<std::string> notes;
};
FoxMilnorResult fox_milnor(const IntMatrix& v);

std::vector<std::array<Int, 2>> metabolizing_vectors(const IntMatrix& v, int bound);

// Families.
IntMatrix mirror(const IntMatrix& v);  // -V^T
IntMatrix block_sum(const std::vector<IntMatrix>& parts);
IntMatrix twisted_double_matrix(long a);
IntMatrix order_two_base_matrix();
IntMatrix torus_matrix(long p, long q);
// Genus-two matrix with Alexander polynomial (2t^2-5t+2)^2 whose 3-fold
// cover has homology Z_49 + Z_49.
IntMatrix z49_model_matrix();

}  // namespace cgk
