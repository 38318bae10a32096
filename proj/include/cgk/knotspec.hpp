#pragma once

#include <string>
#include <vector>

#include "cgk/matrix.hpp"
#include "cgk/modular.hpp"
#include "json.hpp"

namespace cgk {

// A curve in the complement of a base knot along which a companion knot is
// tied in. `values` are the values of the base eigencharacters (in the
// order returned by char_space) on one chosen lift of the curve.
struct Infection {
  std::string curve;
  std::string companion_id;  // canonical JSON of the companion spec, "-" prefixed when mirrored
  IntMatrix companion;
  std::vector<i64> values;
};

struct Summand {
  int sign = 1;
  std::string family;  // matrix, twisted_double, order_two, torus, satellite, kj
  std::string id;      // canonical JSON of the summand spec
  IntMatrix base;
  int degree = 0;  // cover degree the infection data refers to (0 if none)
  i64 prime = 0;
  std::vector<Infection> infections;
};

// Formal connected sum of signed summands. Infections never change the
// Seifert form, so seifert() is the signed block sum of the base matrices.
struct KnotModel {
  std::vector<Summand> summands;
  IntMatrix seifert() const;
};

KnotModel build(const nlohmann::json& spec);
IntMatrix build_matrix(const nlohmann::json& spec);
std::string canonical_id(const nlohmann::json& spec);

// Modeled positive mutant: each base matrix is replaced by a unimodular
// congruent copy and the character values on the second infection curve
// change sign (B2 <-> B2* for the kj family).
KnotModel mutant(const KnotModel& m);

// Convenience constructors used by drivers and tests.
nlohmann::json twisted_double_spec(long a);
nlohmann::json torus_spec(long p, long q);
nlohmann::json torus_sum_spec(long p, long q, int copies);  // copies = 0 gives the unknot
nlohmann::json order_two_spec(const nlohmann::json& companion);
nlohmann::json kj_spec(const nlohmann::json& companion, bool mutant_flag);

}  // namespace cgk
