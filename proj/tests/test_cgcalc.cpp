#include <random>

#include "cgk/cgcalc.hpp"
#include "cgk/cyclotomic.hpp"
#include "cgk/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cgk;
using nlohmann::json;

namespace {

const char* kPoly = "J";

Genericity generic_quadratic() {
  Genericity g;
  g.polys[kPoly] = RatLaurent(QPoly{3, -5, 3});
  return g;
}

DiscExpr product_over(const std::vector<i64>& exps) {
  DiscExpr e;
  return satellite_delta(e, kPoly, exps);
}

CycLaurent cyc_product(const RatLaurent& f, const std::vector<i64>& exps) {
  CycLaurent acc = CycLaurent::monomial(CycNum::rational(7, 1), 0);
  for (i64 k : exps) acc = acc * cyc_eval(f, k, 7);
  return acc;
}

std::vector<json> family() {
  json generic{{"kind", "matrix"}, {"matrix", {{3, 1}, {0, 1}}}};
  return {twisted_double_spec(1),
          twisted_double_spec(2),
          torus_spec(2, 5),
          order_two_spec(torus_spec(2, 7)),
          kj_spec(generic, false),
          json{{"kind", "sum"},
               {"summands", json::array({json{{"knot", twisted_double_spec(3)}, {"sign", 1}},
                                         json{{"knot", torus_spec(2, 3)}, {"sign", -1}}})}}};
}

}  // namespace

TEST_CASE("signature growth arithmetic") {
  SigGrowth a{3}, b{-5}, c{Rat(1, 2)};
  CHECK(sig_add(a, b) == sig_add(b, a));
  CHECK(sig_add(sig_add(a, b), c) == sig_add(a, sig_add(b, c)));
  CHECK(sig_add(a, SigGrowth{}) == a);
  IntMatrix t27 = torus_matrix(2, 7);
  CHECK(satellite_sigma(SigGrowth{}, t27, 1, 5).coefficient == -2);
  CHECK(satellite_sigma(SigGrowth{}, t27, 2, 5).coefficient == -6);
  CHECK(satellite_sigma(a, t27, 5, 5) == a);  // value 0 mod p contributes nothing
  CHECK(satellite_sigma(SigGrowth{}, t27, -1, 5).coefficient == lt_signature(t27, Rat(4, 5)));
}

TEST_CASE("discriminant products are commutative and cancel") {
  DiscExpr x = product_over({1, 2, 2}), y = product_over({3});
  y.residual["tok"] = 1;
  CHECK(disc_mul(x, y) == disc_mul(y, x));
  DiscExpr inv;
  inv.factors[{kPoly, 1}] = -1;
  inv.factors[{kPoly, 2}] = -2;
  CHECK(disc_mul(x, inv).factors.empty());
  CHECK(satellite_delta(DiscExpr{}, kPoly, {8}).factors.count({kPoly, 1}) == 1);
}

TEST_CASE("exponent multisets") {
  for (i64 a = 1; a < 7; ++a) CHECK(orbit_exponents(a) == std::vector<i64>{1, 2, 3, 4, 5, 6});
  CHECK(orbit_exponents(0) == std::vector<i64>(6, 0));
  for (i64 c = 1; c < 7; ++c) CHECK(mixed_exponents(c, 1) == std::vector<i64>{0, 0, 2, 2, 5, 5});
  CHECK_THROWS(mixed_exponents(0, 1));
  // The -1 sign gives a multiset without the double zero.
  for (i64 c = 1; c < 7; ++c) {
    auto e = mixed_exponents(c, -1);
    CHECK(e.size() == 6);
  }
}

TEST_CASE("norm test on orbit products") {
  Genericity g = generic_quadratic();
  CHECK(norm_test(product_over(orbit_exponents(0)), g) == NormVerdict::Norm);
  for (i64 a = 1; a < 7; ++a) CHECK(norm_test(product_over(orbit_exponents(a)), g) == NormVerdict::NotNorm);
  DiscExpr r = product_over({0, 0});
  r.residual["x"] = 1;
  CHECK(norm_test(r, g) == NormVerdict::Unknown);
}

TEST_CASE("norm verdicts are stable under conjugate-pair squares") {
  Genericity g = generic_quadratic();
  std::mt19937 rng(99);
  std::vector<DiscExpr> bases{product_over(orbit_exponents(0)), product_over(orbit_exponents(3)),
                              product_over({0, 0, 2, 2, 5, 5}), product_over({1})};
  for (int trial = 0; trial < 50; ++trial) {
    const DiscExpr& b = bases[trial % bases.size()];
    NormVerdict before = norm_test(b, g);
    DiscExpr sq;
    for (int k = 0, n = 1 + rng() % 4; k < n; ++k) {
      i64 e = static_cast<i64>(rng() % 7);
      // (f * conj f)^2 with f = Delta(zeta^e t), a self-conjugate prime.
      sq = satellite_delta(sq, kPoly, {e, e, e, e});
    }
    if (rng() % 2) sq.residual["r" + std::to_string(rng() % 3)] += 2;
    CHECK(norm_test(disc_mul(b, sq), g) == before);
  }
}

TEST_CASE("cyclotomic oracle for the norm test") {
  const RatLaurent f(QPoly{3, -5, 3});
  // Delta(t)^6 = h * conj(h) with h = Delta(t)^3.
  CycLaurent h = cyc_product(f, {0, 0, 0});
  CHECK(cyc_product(f, orbit_exponents(0)).is_associate(h * h.conj()));
  // The factors Delta(zeta^k t) are self-conjugate and pairwise distinct, so
  // the parity count of the norm test applies.
  for (i64 k = 0; k < 7; ++k) {
    CycLaurent fk = cyc_eval(f, k, 7);
    CHECK(fk.conj().is_associate(fk));
    for (i64 j = k + 1; j < 7; ++j) CHECK_FALSE(fk.is_associate(cyc_eval(f, j, 7)));
  }
  // The orbit product has rational coefficients (it is a norm from
  // Q(zeta_7) down to Q), yet each factor occurs once.
  CycLaurent orbit = cyc_product(f, orbit_exponents(1));
  for (const auto& [e, c] : orbit.terms())
    for (std::size_t i = 1; i < c.coeffs().size(); ++i) CHECK(c.coeffs()[i] == 0);
}

TEST_CASE("polynomial hypotheses") {
  auto check = [](QPoly p) { return check_poly_hypotheses(RatLaurent(p)); };
  CHECK(check(QPoly{-3, -7, 3}).passes);
  CHECK(check(QPoly{3, -7, 3}).passes);
  CHECK(check(QPoly{-2, -5, 2}).passes);
  CHECK(check(QPoly{1, -3, 1}).passes);
  CHECK(check(QPoly{3, -5, 3}).passes);
  CHECK_FALSE(check(QPoly{2, -5, 2}).passes);  // reducible
  PolyHypotheses m7 = check(QPoly{2, -1, 1});  // discriminant -7
  CHECK_FALSE(m7.passes);
  CHECK(m7.squarefree_part == -7);
  CHECK(check(QPoly{3, -5, 3}).symmetric);
  CHECK_FALSE(check(QPoly{-3, -7, 3}).symmetric);
  try {
    check(QPoly{1, 0, 0, 1});
    FAIL("cubic accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedShape);
  }
}

TEST_CASE("norm test refuses unverified hypotheses") {
  Genericity g;
  g.polys["bad"] = RatLaurent(QPoly{2, -1, 1});
  DiscExpr e;
  e = satellite_delta(e, "bad", {1});
  CHECK_THROWS_AS(norm_test(e, g), Error);
  CHECK_THROWS_AS(norm_test(product_over({1}), Genericity{}), Error);
  Genericity shared;
  shared.polys["a"] = RatLaurent(QPoly{3, -5, 3});
  shared.polys["b"] = RatLaurent(QPoly{6, -10, 6});
  DiscExpr ab = satellite_delta(satellite_delta(DiscExpr{}, "a", {1}), "b", {2});
  CHECK_THROWS_AS(norm_test(ab, shared), Error);
}

TEST_CASE("twisted double character data") {
  TwistedDoubleReport r = twisted_double_obstruction(2);
  REQUIRE(r.by_value.size() == 4);
  for (const auto& [j, g] : r.by_value) CHECK(g.coefficient == 2);
  CHECK(r.all_positive);
  CHECK(r.sigma.not_cg_slice);
  CHECK_THROWS(twisted_double_obstruction(1));
  CHECK_THROWS(twisted_double_obstruction(4));  // 9 is not prime
}

TEST_CASE("character coefficients round trip") {
  json spec{{"kind", "sum"},
            {"summands", json::array({json{{"knot", twisted_double_spec(2)}, {"sign", 1}},
                                      json{{"knot", twisted_double_spec(2)}, {"sign", -1}}})}};
  CharacterModel cm(build(spec), 2, 5);
  CHECK(cm.summands() == 2);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    ModRow chi(cm.space().ambient());
    for (auto& x : chi) x = static_cast<i64>(rng() % 5);
    auto coef = cm.coefficients(chi);
    CHECK(cm.from_coefficients(coef) == chi);
  }
  // K # -K has vanishing sigma on the diagonal character.
  auto coef = cm.coefficients(cm.from_coefficients({{1}, {1}}));
  CHECK(cm.sigma(cm.from_coefficients(coef)).is_zero());
}

TEST_CASE("order-two driver coefficients") {
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      SigmaReport r = order_two_obstruction(i, j);
      REQUIRE(!r.cases.empty());
      for (const auto& c : r.cases) CHECK(c.growth.coefficient == 4 * (i - j));
    }
}

TEST_CASE("mutant sum with one summand") {
  json generic{{"kind", "matrix"}, {"matrix", {{3, 1}, {0, 1}}}};
  MutantReport r = mutant_sum_obstruction({generic}, {1});
  CHECK(r.mode == "enumerated");
  CHECK(r.all_not_norm);
  for (const auto& c : r.cases) {
    CHECK(c.verdict == NormVerdict::NotNorm);
    CHECK(c.character_admissible);
  }
}

TEST_CASE("subspace enumeration counts") {
  // Gaussian binomials over F_7.
  CHECK(subspaces(2, 1, 7).size() == 8);
  CHECK(subspaces(3, 1, 7).size() == 57);
  CHECK(subspaces(3, 2, 7).size() == 57);
  CHECK(subspaces(4, 2, 7).size() == 2850);
  for (const auto& s : subspaces(3, 2, 3)) CHECK(rank_mod_p(s, 3) == 2);
}

TEST_CASE("mutation-invariance shadow on the family knots") {
  for (const json& spec : family()) {
    KnotModel k = build(spec);
    KnotModel m = mutant(k);
    IntMatrix v = k.seifert(), w = m.seifert();
    CAPTURE(spec.dump());
    CHECK(alexander(v).equal_up_to_unit(alexander(w)));
    SignatureFunction sv(v), sw(w);
    // Odd multiples of 1/44 avoid the jump points of every knot in the list.
    for (int i = 1; i <= 20; ++i) {
      Rat t(2 * i - 1, 44);
      CHECK(sv.at(t) == sw.at(t));
    }
    for (int d : {2, 3}) {
      CHECK(branched_cover(v, d).invariant_factors == branched_cover(w, d).invariant_factors);
      LinkingForm a = linking_form(v, d), b = linking_form(w, d);
      if (a.order() <= 2500) CHECK(find_isometry(a, b, true).has_value());
    }
  }
}
