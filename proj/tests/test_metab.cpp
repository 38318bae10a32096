#include <random>

#include "cgk/metab.hpp"
#include "cgk/seifert.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cgk;

namespace {

std::set<ModRow> element_set(const std::vector<i64>& factors, const Subgroup& s) {
  auto v = elements(factors, s);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("Z_25 unit form has one metabolizer") {
  for (long u : {1, 2, 3, 7}) {
    LinkingForm l = LinkingForm::make({25}, {{Rat(u, 25)}}, {{1}});
    auto m = enumerate_metabolizers(l, false);
    REQUIRE(m.size() == 1);
    CHECK(element_set(l.factors, m[0]) == oracle::closure({25}, {{5}}));
  }
}

TEST_CASE("Z_5 + Z_5 diagonal form has the two isotropic lines") {
  LinkingForm l = LinkingForm::make({5, 5}, {{Rat(1, 5), 0}, {0, Rat(1, 5)}}, {{1, 0}, {0, 1}});
  auto m = enumerate_metabolizers(l, false);
  REQUIRE(m.size() == 2);
  // a^2 + b^2 = 0 mod 5: b = 2a or b = 3a.
  std::set<std::set<ModRow>> got, want{oracle::closure({5, 5}, {{1, 2}}), oracle::closure({5, 5}, {{1, 3}})};
  for (const auto& a : m) got.insert(element_set(l.factors, a));
  CHECK(got == want);
  // With the form x^2 + 2y^2 there are none (-2 is not a square mod 5).
  LinkingForm l2 = LinkingForm::make({5, 5}, {{Rat(1, 5), 0}, {0, Rat(2, 5)}}, {{1, 0}, {0, 1}});
  CHECK(enumerate_metabolizers(l2, false).empty());
}

TEST_CASE("enumeration is complete against brute force over all subgroups") {
  std::mt19937 rng(101);
  int compared = 0;
  for (int trial = 0; trial < 30; ++trial) {
    LinkingForm l = oracle::random_metabolic(rng);
    if (trial % 2) l = direct_sum(l, oracle::random_metabolic(rng));
    if (l.order() > 300) continue;
    // Brute force over subgroups generated by two elements. Metabolizers
    // here have order at most 17, so none needs three generators.
    std::vector<ModRow> all;
    for (const auto& x : oracle::closure(l.factors, [&] {
           std::vector<ModRow> g;
           for (std::size_t i = 0; i < l.rank(); ++i) {
             ModRow e(l.rank(), 0);
             e[i] = 1;
             g.push_back(e);
           }
           return g;
         }()))
      all.push_back(x);
    std::set<std::set<ModRow>> brute;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i; j < all.size(); ++j) {
        auto s = oracle::closure(l.factors, {all[i], all[j]});
        if (oracle::is_metabolizer(l, s)) brute.insert(s);
      }
    std::set<std::set<ModRow>> got;
    for (const auto& a : enumerate_metabolizers(l, false)) {
      auto s = element_set(l.factors, a);
      CHECK(oracle::is_metabolizer(l, s));
      got.insert(s);
    }
    CHECK(got == brute);
    ++compared;
  }
  CHECK(compared >= 15);
}

TEST_CASE("project_metabolizer yields metabolizers on 200 random instances") {
  std::mt19937 rng(2024);
  int failures = 0;
  for (int i = 0; i < 200; ++i) failures += !oracle::projection_instance_ok(rng);
  CHECK(failures == 0);
}

TEST_CASE("invariant metabolizers of the Z_49 + Z_49 model") {
  LinkingForm l = linking_form(z49_model_matrix(), 3);
  auto inv = enumerate_metabolizers(l, true);
  CHECK(!inv.empty());
  for (const auto& a : inv) {
    auto s = element_set(l.factors, a);
    CHECK(oracle::is_metabolizer(l, s));
    for (const auto& x : s) CHECK(s.count(l.reduce(l.apply_deck(x))));
    // A* has dimension 1 exactly when A is cyclic of order 49.
    CharSpace vc = vanishing_chars(l, a, 7);
    std::set<ModRow> seven;
    for (const auto& x : s) {
      ModRow y = x;
      for (auto& c : y) c = (7 * c) % 49;
      seven.insert(y);
    }
    CHECK((vc.dim() == 1) == (seven.size() == 7));
  }
}

TEST_CASE("find_odd_char against exhaustive span search over Z_7") {
  std::mt19937 rng(77);
  const i64 p = 7;
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t k = 1 + rng() % n;
      std::vector<ModRow> basis(k, ModRow(n));
      for (auto& r : basis)
        for (auto& x : r) x = (rng() % 3 == 0) ? 0 : static_cast<i64>(rng() % p);
      // Diagonal-type spans (no odd vector) occur often enough with n even.
      if (trial % 4 == 0 && n % 2 == 0) {
        basis.assign(n / 2, ModRow(n, 0));
        for (std::size_t r = 0; r < n / 2; ++r) {
          basis[r][2 * r] = 1;
          basis[r][2 * r + 1] = 1 + static_cast<i64>(rng() % (p - 1));
        }
      }
      bool brute = false;
      for (const auto& v : oracle::closure(std::vector<i64>(n, p), basis)) brute |= is_odd(v);
      auto got = find_odd_char(basis, n, p);
      CHECK(got.has_value() == brute);
      if (got) {
        CHECK(is_odd(*got));
        CHECK(oracle::closure(std::vector<i64>(n, p), basis).count(*got) == 1);
      }
    }
}

TEST_CASE("diagonal lemma: no counterexamples") {
  for (auto [p, k] : std::vector<std::pair<i64, int>>{{3, 1}, {3, 2}, {5, 2}, {7, 2}}) {
    DiagonalLemmaReport r = check_diagonal_lemma(p, k);
    CHECK(r.exhaustive);
    CHECK(r.counterexamples == 0);
    CHECK(r.without_odd == r.permuted_diagonal);
  }
}

TEST_CASE("diagonal lemma counts match an independent scan for p = 3, k = 2") {
  const i64 p = 3;
  std::size_t nonsingular = 0, without_odd = 0;
  for (int code = 0; code < 81; ++code) {
    i64 e[4] = {code % 3, (code / 3) % 3, (code / 9) % 3, (code / 27) % 3};
    if ((e[0] * e[3] - e[1] * e[2]) % p == 0) continue;
    ++nonsingular;
    std::vector<ModRow> rows{{1, 0, e[0], e[1]}, {0, 1, e[2], e[3]}};
    bool odd = false;
    for (const auto& v : oracle::closure({p, p, p, p}, rows)) {
      int nz = 0;
      for (i64 x : v) nz += x != 0;
      odd |= nz % 2 == 1;
    }
    if (!odd) {
      ++without_odd;
      // permuted diagonal: one zero in each row and column
      CHECK(((e[0] == 0 && e[3] == 0) || (e[1] == 0 && e[2] == 0)));
    }
  }
  DiagonalLemmaReport r = check_diagonal_lemma(p, 2);
  CHECK(r.nonsingular == nonsingular);
  CHECK(r.without_odd == without_odd);
}

TEST_CASE("admissible pairs") {
  CHECK(admissible_pair({1, 1}, {1, -1 + 7}, {1, 1}));
  CHECK(admissible_pair({1, 1}, {1, 1}, {1, -1}));
  CHECK_FALSE(admissible_pair({1, 0}, {1, 0}, {1, 1}));
}
