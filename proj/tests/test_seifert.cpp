#include <random>

#include "cgk/error.hpp"
#include "cgk/seifert.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cgk;

namespace {

// Random Seifert matrix: symmetric part plus the standard symplectic
// upper-triangular blocks, so V - V^T has determinant 1.
IntMatrix random_seifert(std::mt19937& rng, std::size_t g) {
  const std::size_t n = 2 * g;
  IntMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) v(i, j) = v(j, i) = static_cast<long>(rng() % 7) - 3;
  for (std::size_t k = 0; k < g; ++k) v(2 * k, 2 * k + 1) += 1;
  return v;
}

RatLaurent alexander_by_interpolation(const IntMatrix& v) {
  std::vector<Rat> xs, ys;
  for (long t = 1; t <= static_cast<long>(v.rows()) + 1; ++t) {
    xs.emplace_back(t);
    ys.emplace_back(oracle::alexander_at(v, t));
  }
  return RatLaurent(interpolate(xs, ys));
}

}  // namespace

TEST_CASE("family Alexander polynomials") {
  CHECK(alexander(twisted_double_matrix(1)).normalized().str() == "2t^2-5t+2");
  CHECK(alexander(order_two_base_matrix()).normalized().str() == "t^2-3t+1");
  for (long a = 1; a <= 6; ++a) {
    Int c = a * (a + 1);
    RatLaurent want(QPoly(std::vector<Rat>{Rat(c), Rat(-(2 * c + 1)), Rat(c)}));
    CHECK(alexander(twisted_double_matrix(a)).equal_up_to_unit(want));
  }
  CHECK(alexander(torus_matrix(2, 3)).equal_up_to_unit(RatLaurent(QPoly{1, -1, 1})));
  CHECK(alexander(z49_model_matrix()).equal_up_to_unit(RatLaurent(QPoly{2, -5, 2} * QPoly{2, -5, 2})));
}

TEST_CASE("Alexander polynomial agrees with determinant interpolation") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix v = random_seifert(rng, 1 + trial % 3);
    validate_seifert(v);
    CHECK(alexander(v).equal_up_to_unit(alexander_by_interpolation(v)));
    RatLaurent d = alexander(v);
    CHECK(d.symmetric());
    CHECK(abs(d.body().eval(1)) == 1);
  }
}

TEST_CASE("Levine-Tristram signature agrees with Hermitian eigenvalues") {
  std::mt19937 rng(43);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix v = random_seifert(rng, 1 + trial % 3);
    SignatureFunction sf(v);
    for (int k = 1; k < 40; ++k) {
      Rat t(k, 40);
      if (sf.singular_at(t)) {
        CHECK_THROWS(sf.at(t));
        continue;
      }
      if (oracle::hermitian_gap(v, t.get_d()) < 1e-6) continue;
      CHECK(sf.at(t) == oracle::hermitian_signature(v, t.get_d()));
      ++compared;
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("torus knot and figure-eight signatures") {
  CHECK(lt_signature(torus_matrix(2, 7), Rat(1, 5)) == -2);
  CHECK(lt_signature(torus_matrix(2, 7), Rat(2, 5)) == -6);
  CHECK(lt_signature(torus_matrix(2, 3), Rat(1, 2)) == -2);
  SignatureFunction fig8(order_two_base_matrix());
  for (int k = 1; k <= 20; ++k) CHECK(fig8.at(Rat(2 * k - 1, 42)) == 0);
}

TEST_CASE("jump points raise SingularAtT") {
  // Delta(T(2,3)) vanishes at exp(2 pi i / 6).
  try {
    lt_signature(torus_matrix(2, 3), Rat(1, 6));
    FAIL("expected SingularAtT");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularAtT);
  }
  CHECK(SignatureFunction(torus_matrix(2, 5)).singular_at(Rat(1, 10)));
  CHECK_FALSE(SignatureFunction(torus_matrix(2, 5)).singular_at(Rat(1, 9)));
}

TEST_CASE("mirror negates signatures, block sums add them") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    IntMatrix v = random_seifert(rng, 1 + trial % 2);
    IntMatrix w = random_seifert(rng, 1);
    SignatureFunction sv(v), sm(mirror(v)), sw(w), ss(block_sum({v, w}));
    for (int k = 1; k < 30; ++k) {
      Rat t(k, 30);
      if (sv.singular_at(t) || sw.singular_at(t)) continue;
      CHECK(sm.at(t) == -sv.at(t));
      CHECK(ss.at(t) == sv.at(t) + sw.at(t));
    }
  }
}

TEST_CASE("invalid Seifert matrices are rejected") {
  IntMatrix bad{{1, 0}, {0, 1}};
  CHECK_THROWS_AS(validate_seifert(bad), Error);
  IntMatrix odd{{1}};
  CHECK_THROWS_AS(validate_seifert(odd), Error);
}

TEST_CASE("Fox-Milnor condition on slice and nonslice examples") {
  CHECK(fox_milnor(twisted_double_matrix(2)).passes);
  CHECK(fox_milnor(block_sum({torus_matrix(2, 3), mirror(torus_matrix(2, 3))})).passes);
  CHECK_FALSE(fox_milnor(torus_matrix(2, 3)).passes);
}
