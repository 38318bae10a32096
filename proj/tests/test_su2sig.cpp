#include "cgk/error.hpp"
#include "cgk/seifert.hpp"
#include "cgk/su2sig.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cgk;

TEST_CASE("number of representation arcs") {
  for (long a = 2; a <= 8; ++a) {
    auto arcs = rep_arcs(a);
    CHECK(arcs.size() == static_cast<std::size_t>(a * (a - 1) / 2));
    for (const auto& r : arcs) {
      CHECK(r.lo < r.hi);
      CHECK(r.lo >= 0);
      CHECK(r.hi <= 1);
    }
  }
}

TEST_CASE("arc count equals the Seifert matrix signature") {
  for (long a = 2; a <= 8; ++a) {
    IntMatrix v = torus_matrix(-a, a + 1);
    SignatureFunction sf(v);
    int compared = 0;
    for (long k = 1; k < 40; ++k) {
      Rat t(k, 40);
      if (sf.singular_at(t)) {
        CHECK_THROWS_AS(count_signature(a, t), Error);
        continue;
      }
      CHECK(count_signature(a, t) == sf.at(t));
      if (oracle::hermitian_gap(v, t.get_d()) > 1e-6)
        CHECK(count_signature(a, t) == oracle::hermitian_signature(v, t.get_d()));
      ++compared;
    }
    CHECK(compared > 20);
  }
}

TEST_CASE("endpoint collisions are reported") {
  auto arcs = rep_arcs(3);
  REQUIRE(!arcs.empty());
  try {
    count_signature(3, arcs.front().lo);
    FAIL("expected EndpointCollision");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EndpointCollision);
  }
}

TEST_CASE("herald interval is positive") {
  for (long a = 2; a <= 8; ++a) {
    HeraldReport r = verify_herald(a, 100);
    CAPTURE(a);
    CHECK(r.lo == Rat(1, a * (a + 1)));
    CHECK(r.hi == 1 - Rat(1, a * (a + 1)));
    CHECK(r.all_positive);
    CHECK(r.min_count > 0);
    CHECK(r.chain_covers_half);
    CHECK(r.covered);
    CHECK(r.samples + r.skipped >= 90);
  }
  CHECK_THROWS(verify_herald(1, 100));
}
