#include "cgk/su2sig.hpp"

#include <algorithm>

#include "cgk/error.hpp"

namespace cgk {

namespace {

// theta -> representative in [0, 1] with the same cos(pi theta).
Rat fold(Rat theta) {
  Rat two = 2;
  Int q = theta.get_num() / theta.get_den();
  theta -= Rat(q - (q % 2));
  while (theta < 0) theta += two;
  while (theta >= two) theta -= two;
  return theta > 1 ? two - theta : theta;
}

}  // namespace

std::vector<RepArc> rep_arcs(long a) {
  std::vector<RepArc> out;
  for (long m = 1; m < a; ++m)
    for (long n = 1; n < a + 1; ++n) {
      if ((m - n) % 2 != 0) continue;
      RepArc r;
      r.m = m;
      r.n = n;
      r.angle0 = Rat(m, a) - Rat(n, a + 1);
      r.angle1 = Rat(m, a) + Rat(n, a + 1);
      r.angle0.canonicalize();
      r.angle1.canonicalize();
      Rat x = fold(r.angle0), y = fold(r.angle1);
      r.lo = std::min(x, y);
      r.hi = std::max(x, y);
      out.push_back(r);
    }
  return out;
}

int count_signature(long a, const Rat& tin) {
  Rat t(tin);
  t.canonicalize();
  require(a >= 1, ErrorKind::InvalidInput, "count_signature needs a >= 1");
  require(t > 0 && t < 1, ErrorKind::InvalidInput, "t must lie in (0, 1)");
  int count = 0;
  for (const auto& r : rep_arcs(a)) {
    if (t == r.lo || t == r.hi)
      fail(ErrorKind::EndpointCollision, "t = " + to_string(t) + " is an endpoint of arc (" + std::to_string(r.m) +
                                             "," + std::to_string(r.n) + ")");
    count += r.contains(t);
  }
  return 2 * count;
}

HeraldReport verify_herald(long a, std::size_t grid) {
  require(a >= 2, ErrorKind::InvalidInput, "verify_herald needs a >= 2");
  require(grid >= 1, ErrorKind::InvalidInput, "grid must be positive");
  HeraldReport rep;
  rep.a = a;
  rep.lo = Rat(1, a * (a + 1));
  rep.hi = 1 - rep.lo;
  rep.all_positive = true;
  rep.min_count = -1;
  for (std::size_t i = 1; i <= grid; ++i) {
    Rat t = rep.lo + (rep.hi - rep.lo) * Rat(static_cast<long>(i), static_cast<long>(grid + 1));
    t.canonicalize();
    int c;
    try {
      c = count_signature(a, t);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EndpointCollision) throw;
      ++rep.skipped;
      continue;
    }
    ++rep.samples;
    if (rep.min_count < 0 || c < rep.min_count) rep.min_count = c;
    rep.all_positive = rep.all_positive && c > 0;
  }

  for (const auto& r : rep_arcs(a))
    if (r.m == 1) rep.chain.push_back(r);
  std::sort(rep.chain.begin(), rep.chain.end(), [](const RepArc& x, const RepArc& y) { return x.lo < y.lo; });
  // Open intervals chain together when each starts strictly before the
  // running supremum (the shared point is then interior to the union).
  rep.chain_reach = rep.lo;
  bool started = false;
  for (const auto& r : rep.chain) {
    if (!started) {
      if (r.lo != rep.lo) break;
      started = true;
      rep.chain_reach = r.hi;
      continue;
    }
    if (r.lo < rep.chain_reach) rep.chain_reach = std::max(rep.chain_reach, r.hi);
  }
  rep.chain_covers_half = started && rep.chain_reach > Rat(1, 2);
  rep.covered = rep.chain_covers_half;
  return rep;
}

}  // namespace cgk
