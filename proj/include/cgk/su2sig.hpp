#pragma once

#include <vector>

#include "cgk/matrix.hpp"

namespace cgk {

// Arc of SU(2) representations of <x, y | x^a = y^(a+1)> indexed by (m, n).
// As u runs over [0, 1] the meridian trace sweeps 2cos(pi t) for t between
// the two folded angles below (angles are rational multiples of pi).
struct RepArc {
  long m = 0, n = 0;
  Rat angle0, angle1;  // m/a - n/(a+1) and m/a + n/(a+1), unfolded
  Rat lo, hi;          // folded into [0, 1], lo < hi

  bool contains(const Rat& t) const { return lo < t && t < hi; }
};

std::vector<RepArc> rep_arcs(long a);

// Twice the number of arcs whose open trace interval contains 2cos(pi t);
// the sign is +1 for the (-a, a+1) torus knot. Throws EndpointCollision at
// an arc endpoint.
int count_signature(long a, const Rat& t);

struct HeraldReport {
  long a = 0;
  Rat lo, hi;  // 1/(a(a+1)) and 1 - 1/(a(a+1))
  std::size_t samples = 0, skipped = 0;
  int min_count = 0;
  bool all_positive = false;
  std::vector<RepArc> chain;  // the (1, 2k+1) arcs
  Rat chain_reach;            // sup of the union of the chain intervals starting at lo
  bool chain_covers_half = false;  // (lo, 1/2] covered by the chain alone
  bool covered = false;            // chain plus its reflection t -> 1 - t covers (lo, hi)
};
HeraldReport verify_herald(long a, std::size_t grid);

}  // namespace cgk
