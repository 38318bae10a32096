#pragma once

#include "cgk/matrix.hpp"

namespace cgk {

struct Inertia {
  int pos = 0, neg = 0, zero = 0;
  int signature() const { return pos - neg; }
  bool operator==(const Inertia& o) const {
    return pos == o.pos && neg == o.neg && zero == o.zero;
  }
};

// Sylvester inertia of a symmetric integer matrix by fraction-free
// congruence diagonalization (Bareiss divisions stay exact).
Inertia inertia(IntMatrix a);
// Same for rational symmetric matrices (cleared to integers first).
Inertia inertia(const RatMatrix& a);

}  // namespace cgk
