#include "cgk/inertia.hpp"

#include <utility>

#include "cgk/error.hpp"

namespace cgk {

namespace {
void sym_swap(IntMatrix& a, std::size_t i, std::size_t k) {
  if (i == k) return;
  const std::size_t n = a.rows();
  for (std::size_t j = 0; j < n; ++j) std::swap(a(i, j), a(k, j));
  for (std::size_t j = 0; j < n; ++j) std::swap(a(j, i), a(j, k));
}
}  // namespace

Inertia inertia(IntMatrix a) {
  require(a.square(), ErrorKind::InvalidInput, "inertia needs a square matrix");
  const std::size_t n = a.rows();
  Inertia out;
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i)
      if (a(i, i) != 0) piv = i;
    if (piv == n) {
      // Zero diagonal: fold a nonzero off-diagonal pair onto the diagonal.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        out.zero += static_cast<int>(n - k);
        break;
      }
      for (std::size_t c = k; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = k; r < n; ++r) a(r, pi) += a(r, pj);
      piv = pi;
    }
    sym_swap(a, piv, k);
    const Int p = a(k, k);
    if (sgn(p) * sgn(prev) > 0)
      ++out.pos;
    else
      ++out.neg;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        Int v = p * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
        if (j != i) a(j, i) = v;
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) a(i, k) = a(k, i) = 0;
    prev = p;
  }
  return out;
}

Inertia inertia(const RatMatrix& r) {
  Int den = 1;
  for (const auto& x : r.data()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntMatrix a(r.rows(), r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) a(i, j) = r(i, j).get_num() * (den / r(i, j).get_den());
  return inertia(std::move(a));
}

}  // namespace cgk
