#include "cgk/matrix.hpp"

#include <utility>

#include "cgk/error.hpp"

namespace cgk {

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

Int det_bareiss(IntMatrix a) {
  const std::size_t n = a.rows();
  require(a.square(), ErrorKind::InvalidInput, "determinant of non-square matrix");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

struct SnfState {
  IntMatrix a;
  IntMatrix l, linv, r;
  bool track;

  void row_swap(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(i, j), a(k, j));
    if (!track) return;
    for (std::size_t j = 0; j < l.cols(); ++j) std::swap(l(i, j), l(k, j));
    for (std::size_t j = 0; j < linv.rows(); ++j) std::swap(linv(j, i), linv(j, k));
  }
  void col_swap(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a.rows(); ++j) std::swap(a(j, i), a(j, k));
    if (!track) return;
    for (std::size_t j = 0; j < r.rows(); ++j) std::swap(r(j, i), r(j, k));
  }
  // row_i -= q * row_k
  void row_sub(std::size_t i, std::size_t k, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= q * a(k, j);
    if (!track) return;
    for (std::size_t j = 0; j < l.cols(); ++j) l(i, j) -= q * l(k, j);
    for (std::size_t j = 0; j < linv.rows(); ++j) linv(j, k) += q * linv(j, i);
  }
  // col_j -= q * col_k
  void col_sub(std::size_t j, std::size_t k, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, j) -= q * a(i, k);
    if (!track) return;
    for (std::size_t i = 0; i < r.rows(); ++i) r(i, j) -= q * r(i, k);
  }
  void row_neg(std::size_t i) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
    if (!track) return;
    for (std::size_t j = 0; j < l.cols(); ++j) l(i, j) = -l(i, j);
    for (std::size_t j = 0; j < linv.rows(); ++j) linv(j, i) = -linv(j, i);
  }
};

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_form(const IntMatrix& input, bool with_transforms) {
  const std::size_t m = input.rows(), n = input.cols();
  SnfState st{input, {}, {}, {}, with_transforms};
  if (with_transforms) {
    st.l = IntMatrix::identity(m);
    st.linv = IntMatrix::identity(m);
    st.r = IntMatrix::identity(n);
  }
  IntMatrix& a = st.a;
  const std::size_t kmax = std::min(m, n);
  for (std::size_t k = 0; k < kmax; ++k) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (a(i, j) != 0 &&
              (pi == m || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == m) goto done;
      st.row_swap(k, pi);
      st.col_swap(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (a(i, k) == 0) continue;
        st.row_sub(i, k, floor_div(a(i, k), a(k, k)));
        if (a(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a(k, j) == 0) continue;
        st.col_sub(j, k, floor_div(a(k, j), a(k, k)));
        if (a(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row k and retry.
      bool divisible = true;
      for (std::size_t i = k + 1; i < m && divisible; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (a(i, j) % a(k, k) != 0) {
            st.row_sub(k, i, Int(-1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a(k, k) < 0) st.row_neg(k);
  }
done:
  SmithForm out;
  out.diag.resize(kmax);
  for (std::size_t k = 0; k < kmax; ++k) out.diag[k] = abs(Int(a(k, k)));
  if (with_transforms) {
    out.left = std::move(st.l);
    out.left_inv = std::move(st.linv);
    out.right = std::move(st.r);
  }
  return out;
}

RatMatrix rat_inverse(const RatMatrix& in) {
  const std::size_t n = in.rows();
  RatMatrix a(in), inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    require(p < n, ErrorKind::InvalidInput, "singular matrix has no inverse");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    Rat piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::string to_string(const Int& x) { return x.get_str(); }
std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace cgk
