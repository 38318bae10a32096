#include <algorithm>
#include <random>

#include "cgk/cyclotomic.hpp"
#include "cgk/factor.hpp"
#include "cgk/inertia.hpp"
#include "cgk/kernels.hpp"
#include "cgk/modular.hpp"
#include "cgk/poly.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cgk;

namespace {

QPoly random_poly(std::mt19937& rng, int deg, int range) {
  std::uniform_int_distribution<int> coef(-range, range);
  std::vector<Rat> c(deg + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return QPoly(c);
}

QPoly product(const QFactorization& f) {
  QPoly p = QPoly::constant(f.unit);
  for (const auto& [z, m] : f.factors) p = p * pow(to_qpoly(z), m);
  return p;
}

}  // namespace

TEST_CASE("factorization reproduces its input and factors are irreducible") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    QPoly a = random_poly(rng, 1 + trial % 3, 6);
    QPoly b = random_poly(rng, 1 + trial % 4, 6);
    QPoly f = a * b * (trial % 5 == 0 ? a : QPoly{1});
    if (f.is_zero()) continue;
    QFactorization fac = factor_over_q(f);
    CHECK(product(fac) == f);
    for (const auto& [z, m] : fac.factors) {
      CHECK(m >= 1);
      CHECK(z.back() > 0);
    }
  }
  // Known splittings.
  CHECK(factor_over_q(QPoly{1, 0, 0, 0, -1}).factors.size() == 3);  // (x-1)(x+1)(x^2+1)
  CHECK(factor_over_q(QPoly{2, -5, 2}).factors.size() == 2);        // (2x-1)(x-2)
  CHECK(is_irreducible_over_q(QPoly{1, -3, 1}));
  CHECK(is_irreducible_over_q(QPoly{1, 0, 0, 0, 1}));
  CHECK_FALSE(is_irreducible_over_q(QPoly{4, 0, 0, 0, 1}));  // Sophie Germain
  CHECK(is_irreducible_over_q(cyclotomic_poly(15)));
}

TEST_CASE("Sturm counts match planted integer roots") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    // Roots at distinct integers r_1..r_k times an irreducible quadratic.
    int k = 1 + trial % 4;
    std::vector<int> roots;
    QPoly f{1};
    for (int i = 0; i < k; ++i) {
      int r;
      do r = static_cast<int>(rng() % 21) - 10;
      while (std::find(roots.begin(), roots.end(), r) != roots.end());
      roots.push_back(r);
      f = f * QPoly{-r, 1};
    }
    f = f * QPoly{1, 0, 1};
    SturmSequence s(f);
    int lo = -7, hi = 4;
    long expected = std::count_if(roots.begin(), roots.end(), [&](int r) { return r > lo && r <= hi; });
    CHECK(s.count(lo, hi) == expected);
    CHECK(s.count(-100, 100) == k);
  }
}

TEST_CASE("inertia matches floating point eigenvalues") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 1 + trial % 6;
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = static_cast<long>(rng() % 9) - 4;
    if (trial % 7 == 0 && n > 1)  // force a kernel
      for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = a(j, n - 1) = a(0, j);
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j).get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    int pos = 0, neg = 0, zero = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
      double e = es.eigenvalues()[i];
      if (e > oracle::kEigTol)
        ++pos;
      else if (e < -oracle::kEigTol)
        ++neg;
      else
        ++zero;
    }
    Inertia in = inertia(a);
    CHECK(in.pos == pos);
    CHECK(in.neg == neg);
    CHECK(in.zero == zero);
  }
}

TEST_CASE("determinant and Smith form") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 5;
    IntMatrix a(n, n);
    for (auto& x : a.data()) x = static_cast<long>(rng() % 11) - 5;
    CHECK(det_bareiss(a) == oracle::det(a));
    SmithForm s = smith_form(a);
    IntMatrix d = s.left * a * s.right;
    Int prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(d(i, i) == s.diag[i]);
      prod *= s.diag[i];
      if (i + 1 < n && s.diag[i] != 0) CHECK(s.diag[i + 1] % s.diag[i] == 0);
    }
    CHECK(prod == abs(oracle::det(a)));
    CHECK(s.left * s.left_inv == IntMatrix::identity(n));
  }
}

TEST_CASE("roots of unity modulo prime powers") {
  CHECK(cube_roots_mod(49) == std::vector<i64>{1, 18, 30});
  CHECK(cube_roots_mod(7) == std::vector<i64>{1, 2, 4});
  for (i64 r : cube_roots_mod(343)) CHECK(pow_mod(r, 3, 343) == 1);
  CHECK(roots_of_unity_mod(6, 7).size() == 6);
}

TEST_CASE("Howell form is canonical for the row span") {
  std::mt19937 rng(19);
  const i64 n = 12;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<ModRow> gens(1 + trial % 3, ModRow(3));
    for (auto& g : gens)
      for (auto& x : g) x = static_cast<i64>(rng() % n);
    // Same span: add a random combination and a unit multiple.
    std::vector<ModRow> other = gens;
    ModRow extra(3, 0);
    for (const auto& g : gens) {
      i64 c = static_cast<i64>(rng() % n);
      for (int j = 0; j < 3; ++j) extra[j] = (extra[j] + c * g[j]) % n;
    }
    other.push_back(extra);
    for (auto& x : other[0]) x = (5 * x) % n;
    std::reverse(other.begin(), other.end());
    auto h1 = howell_form(gens, n, 3), h2 = howell_form(other, n, 3);
    CHECK(h1 == h2);
    // Order agrees with the brute force closure.
    CHECK(static_cast<std::size_t>(howell_order(h1, n)) == oracle::closure({n, n, n}, gens).size());
  }
}

TEST_CASE("cyclotomic arithmetic") {
  const int p = 7;
  CycNum z = CycNum::zeta_pow(p, 1);
  CycNum one = CycNum::rational(p, 1);
  CycNum acc(p);
  for (int k = 0; k < p; ++k) acc = acc + CycNum::zeta_pow(p, k);
  CHECK(acc.is_zero());
  CHECK(CycNum::zeta_pow(p, 7) == one);
  CHECK(z * z.conj() == one);
  CycNum x = one + z * CycNum::rational(p, 3) - CycNum::zeta_pow(p, 4);
  CHECK(x * x.inverse() == one);
  CHECK(CycNum::zeta_pow(p, 3).as_signed_root_of_unity() == 4);
  CHECK((-CycNum::zeta_pow(p, 0)).as_signed_root_of_unity() == -1);
  CHECK(x.as_signed_root_of_unity() == 0);

  RatLaurent d(QPoly{2, -5, 2});
  CycLaurent f = cyc_eval(d, 1, p);
  CHECK(f.is_associate(f.scaled(CycNum::zeta_pow(p, 3)).shifted(2)));
  CHECK(f.is_associate(f.scaled(-one)));
  CHECK_FALSE(f.is_associate(cyc_eval(d, 2, p)));
  // conj(Delta(zeta t)) = Delta((zeta t)^-1), associate to Delta(zeta t) for symmetric Delta.
  CHECK(f.conj().is_associate(f));
  CHECK_FALSE(f.conj().is_associate(cyc_eval(d, -1, p)));
}

TEST_CASE("vector kernels agree with the scalar reference") {
  using namespace cgk::kernels;
  std::mt19937 rng(23);
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (!isa_supported(isa)) continue;
    const Ops& fast = ops_for(isa);
    const Ops& ref = scalar_ops();
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t n = rng() % 67;
      std::int32_t m = trial % 2 ? kMaxModulus : static_cast<std::int32_t>(2 + rng() % 100);
      std::vector<std::int32_t> src(n), a(n), b;
      for (auto& x : src) x = static_cast<std::int32_t>(rng() % m);
      for (auto& x : a) x = static_cast<std::int32_t>(rng() % m);
      if (n) a[0] = 0;
      b = a;
      std::int32_t coef = static_cast<std::int32_t>(rng() % m);
      fast.axpy_mod(a.data(), src.data(), n, coef, m);
      ref.axpy_mod(b.data(), src.data(), n, coef, m);
      CHECK(a == b);
      CHECK(fast.count_nonzero(a.data(), n) == ref.count_nonzero(a.data(), n));
    }
  }
  CHECK(scalar_ops().axpy_mod != nullptr);
}
