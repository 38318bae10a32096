#pragma once

// Test-side reference computations. None of these call into the code paths
// they are used to check: signatures come from floating-point Hermitian
// eigenvalues, cover orders from complex evaluation, labelings and
// metabolizer conditions from brute force.

#include <Eigen/Dense>
#include <complex>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cgk/cover.hpp"
#include "cgk/diagram.hpp"
#include "cgk/matrix.hpp"
#include "cgk/metab.hpp"

namespace oracle {

using cgk::i64;
using cgk::IntMatrix;
using cgk::ModRow;

// Eigenvalues closer to zero than this count as zero. The test matrices have
// small integer entries and t is kept away from jump points, so the smallest
// nonzero eigenvalue is far above this.
inline constexpr double kEigTol = 1e-7;

inline int hermitian_signature(const IntMatrix& v, double t) {
  const std::size_t n = v.rows();
  const std::complex<double> w = std::polar(1.0, 2 * M_PI * t);
  Eigen::MatrixXcd h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = (1.0 - w) * v(i, j).get_d() + (1.0 - std::conj(w)) * v(j, i).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  int s = 0;
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    double e = es.eigenvalues()[k];
    if (e > kEigTol) ++s;
    if (e < -kEigTol) --s;
  }
  return s;
}

// Smallest |eigenvalue|, used to skip near-singular samples.
inline double hermitian_gap(const IntMatrix& v, double t) {
  const std::size_t n = v.rows();
  const std::complex<double> w = std::polar(1.0, 2 * M_PI * t);
  Eigen::MatrixXcd h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = (1.0 - w) * v(i, j).get_d() + (1.0 - std::conj(w)) * v(j, i).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  return es.eigenvalues().cwiseAbs().minCoeff();
}

// prod_{i=1}^{d-1} |Delta(zeta_d^i)| from ascending coefficients.
inline double cover_order(const std::vector<double>& coeffs, int d) {
  double prod = 1;
  for (int i = 1; i < d; ++i) {
    const std::complex<double> z = std::polar(1.0, 2 * M_PI * i / d);
    std::complex<double> acc = 0, pw = 1;
    for (double c : coeffs) {
      acc += c * pw;
      pw *= z;
    }
    prod *= std::abs(acc);
  }
  return prod;
}

// Integer determinant by cofactor expansion (small matrices only).
inline cgk::Int det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  cgk::Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    cgk::Int term = m(0, c) * det(minor);
    total += (c % 2 ? -term : term);
  }
  return total;
}

// det(V - t V^T) at an integer t.
inline cgk::Int alexander_at(const IntMatrix& v, long t) {
  IntMatrix m(v.rows(), v.cols());
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j) m(i, j) = v(i, j) - t * v(j, i);
  return det(m);
}

// Number of labelings by exhaustive search over Z/n^arcs.
inline long brute_labelings(const cgk::Diagram& d, i64 n, i64 q) {
  const std::size_t m = d.arcs;
  i64 qinv = 1;
  while ((qinv * ((q % n + n) % n)) % n != 1) ++qinv;
  std::vector<i64> b(m, 0);
  long count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& c : d.crossings) {
      i64 qe = c.sign > 0 ? ((q % n) + n) % n : qinv;
      i64 lhs = (b[c.out] - qe * b[c.in] - (1 - qe) * b[c.over]) % n;
      if (lhs != 0) {
        ok = false;
        break;
      }
    }
    count += ok;
    std::size_t i = 0;
    while (i < m && b[i] == n - 1) b[i++] = 0;
    if (i == m) break;
    ++b[i];
  }
  return count;
}

// Every element of the subgroup generated by `gens` (closure by addition).
inline std::set<ModRow> closure(const std::vector<i64>& factors, const std::vector<ModRow>& gens) {
  std::set<ModRow> seen{ModRow(factors.size(), 0)};
  std::vector<ModRow> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<ModRow> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        ModRow y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] + g[i]) % factors[i];
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier.swap(next);
  }
  return seen;
}

// Self-annihilating and |A|^2 = |G|, checked elementwise with exact
// rational pairing values.
inline bool is_metabolizer(const cgk::LinkingForm& l, const std::set<ModRow>& a) {
  i64 order = 1;
  for (i64 f : l.factors) order *= f;
  if (static_cast<i64>(a.size()) * static_cast<i64>(a.size()) != order) return false;
  for (const auto& x : a)
    for (const auto& y : a) {
      cgk::Rat s = 0;
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) s += l.value(i, j) * x[i] * y[j];
      if (s.get_den() != 1) return false;
    }
  return true;
}

// Pool of small metabolic forms with trivial deck action. Pairing values are
// scaled by a random unit so the pool covers several isometry classes.
inline cgk::LinkingForm random_metabolic(std::mt19937& rng) {
  auto unit = [&](long n) {
    long u;
    do u = 1 + static_cast<long>(rng() % (n - 1));
    while (std::gcd(u, n) != 1);
    return u;
  };
  switch (rng() % 6) {
    case 0: return cgk::LinkingForm::make({25}, {{cgk::Rat(unit(25), 25)}}, {{1}});
    case 1: return cgk::LinkingForm::make({9}, {{cgk::Rat(unit(9), 9)}}, {{1}});
    case 2: return cgk::LinkingForm::make({4}, {{cgk::Rat(unit(4), 4)}}, {{1}});
    case 3: {
      long u = unit(5);
      return cgk::LinkingForm::make({5, 5}, {{cgk::Rat(u, 5), 0}, {0, cgk::Rat(u, 5)}}, {{1, 0}, {0, 1}});
    }
    case 4: {
      long u = unit(3);
      return cgk::LinkingForm::make({3, 3}, {{0, cgk::Rat(u, 3)}, {cgk::Rat(u, 3), 0}}, {{1, 0}, {0, 1}});
    }
    default: {
      long u = unit(3);
      return cgk::LinkingForm::make({3, 3}, {{cgk::Rat(u, 3), 0}, {0, cgk::Rat(-u, 3)}}, {{1, 0}, {0, 1}});
    }
  }
}

// One randomized projection instance: random metabolic G1, G2, a random
// metabolizer A of G1 + G2 and A1 of G1. The library projection must equal
// the brute-force set {g in G2 : (g1, g) in A, g1 in A1} and pass the
// metabolizer check above.
inline bool projection_instance_ok(std::mt19937& rng) {
  using cgk::LinkingForm;
  LinkingForm g1 = random_metabolic(rng);
  LinkingForm g2 = random_metabolic(rng);
  if (rng() % 3 == 0) g2 = cgk::direct_sum(g2, random_metabolic(rng));
  LinkingForm g = cgk::direct_sum(g1, g2);
  auto ms = cgk::enumerate_metabolizers(g, false);
  auto m1 = cgk::enumerate_metabolizers(g1, false);
  if (ms.empty() || m1.empty()) return false;
  const auto& a = ms[rng() % ms.size()];
  const auto& a1 = m1[rng() % m1.size()];
  auto proj = cgk::project_metabolizer(g1, g2, a, a1);

  auto as_set = [](const std::vector<ModRow>& v) { return std::set<ModRow>(v.begin(), v.end()); };
  auto a_set = as_set(cgk::elements(g.factors, a));
  auto a1_set = as_set(cgk::elements(g1.factors, a1));
  std::set<ModRow> want;
  for (const auto& x : a_set) {
    ModRow head(x.begin(), x.begin() + g1.rank()), tail(x.begin() + g1.rank(), x.end());
    if (a1_set.count(head)) want.insert(tail);
  }
  auto got = as_set(cgk::elements(g2.factors, proj));
  return got == want && is_metabolizer(g2, got);
}

}  // namespace oracle
