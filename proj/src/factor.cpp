#include "cgk/factor.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "cgk/error.hpp"
#include "cgk/modular.hpp"

namespace cgk {

namespace {

// ---- polynomials over F_p -------------------------------------------------

using FP = std::vector<i64>;

void fp_trim(FP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int fp_deg(const FP& a) { return static_cast<int>(a.size()) - 1; }

FP fp_sub(const FP& a, const FP& b, i64 p) {
  FP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod_norm(r[i] - b[i], p);
  fp_trim(r);
  return r;
}

FP fp_mul(const FP& a, const FP& b, i64 p) {
  if (a.empty() || b.empty()) return {};
  FP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
  }
  fp_trim(r);
  return r;
}

void fp_divmod(const FP& a, const FP& b, i64 p, FP& q, FP& r) {
  r = a;
  fp_trim(r);
  const int db = fp_deg(b);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  i64 inv = *inv_mod(b.back(), p);
  for (int i = fp_deg(r); i >= db; --i) {
    i64 f = mul_mod(r[static_cast<std::size_t>(i)], inv, p);
    if (f == 0) continue;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(i - db + j);
      r[idx] = mod_norm(r[idx] - mul_mod(f, b[static_cast<std::size_t>(j)], p), p);
    }
  }
  fp_trim(r);
  fp_trim(q);
}

FP fp_mod(const FP& a, const FP& b, i64 p) {
  FP q, r;
  fp_divmod(a, b, p, q, r);
  return r;
}

FP fp_monic(FP a, i64 p) {
  if (a.empty()) return a;
  i64 inv = *inv_mod(a.back(), p);
  for (auto& x : a) x = mul_mod(x, inv, p);
  return a;
}

FP fp_gcd(FP a, FP b, i64 p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FP r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

// Extended gcd with s a + t b = 1 (a, b coprime).
void fp_xgcd(const FP& a, const FP& b, i64 p, FP& s, FP& t) {
  FP r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    FP q, r;
    fp_divmod(r0, r1, p, q, r);
    FP ns = fp_sub(s0, fp_mul(q, s1, p), p);
    FP nt = fp_sub(t0, fp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(ns);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  require(fp_deg(r0) == 0, ErrorKind::InternalInvariantViolation, "xgcd inputs not coprime");
  i64 inv = *inv_mod(r0[0], p);
  for (auto& x : s0) x = mul_mod(x, inv, p);
  for (auto& x : t0) x = mul_mod(x, inv, p);
  s = s0;
  t = t0;
}

FP fp_powmod(FP base, const Int& e, const FP& m, i64 p) {
  FP r{1};
  base = fp_mod(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = fp_mod(fp_mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mod(fp_mul(r, base, p), m, p);
  }
  return r;
}

void fp_equal_degree(const FP& g, int d, i64 p, std::mt19937_64& rng, std::vector<FP>& out) {
  if (fp_deg(g) == d) {
    out.push_back(g);
    return;
  }
  Int e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<i64> dist(0, p - 1);
  for (;;) {
    FP a(static_cast<std::size_t>(fp_deg(g)), 0);
    for (auto& x : a) x = dist(rng);
    fp_trim(a);
    if (fp_deg(a) < 1) continue;
    FP b = fp_sub(fp_powmod(a, e, g, p), FP{1}, p);
    FP h = fp_gcd(g, b, p);
    if (fp_deg(h) > 0 && fp_deg(h) < fp_deg(g)) {
      FP q, r;
      fp_divmod(g, h, p, q, r);
      fp_equal_degree(h, d, p, rng, out);
      fp_equal_degree(fp_monic(q, p), d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial over F_p.
std::vector<FP> fp_factor(FP f, i64 p) {
  std::vector<FP> out;
  std::mt19937_64 rng(0x5eed0000ULL + static_cast<std::uint64_t>(p));
  FP h{0, 1};
  for (int d = 1; fp_deg(f) >= 2 * d; ++d) {
    h = fp_powmod(h, Int(p), f, p);
    FP g = fp_gcd(f, fp_sub(h, FP{0, 1}, p), p);
    if (fp_deg(g) > 0) {
      fp_equal_degree(g, d, p, rng, out);
      FP q, r;
      fp_divmod(f, g, p, q, r);
      f = fp_monic(q, p);
      h = fp_mod(h, f, p);
    }
  }
  if (fp_deg(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- polynomials over Z/m (non-negative representatives) ------------------

using ZM = std::vector<Int>;

void zm_trim(ZM& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
Int zmod(const Int& x, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}
ZM zm_red(ZM a, const Int& m) {
  for (auto& x : a) x = zmod(x, m);
  zm_trim(a);
  return a;
}
ZM zm_add(const ZM& a, const ZM& b, const Int& m) {
  ZM r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return zm_red(std::move(r), m);
}
ZM zm_sub(const ZM& a, const ZM& b, const Int& m) {
  ZM r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return zm_red(std::move(r), m);
}
ZM zm_mul(const ZM& a, const ZM& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZM r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zm_red(std::move(r), m);
}
// Division by a monic polynomial.
void zm_divmod(const ZM& a, const ZM& b, const Int& m, ZM& q, ZM& r) {
  r = zm_red(a, m);
  const int db = static_cast<int>(b.size()) - 1;
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Int(0));
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    Int f = r[static_cast<std::size_t>(i)];
    if (f == 0) continue;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(i - db + j);
      r[idx] = zmod(r[idx] - f * b[static_cast<std::size_t>(j)], m);
    }
  }
  zm_trim(r);
  zm_trim(q);
}

ZM from_fp(const FP& a) {
  ZM r;
  for (i64 x : a) r.emplace_back(static_cast<long>(x));
  return r;
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m -> mod m^2.
void hensel_step(const ZM& f, ZM& g, ZM& h, ZM& s, ZM& t, const Int& m2) {
  ZM e = zm_sub(f, zm_mul(g, h, m2), m2);
  ZM q, r;
  zm_divmod(zm_mul(s, e, m2), h, m2, q, r);
  ZM g2 = zm_add(g, zm_add(zm_mul(t, e, m2), zm_mul(q, g, m2), m2), m2);
  ZM h2 = zm_add(h, r, m2);
  ZM b = zm_sub(zm_add(zm_mul(s, g2, m2), zm_mul(t, h2, m2), m2), ZM{Int(1)}, m2);
  ZM c, d;
  zm_divmod(zm_mul(s, b, m2), h2, m2, c, d);
  s = zm_sub(s, d, m2);
  t = zm_sub(t, zm_add(zm_mul(t, b, m2), zm_mul(c, g2, m2), m2), m2);
  g = std::move(g2);
  h = std::move(h2);
}

// ---- integer polynomial helpers -----------------------------------------

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int zp_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

Int zp_content(const ZPoly& a) {
  Int g = 0;
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

ZPoly zp_primitive(ZPoly a) {
  zp_trim(a);
  if (a.empty()) return a;
  Int g = zp_content(a);
  if (a.back() < 0) g = -g;
  for (auto& x : a) x /= g;
  return a;
}

std::optional<ZPoly> zp_divexact(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  const int db = zp_deg(b);
  if (zp_deg(a) < db) return std::nullopt;
  ZPoly q(static_cast<std::size_t>(zp_deg(a) - db + 1), Int(0));
  for (int i = zp_deg(a); i >= db; --i) {
    const Int& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Int f = top / b.back();
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
  }
  for (const auto& x : r)
    if (x != 0) return std::nullopt;
  zp_trim(q);
  return q;
}

FP zp_mod_p(const ZPoly& a, i64 p) {
  FP r;
  for (const auto& x : a) r.push_back(mod_of(x, p));
  fp_trim(r);
  return r;
}

FP fp_derivative(const FP& a, i64 p) {
  FP r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mul_mod(a[i], static_cast<i64>(i) % p, p));
  fp_trim(r);
  return r;
}

Int symmetric_rep(const Int& x, const Int& m) {
  Int r = zmod(x, m);
  if (2 * r > m) r -= m;
  return r;
}

// Zassenhaus on a primitive squarefree integer polynomial of degree >= 1
// with nonzero constant term.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = zp_deg(f);
  if (n <= 1) return {f};
  const Int& lc = f.back();

  // Pick the prime giving the fewest modular factors among a few candidates.
  i64 best_p = 0;
  std::vector<FP> best;
  int tried = 0;
  for (i64 p = 3; tried < 6 && p < 10000; p += 2) {
    if (!is_prime(p) || mod_of(lc, p) == 0) continue;
    FP fp = zp_mod_p(f, p);
    if (fp_deg(fp_gcd(fp, fp_derivative(fp, p), p)) > 0) continue;
    ++tried;
    auto fac = fp_factor(fp_monic(fp, p), p);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) break;
  }
  require(best_p != 0, ErrorKind::InternalInvariantViolation, "no suitable prime for factorization");
  if (best.size() == 1) return {f};
  const i64 p = best_p;

  // Coefficient bound for lc * (any factor), then lift past twice that.
  Int norm2 = 0;
  for (const auto& x : f) norm2 += x * x;
  Int root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Int bound = abs(lc) * root;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  Int m = p;
  while (m <= 2 * bound) m *= m;

  // Multifactor lift by peeling one factor at a time.
  std::vector<ZM> lifted;
  ZM current = zm_red(ZM(f.begin(), f.end()), m);
  const std::size_t r = best.size();
  for (std::size_t i = 0; i + 1 < r; ++i) {
    FP rest{1};
    for (std::size_t j = i + 1; j < r; ++j) rest = fp_mul(rest, best[j], p);
    FP g0 = best[i];
    if (i == 0) {
      i64 l = mod_of(lc, p);
      for (auto& x : g0) x = mul_mod(x, l, p);
    }
    FP s0, t0;
    fp_xgcd(g0, rest, p, s0, t0);
    ZM g = from_fp(g0), h = from_fp(rest), s = from_fp(s0), t = from_fp(t0);
    Int mod = p;
    while (mod < m) {
      mod *= mod;
      hensel_step(zm_red(current, mod), g, h, s, t, mod);
    }
    lifted.push_back(g);
    current = h;
  }
  lifted.push_back(current);
  // Make the first factor monic as well.
  {
    Int inv;
    Int lcm_ = zmod(lc, m);
    mpz_invert(inv.get_mpz_t(), lcm_.get_mpz_t(), m.get_mpz_t());
    for (auto& x : lifted[0]) x = zmod(x * inv, m);
  }

  std::vector<ZPoly> result;
  ZPoly F = f;
  std::vector<ZM> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZM prod{zmod(F.back(), m)};
      for (auto i : idx) prod = zm_mul(prod, pool[i], m);
      ZPoly G;
      for (const auto& x : prod) G.push_back(symmetric_rep(x, m));
      G = zp_primitive(G);
      if (zp_deg(G) > 0) {
        if (auto q = zp_divexact(F, G)) {
          result.push_back(G);
          F = zp_primitive(*q);
          std::vector<ZM> next;
          for (std::size_t i = 0; i < pool.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(pool[i]);
          pool = std::move(next);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == pool.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (zp_deg(F) > 0) result.push_back(F);
  return result;
}

}  // namespace

QPoly to_qpoly(const ZPoly& z) {
  std::vector<Rat> c;
  for (const auto& x : z) c.emplace_back(x);
  return QPoly(std::move(c));
}

ZPoly primitive_zpoly(const QPoly& f) {
  QPoly p = f.primitive();
  ZPoly z = p.integer_coeffs();
  return zp_primitive(z);
}

QFactorization factor_over_q(const QPoly& f) {
  require(!f.is_zero(), ErrorKind::InvalidInput, "cannot factor the zero polynomial");
  QFactorization out;
  QPoly prim = f.primitive();
  ZPoly z = zp_primitive(prim.integer_coeffs());
  out.unit = f.leading() / Rat(z.back());
  std::vector<std::pair<ZPoly, int>> acc;

  int xpow = 0;
  while (z.size() > 1 && z[0] == 0) {
    z.erase(z.begin());
    ++xpow;
  }
  if (xpow > 0) acc.push_back({ZPoly{Int(0), Int(1)}, xpow});

  // Yun squarefree decomposition over Q.
  QPoly a = to_qpoly(z);
  if (a.degree() > 0) {
    QPoly c = gcd(a, a.derivative());
    QPoly w = a / c;
    int i = 1;
    while (c.degree() > 0) {
      QPoly y = gcd(w, c);
      QPoly zq = w / y;
      if (zq.degree() > 0)
        for (auto& g : zassenhaus(primitive_zpoly(zq))) acc.push_back({zp_primitive(g), i});
      ++i;
      w = y;
      c = c / y;
    }
    if (w.degree() > 0)
      for (auto& g : zassenhaus(primitive_zpoly(w))) acc.push_back({zp_primitive(g), i});
  }
  std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  out.factors = std::move(acc);
  return out;
}

bool is_irreducible_over_q(const QPoly& f) {
  if (f.degree() < 1) return false;
  auto fac = factor_over_q(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace cgk
