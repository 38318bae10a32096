#include "cgk/modular.hpp"

#include <numeric>
#include <utility>

#include "cgk/error.hpp"

namespace cgk {

i64 pow_mod(i64 a, i64 e, i64 n) {
  i64 r = 1 % n, b = mod_norm(a, n);
  while (e > 0) {
    if (e & 1) r = mul_mod(r, b, n);
    b = mul_mod(b, b, n);
    e >>= 1;
  }
  return r;
}

i64 gcd_i64(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

namespace {
// Extended gcd: returns g = gcd(a, b) >= 0 and s, t with s a + t b = g.
i64 xgcd(i64 a, i64 b, i64& s, i64& t) {
  i64 s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    i64 q = a / b;
    i64 r = a - q * b;
    a = b;
    b = r;
    i64 ns = s0 - q * s1;
    s0 = s1;
    s1 = ns;
    i64 nt = t0 - q * t1;
    t0 = t1;
    t1 = nt;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}
}  // namespace

std::optional<i64> inv_mod(i64 a, i64 n) {
  if (n == 1) return 0;
  i64 s, t;
  i64 g = xgcd(mod_norm(a, n), n, s, t);
  if (g != 1) return std::nullopt;
  return mod_norm(s, n);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ModInt::ModInt(i64 value, i64 modulus) : v_(0), n_(modulus) {
  require(modulus >= 1, ErrorKind::InvalidInput, "modulus must be positive");
  v_ = mod_norm(value, modulus);
}
ModInt ModInt::operator+(const ModInt& o) const { return ModInt(v_ + o.v_, n_); }
ModInt ModInt::operator-(const ModInt& o) const { return ModInt(v_ - o.v_, n_); }
ModInt ModInt::operator*(const ModInt& o) const { return ModInt(mul_mod(v_, o.v_, n_), n_); }
ModInt ModInt::operator-() const { return ModInt(-v_, n_); }
bool ModInt::invertible() const { return inv_mod(v_, n_).has_value(); }
ModInt ModInt::inverse() const {
  auto r = inv_mod(v_, n_);
  require(r.has_value(), ErrorKind::InvalidInput, "residue is not a unit");
  return ModInt(*r, n_);
}
ModInt ModInt::pow(i64 e) const {
  if (e < 0) return inverse().pow(-e);
  return ModInt(pow_mod(v_, e, n_), n_);
}

std::vector<i64> roots_of_unity_mod(i64 d, i64 n) {
  require(n >= 2, ErrorKind::InvalidInput, "modulus must be at least 2");
  std::vector<i64> out;
  for (i64 r = 0; r < n; ++r)
    if (pow_mod(r, d, n) == 1) out.push_back(r);
  return out;
}

std::vector<i64> cube_roots_mod(i64 n) { return roots_of_unity_mod(3, n); }

std::vector<std::size_t> rref_mod_p(std::vector<ModRow>& rows, i64 p) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t k = rows[0].size();
  for (auto& r : rows)
    for (auto& x : r) x = mod_norm(x, p);
  std::size_t r = 0;
  for (std::size_t j = 0; j < k && r < rows.size(); ++j) {
    std::size_t s = r;
    while (s < rows.size() && rows[s][j] == 0) ++s;
    if (s == rows.size()) continue;
    std::swap(rows[r], rows[s]);
    i64 inv = *inv_mod(rows[r][j], p);
    for (auto& x : rows[r]) x = mul_mod(x, inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][j] == 0) continue;
      i64 f = rows[i][j];
      for (std::size_t c = 0; c < k; ++c)
        rows[i][c] = mod_norm(rows[i][c] - mul_mod(f, rows[r][c], p), p);
    }
    pivots.push_back(j);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank_mod_p(std::vector<ModRow> rows, i64 p) {
  return rref_mod_p(rows, p).size();
}

std::vector<ModRow> nullspace_mod_p(const std::vector<ModRow>& a, std::size_t ncols, i64 p) {
  std::vector<ModRow> rows = a;
  auto piv = rref_mod_p(rows, p);
  std::vector<bool> is_piv(ncols, false);
  for (auto j : piv) is_piv[j] = true;
  std::vector<ModRow> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    ModRow v(ncols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = mod_norm(-rows[i][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<ModRow> howell_form(std::vector<ModRow> a, i64 n, std::size_t k) {
  for (auto& row : a) {
    require(row.size() == k, ErrorKind::InvalidInput, "row width mismatch");
    for (auto& x : row) x = mod_norm(x, n);
  }
  std::size_t r = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (r >= a.size()) break;
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][j] == 0) continue;
      i64 s, t;
      i64 x = a[r][j], y = a[i][j];
      i64 g = xgcd(x, y, s, t);
      i64 u = -(y / g), v = x / g;
      for (std::size_t c = 0; c < k; ++c) {
        i64 pr = a[r][c], pi = a[i][c];
        a[r][c] = mod_norm(mul_mod(s, pr, n) + mul_mod(t, pi, n), n);
        a[i][c] = mod_norm(mul_mod(mod_norm(u, n), pr, n) + mul_mod(v, pi, n), n);
      }
    }
    if (a[r][j] == 0) continue;
    i64 x = a[r][j];
    i64 g = gcd_i64(x, n);
    i64 np = n / g;
    i64 w = 1;
    if (np > 1) {
      w = *inv_mod((x / g) % np, np);
      while (gcd_i64(w, n) != 1) w += np;
    }
    for (auto& c : a[r]) c = mul_mod(c, w, n);
    for (std::size_t i = 0; i < r; ++i) {
      i64 q = a[i][j] / g;
      if (q == 0) continue;
      for (std::size_t c = 0; c < k; ++c)
        a[i][c] = mod_norm(a[i][c] - mul_mod(q, a[r][c], n), n);
    }
    ModRow ann(k);
    bool nonzero = false;
    for (std::size_t c = 0; c < k; ++c) {
      ann[c] = mul_mod(np, a[r][c], n);
      nonzero |= ann[c] != 0;
    }
    if (nonzero) a.push_back(std::move(ann));
    ++r;
  }
  a.resize(std::min(r, a.size()));
  return a;
}

i64 howell_order(const std::vector<ModRow>& h, i64 n) {
  i64 ord = 1;
  for (const auto& row : h)
    for (i64 x : row)
      if (x != 0) {
        ord *= n / x;
        break;
      }
  return ord;
}

std::optional<std::vector<ModRow>> inverse_mod(const std::vector<ModRow>& in, i64 n) {
  const std::size_t k = in.size();
  std::vector<ModRow> a = in, inv(k, ModRow(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    inv[i][i] = 1 % n;
    for (auto& x : a[i]) x = mod_norm(x, n);
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t s = j;
    while (s < k && !inv_mod(a[s][j], n)) ++s;
    if (s == k) return std::nullopt;
    std::swap(a[j], a[s]);
    std::swap(inv[j], inv[s]);
    i64 w = *inv_mod(a[j][j], n);
    for (std::size_t c = 0; c < k; ++c) {
      a[j][c] = mul_mod(a[j][c], w, n);
      inv[j][c] = mul_mod(inv[j][c], w, n);
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (i == j || a[i][j] == 0) continue;
      i64 f = a[i][j];
      for (std::size_t c = 0; c < k; ++c) {
        a[i][c] = mod_norm(a[i][c] - mul_mod(f, a[j][c], n), n);
        inv[i][c] = mod_norm(inv[i][c] - mul_mod(f, inv[j][c], n), n);
      }
    }
  }
  return inv;
}

i64 to_i64(const Int& x) {
  require(x.fits_slong_p(), ErrorKind::InvalidInput, "integer does not fit in 64 bits");
  return x.get_si();
}

i64 mod_of(const Int& x, i64 n) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n));
  return r.get_si();
}

}  // namespace cgk
