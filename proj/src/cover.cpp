#include "cgk/cover.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cgk/error.hpp"

namespace cgk {

namespace {
i64 lcm_i64(i64 a, i64 b) { return a / gcd_i64(a, b) * b; }

i64 exponent_of(const std::vector<i64>& f) {
  i64 n = 1;
  for (i64 x : f) n = lcm_i64(n, x);
  return n;
}
}  // namespace

// ---------------------------------------------------------------- LinkingForm

LinkingForm LinkingForm::make(std::vector<i64> factors, const std::vector<std::vector<Rat>>& g,
                              std::vector<ModRow> deck) {
  LinkingForm l;
  l.factors = std::move(factors);
  l.exponent = exponent_of(l.factors);
  const std::size_t k = l.factors.size();
  l.gram.assign(k, ModRow(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rat v = g[i][j] * l.exponent;
      require(v.get_den() == 1, ErrorKind::InvalidInput, "pairing value incompatible with group exponent");
      l.gram[i][j] = mod_of(v.get_num(), l.exponent);
    }
  if (deck.empty()) {
    deck.assign(k, ModRow(k, 0));
    for (std::size_t i = 0; i < k; ++i) deck[i][i] = 1 % l.factors[i];
  }
  l.deck = std::move(deck);
  return l;
}

i64 LinkingForm::order() const {
  i64 o = 1;
  for (i64 x : factors) o *= x;
  return o;
}

Rat LinkingForm::value(std::size_t i, std::size_t j) const {
  Rat r(static_cast<long>(gram[i][j]), static_cast<long>(exponent));
  r.canonicalize();
  return r;
}

i64 LinkingForm::pair(const ModRow& x, const ModRow& y) const {
  i64 acc = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (y[j] == 0) continue;
      acc = (acc + mul_mod(mul_mod(x[i], y[j], exponent), gram[i][j], exponent)) % exponent;
    }
  }
  return acc;
}

ModRow LinkingForm::apply_deck(const ModRow& x) const {
  const std::size_t k = factors.size();
  ModRow y(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    if (x[j] == 0) continue;
    for (std::size_t i = 0; i < k; ++i) y[i] = (y[i] + mul_mod(deck[i][j], x[j], factors[i])) % factors[i];
  }
  return y;
}

ModRow LinkingForm::reduce(ModRow x) const {
  for (std::size_t i = 0; i < factors.size(); ++i) x[i] = mod_norm(x[i], factors[i]);
  return x;
}

// ---------------------------------------------------------------- covers

IntMatrix cover_presentation(const IntMatrix& v, int d) {
  require(d >= 2, ErrorKind::InvalidInput, "cover degree must be at least 2");
  const std::size_t n = v.rows();
  const std::size_t b = static_cast<std::size_t>(d - 1);
  const IntMatrix vt = v.transpose();
  IntMatrix q(b * n, b * n);
  for (std::size_t i = 0; i < b; ++i) {
    q.set_block(i * n, i * n, v + vt);
    if (i + 1 < b) {
      q.set_block(i * n, (i + 1) * n, -v);
      q.set_block((i + 1) * n, i * n, -vt);
    }
  }
  return q;
}

IntMatrix block_deck(std::size_t n, int d) {
  const std::size_t b = static_cast<std::size_t>(d - 1);
  IntMatrix t(b * n, b * n);
  for (std::size_t i = 0; i + 1 < b; ++i)
    for (std::size_t k = 0; k < n; ++k) t((i + 1) * n + k, i * n + k) = 1;
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t k = 0; k < n; ++k) t(r * n + k, (b - 1) * n + k) = -1;
  return t;
}

IntMatrix gamma_presentation(const IntMatrix& v, int d) {
  const std::size_t n = v.rows();
  RatMatrix g = rat_inverse(to_rat(v - v.transpose())) * to_rat(v);
  RatMatrix gm = g - RatMatrix::identity(n);
  RatMatrix a = RatMatrix::identity(n), b = RatMatrix::identity(n);
  for (int i = 0; i < d; ++i) {
    a = a * g;
    b = b * gm;
  }
  RatMatrix p = a - b;
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      require(p(i, j).get_den() == 1, ErrorKind::InternalInvariantViolation, "Gamma presentation not integral");
      out(i, j) = p(i, j).get_num();
    }
  return out;
}

CoverHomology branched_cover(const IntMatrix& v, int d) {
  CoverHomology h;
  h.degree = d;
  h.presentation = cover_presentation(v, d);
  h.order = 1;
  if (h.presentation.rows() == 0) return h;
  SmithForm s = smith_form(h.presentation, true);
  for (const auto& x : s.diag)
    if (x == 0) fail(ErrorKind::InfiniteHomology, "the " + std::to_string(d) + "-fold branched cover has infinite first homology");
  for (std::size_t i = 0; i < s.diag.size(); ++i) {
    h.order *= s.diag[i];
    if (s.diag[i] > 1) {
      h.active.push_back(i);
      h.invariant_factors.push_back(s.diag[i]);
    }
  }
  IntMatrix t = block_deck(v.rows(), d);
  IntMatrix tinv = IntMatrix::identity(t.rows());
  for (int i = 0; i < d - 1; ++i) tinv = tinv * t;
  IntMatrix dm = s.left * tinv.transpose() * s.left_inv;
  const std::size_t k = h.active.size();
  h.deck.assign(k, ModRow(k, 0));
  for (std::size_t a = 0; a < k; ++a) {
    i64 na = to_i64(h.invariant_factors[a]);
    for (std::size_t b = 0; b < k; ++b) h.deck[a][b] = mod_of(dm(h.active[a], h.active[b]), na);
  }
  h.left = std::move(s.left);
  h.left_inv = std::move(s.left_inv);
  h.right = std::move(s.right);
  h.diag = std::move(s.diag);
  return h;
}

LinkingForm linking_form(const CoverHomology& h) {
  LinkingForm l;
  const std::size_t k = h.active.size();
  for (const auto& f : h.invariant_factors) l.factors.push_back(to_i64(f));
  l.exponent = exponent_of(l.factors);
  l.deck = h.deck;
  l.gram.assign(k, ModRow(k, 0));
  if (k == 0) return l;
  IntMatrix x = h.left_inv.transpose() * h.right;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      i64 nb = l.factors[b];
      Int num = -x(h.active[a], h.active[b]) * (l.exponent / nb);
      l.gram[a][b] = mod_of(num, l.exponent);
    }
  validate_linking_form(l);
  return l;
}

LinkingForm linking_form(const IntMatrix& v, int d) { return linking_form(branched_cover(v, d)); }

bool is_nonsingular(const LinkingForm& l) {
  if (l.factors.empty()) return true;
  // Image of the adjoint map in (Z/N)^k must have the full group order.
  std::vector<ModRow> rows = l.gram;
  return howell_order(howell_form(rows, l.exponent, l.rank()), l.exponent) == l.order();
}

void validate_linking_form(const LinkingForm& l) {
  const std::size_t k = l.rank();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      require(l.gram[i][j] == l.gram[j][i], ErrorKind::InternalInvariantViolation, "linking form is not symmetric");
      // lk(g_i, g_j) must be killed by n_i.
      require(mul_mod(l.gram[i][j], l.factors[i], l.exponent) == 0, ErrorKind::InternalInvariantViolation,
              "linking form value incompatible with generator order");
    }
  require(is_nonsingular(l), ErrorKind::InternalInvariantViolation, "linking form is singular");
  for (std::size_t i = 0; i < k; ++i) {
    ModRow ei(k, 0);
    ei[i] = 1;
    ModRow ti = l.apply_deck(ei);
    for (std::size_t j = 0; j < k; ++j) {
      ModRow ej(k, 0);
      ej[j] = 1;
      require(l.pair(ti, l.apply_deck(ej)) == l.gram[i][j], ErrorKind::InternalInvariantViolation,
              "linking form is not deck invariant");
    }
  }
}

LinkingForm direct_sum(const LinkingForm& a, const LinkingForm& b) {
  LinkingForm s;
  s.factors = a.factors;
  s.factors.insert(s.factors.end(), b.factors.begin(), b.factors.end());
  s.exponent = exponent_of(s.factors);
  const std::size_t ka = a.rank(), k = s.rank();
  s.gram.assign(k, ModRow(k, 0));
  s.deck.assign(k, ModRow(k, 0));
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < ka; ++j) {
      s.gram[i][j] = a.gram[i][j] * (s.exponent / a.exponent);
      s.deck[i][j] = a.deck[i][j];
    }
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) {
      s.gram[ka + i][ka + j] = b.gram[i][j] * (s.exponent / b.exponent);
      s.deck[ka + i][ka + j] = b.deck[i][j];
    }
  return s;
}

LinkingForm negate(const LinkingForm& l) {
  LinkingForm n = l;
  for (auto& row : n.gram)
    for (auto& x : row) x = mod_norm(-x, n.exponent);
  return n;
}

LinkingForm primary_part(const LinkingForm& l, i64 p) {
  std::vector<std::size_t> idx;
  std::vector<i64> pe, m;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    i64 n = l.factors[i], q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    if (q > 1) {
      idx.push_back(i);
      pe.push_back(q);
      m.push_back(n);
    }
  }
  LinkingForm out;
  out.factors = pe;
  out.exponent = exponent_of(pe);
  const std::size_t k = idx.size();
  out.gram.assign(k, ModRow(k, 0));
  out.deck.assign(k, ModRow(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      // lk(m_a g_a, m_b g_b) has denominator dividing the p-part exponent.
      Rat v = l.value(idx[a], idx[b]) * Rat(static_cast<long>(m[a] * m[b]));
      v *= out.exponent;
      require(v.get_den() == 1, ErrorKind::InternalInvariantViolation, "primary part pairing not p-local");
      out.gram[a][b] = mod_of(v.get_num(), out.exponent);
      // T(m_b g_b) has g_a coefficient m_b deck[a][b]; rescale by m_a^{-1}.
      i64 x = mod_norm(l.deck[idx[a]][idx[b]] * m[b], pe[a]);
      out.deck[a][b] = mul_mod(x, *inv_mod(m[a] % pe[a], pe[a]), pe[a]);
    }
  return out;
}

namespace {
std::vector<ModRow> all_elements(const std::vector<i64>& f) {
  std::vector<ModRow> out;
  ModRow x(f.size(), 0);
  for (;;) {
    out.push_back(x);
    std::size_t i = 0;
    while (i < f.size()) {
      if (++x[i] < f[i]) break;
      x[i] = 0;
      ++i;
    }
    if (i == f.size()) break;
  }
  return out;
}
}  // namespace

std::optional<std::vector<ModRow>> find_isometry(const LinkingForm& a, const LinkingForm& b,
                                                 bool respect_deck) {
  if (a.order() != b.order()) return std::nullopt;
  const std::size_t k = a.rank();
  if (k == 0) return std::vector<ModRow>{};
  require(b.order() <= 2000000, ErrorKind::BudgetExceeded, "isometry search group too large");
  const i64 L = lcm_i64(a.exponent, b.exponent);
  const i64 sa = L / a.exponent, sb = L / b.exponent;
  auto elems = all_elements(b.factors);
  // Candidate images per generator: order divides n_i and self-pairing matches.
  std::vector<std::vector<std::size_t>> cand(k);
  for (std::size_t i = 0; i < k; ++i) {
    i64 self = a.gram[i][i] * sa % L;
    for (std::size_t e = 0; e < elems.size(); ++e) {
      bool killed = true;
      for (std::size_t c = 0; c < b.rank() && killed; ++c)
        killed = mul_mod(elems[e][c], a.factors[i], b.factors[c]) == 0;
      if (killed && b.pair(elems[e], elems[e]) * sb % L == self) cand[i].push_back(e);
    }
  }
  std::vector<std::size_t> pick(k);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == k) {
      if (!respect_deck) return true;
      for (std::size_t j = 0; j < k; ++j) {
        ModRow lhs(b.rank(), 0);
        for (std::size_t r = 0; r < k; ++r) {
          i64 c = a.deck[r][j];
          for (std::size_t s = 0; s < b.rank(); ++s)
            lhs[s] = mod_norm(lhs[s] + c * elems[pick[r]][s], b.factors[s]);
        }
        if (lhs != b.apply_deck(elems[pick[j]])) return false;
      }
      return true;
    }
    for (std::size_t e : cand[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = b.pair(elems[e], elems[pick[j]]) * sb % L == a.gram[i][j] * sa % L;
      if (!ok) continue;
      pick[i] = e;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  std::vector<ModRow> img;
  for (auto e : pick) img.push_back(elems[e]);
  return img;
}

// ---------------------------------------------------------------- characters

ModRow CharSpace::embed(const ModRow& c, std::size_t rank) const {
  ModRow full(rank, 0);
  for (std::size_t a = 0; a < coords.size(); ++a) full[coords[a]] = c[a];
  return full;
}

CharSpace char_space(const std::vector<i64>& factors, const std::vector<ModRow>& deck, i64 p) {
  require(is_prime(p), ErrorKind::InvalidInput, "character space needs a prime");
  CharSpace cs;
  cs.p = p;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i] % p == 0) cs.coords.push_back(i);
  const std::size_t r = cs.coords.size();
  if (r == 0) return cs;
  cs.basis.assign(r, ModRow(r, 0));
  for (std::size_t a = 0; a < r; ++a) cs.basis[a][a] = 1;
  std::size_t total = 0;
  for (i64 lambda = 1; lambda < p; ++lambda) {
    // Rows of (D^T - lambda) over Z/p, acting on coefficient columns.
    std::vector<ModRow> m(r, ModRow(r, 0));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        m[a][b] = mod_norm(deck[cs.coords[b]][cs.coords[a]] - (a == b ? lambda : 0), p);
    auto ker = nullspace_mod_p(m, r, p);
    if (ker.empty()) continue;
    total += ker.size();
    cs.eigen.push_back({lambda, std::move(ker)});
  }
  cs.diagonalizable = total == r;
  return cs;
}

CharSpace char_space(const CoverHomology& h, i64 p) {
  std::vector<i64> f;
  for (const auto& x : h.invariant_factors) f.push_back(to_i64(x));
  return char_space(f, h.deck, p);
}

CharSpace char_space(const LinkingForm& l, i64 p) { return char_space(l.factors, l.deck, p); }

namespace {
std::vector<ModRow> mat_mul_mod(const std::vector<ModRow>& a, const std::vector<ModRow>& b, i64 n) {
  const std::size_t k = a.size();
  std::vector<ModRow> c(k, ModRow(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) c[i][j] = (c[i][j] + mul_mod(a[i][l], b[l][j], n)) % n;
    }
  return c;
}
}  // namespace

DualForm dual_linking(const LinkingForm& l, i64 p) {
  LinkingForm pp = primary_part(l, p);
  DualForm out;
  const std::size_t k = pp.rank();
  if (k == 0) return out;
  for (i64 f : pp.factors)
    if (f != pp.factors[0])
      fail(ErrorKind::InhomogeneousGroup, "p-primary part is not homogeneous");
  const i64 q = pp.factors[0];
  out.modulus = q;
  auto minv = inverse_mod(pp.gram, q);
  require(minv.has_value(), ErrorKind::InternalInvariantViolation, "linking form singular on primary part");

  // Deck action on characters is D^T.
  std::vector<ModRow> dt(k, ModRow(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) dt[i][j] = pp.deck[j][i];
  std::vector<ModRow> id(k, ModRow(k, 0));
  for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
  int d = 0;
  std::vector<ModRow> pw = dt;
  for (int e = 1; e <= 64; ++e) {
    if (pw == id) {
      d = e;
      break;
    }
    pw = mat_mul_mod(pw, dt, q);
  }

  std::vector<ModRow> basis;
  std::vector<i64> evs;
  bool ok = d > 0 && d % p != 0;
  if (ok) {
    auto roots = roots_of_unity_mod(d, q);
    for (i64 lam : roots) {
      std::vector<ModRow> proj = id;
      for (i64 mu : roots) {
        if (mu == lam) continue;
        auto inv = inv_mod(lam - mu, q);
        if (!inv) {
          ok = false;
          break;
        }
        std::vector<ModRow> f(k, ModRow(k, 0));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            f[i][j] = mul_mod(mod_norm(dt[i][j] - (i == j ? mu : 0), q), *inv, q);
        proj = mat_mul_mod(f, proj, q);
      }
      if (!ok) break;
      // Column span of the projector.
      std::vector<ModRow> cols(k, ModRow(k, 0));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) cols[j][i] = proj[i][j];
      for (auto& row : howell_form(cols, q, k)) {
        std::size_t lead = 0;
        while (row[lead] == 0) ++lead;
        if (!inv_mod(row[lead], q)) {
          ok = false;
          break;
        }
        basis.push_back(row);
        evs.push_back(lam);
      }
      if (!ok) break;
    }
    ok = ok && basis.size() == k;
  }
  if (!ok) {
    basis = id;
    evs.clear();
  }
  out.eigen_basis = ok;
  out.eigenvalues = evs;
  out.basis = basis;
  out.gram.assign(k, ModRow(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      i64 acc = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          acc = (acc + mul_mod(mul_mod(basis[a][i], (*minv)[i][j], q), basis[b][j], q)) % q;
      out.gram[a][b] = acc;
    }
  return out;
}

}  // namespace cgk
