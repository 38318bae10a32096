#include "cgk/metab.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

#include "cgk/error.hpp"
#include "cgk/kernels.hpp"

namespace cgk {

namespace {

i64 exponent_of(const std::vector<i64>& f) {
  i64 n = 1;
  for (i64 x : f) n = n / gcd_i64(n, x) * x;
  return n;
}

ModRow embed(const std::vector<i64>& f, i64 n, const ModRow& x) {
  ModRow y(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) y[i] = mul_mod(mod_norm(x[i], f[i]), n / f[i], n);
  return y;
}

ModRow unembed(const std::vector<i64>& f, i64 n, const ModRow& y) {
  ModRow x(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) x[i] = y[i] / (n / f[i]);
  return x;
}

std::vector<i64> prime_divisors(i64 n) {
  std::vector<i64> ps;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

Subgroup span(const std::vector<i64>& factors, const std::vector<ModRow>& gens) {
  Subgroup h;
  const i64 n = exponent_of(factors);
  const std::size_t k = factors.size();
  std::vector<ModRow> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(embed(factors, n, g));
  h.howell = howell_form(std::move(rows), n, k);
  h.order = howell_order(h.howell, n);
  for (const auto& r : h.howell) h.generators.push_back(unembed(factors, n, r));
  return h;
}

bool contains(const std::vector<i64>& factors, const Subgroup& h, const ModRow& x) {
  std::vector<ModRow> g = h.generators;
  g.push_back(x);
  return span(factors, g).order == h.order;
}

std::vector<ModRow> elements(const std::vector<i64>& factors, const Subgroup& h, std::size_t budget) {
  require(static_cast<std::size_t>(h.order) <= budget, ErrorKind::BudgetExceeded,
          "subgroup too large to list its elements");
  const i64 n = exponent_of(factors);
  const std::size_t k = factors.size(), r = h.howell.size();
  std::vector<i64> range(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t lead = 0;
    while (h.howell[i][lead] == 0) ++lead;
    range[i] = n / h.howell[i][lead];
  }
  std::vector<ModRow> out;
  out.reserve(static_cast<std::size_t>(h.order));
  std::vector<i64> c(r, 0);
  for (;;) {
    ModRow y(k, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) y[j] = (y[j] + c[i] * h.howell[i][j]) % n;
    out.push_back(unembed(factors, n, y));
    std::size_t i = 0;
    while (i < r) {
      if (++c[i] < range[i]) break;
      c[i] = 0;
      ++i;
    }
    if (i == r) break;
  }
  return out;
}

bool is_metabolizer(const LinkingForm& l, const Subgroup& a, bool require_invariant) {
  if (a.order * a.order != l.order()) return false;
  for (const auto& x : a.generators)
    for (const auto& y : a.generators)
      if (l.pair(x, y) != 0) return false;
  if (require_invariant)
    for (const auto& x : a.generators)
      if (!contains(l.factors, a, l.apply_deck(x))) return false;
  return true;
}

namespace {

// Enumerates metabolizers of a single p-primary form.
class PrimaryEnumerator {
 public:
  PrimaryEnumerator(const LinkingForm& form, bool invariant, std::size_t budget)
      : l_(form), invariant_(invariant), budget_(budget), n_(form.exponent), k_(form.rank()) {}

  std::vector<Subgroup> run() {
    const i64 total = l_.order();
    i64 target = 1;
    while (target * target < total) ++target;
    if (target * target != total) return {};
    target_ = target;
    if (k_ == 0) return {Subgroup{}};
    require(n_ <= kernels::kMaxModulus, ErrorKind::BudgetExceeded,
            "primary exponent too large for metabolizer enumeration");
    require(static_cast<std::size_t>(total) <= 16 * budget_, ErrorKind::BudgetExceeded,
            "primary part has " + std::to_string(total) + " elements, beyond the enumeration budget");
    scan();
    std::vector<std::uint32_t> all(table_.size());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    Subgroup zero = span(l_.factors, {});
    visited_.insert(zero.howell);
    if (target_ == 1) return {zero};
    dfs(zero, all);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  // Isotropic elements, one per cyclic subgroup: in embedded coordinates the
  // first coordinate of minimal valuation equals the power of p itself.
  void scan() {
    const i64 p = prime_divisors(n_).front();
    ModRow x(k_, 0);
    cols_.assign(k_, {});
    for (;;) {
      if (is_rep(x, p) && l_.pair(x, x) == 0) {
        table_.push_back(x);
        for (std::size_t i = 0; i < k_; ++i) cols_[i].push_back(static_cast<std::int32_t>(x[i]));
        charge();
      }
      std::size_t i = 0;
      while (i < k_) {
        if (++x[i] < l_.factors[i]) break;
        x[i] = 0;
        ++i;
      }
      if (i == k_) break;
    }
  }

  bool is_rep(const ModRow& x, i64 p) const {
    ModRow y = embed(l_.factors, n_, x);
    i64 best = n_;
    std::size_t at = k_;
    for (std::size_t i = 0; i < k_; ++i) {
      if (y[i] == 0) continue;
      i64 pv = 1;
      while (y[i] % (pv * p) == 0) pv *= p;
      if (pv < best) {
        best = pv;
        at = i;
      }
    }
    return at < k_ && y[at] == best;
  }

  void charge() {
    if (++used_ > budget_)
      fail(ErrorKind::BudgetExceeded, "metabolizer enumeration exceeded budget of " + std::to_string(budget_));
  }

  // Orbit of x under the deck map, or nullopt if it is not isotropic.
  std::optional<std::vector<ModRow>> orbit(const ModRow& x) const {
    std::vector<ModRow> o{x};
    if (!invariant_) return o;
    ModRow y = l_.apply_deck(x);
    for (int guard = 0; y != x; ++guard) {
      require(guard < 256, ErrorKind::InternalInvariantViolation, "deck map has unexpectedly large order");
      if (l_.pair(x, y) != 0) return std::nullopt;
      o.push_back(y);
      y = l_.apply_deck(y);
    }
    return o;
  }

  // Keeps the candidates orthogonal to every element of gens.
  std::vector<std::uint32_t> filter(const std::vector<std::uint32_t>& cand,
                                    const std::vector<ModRow>& gens) const {
    const std::size_t m = cand.size();
    std::vector<std::vector<std::int32_t>> sub(k_, std::vector<std::int32_t>(m));
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t t = 0; t < m; ++t) sub[i][t] = cols_[i][cand[t]];
    std::vector<std::uint8_t> keep(m, 1);
    std::vector<std::int32_t> acc(m);
    const auto m32 = static_cast<std::int32_t>(n_);
    for (const auto& h : gens) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i = 0; i < k_; ++i) {
        i64 w = 0;
        for (std::size_t j = 0; j < k_; ++j) w = (w + mul_mod(l_.gram[i][j], h[j], n_)) % n_;
        if (w != 0) kernels::axpy_mod(acc, sub[i], static_cast<std::int32_t>(w), m32);
      }
      if (kernels::count_nonzero(acc) == 0) continue;
      for (std::size_t t = 0; t < m; ++t) keep[t] &= acc[t] == 0;
    }
    std::vector<std::uint32_t> out;
    for (std::size_t t = 0; t < m; ++t)
      if (keep[t]) out.push_back(cand[t]);
    return out;
  }

  void dfs(const Subgroup& h, const std::vector<std::uint32_t>& cand) {
    for (std::uint32_t c : cand) {
      const ModRow& x = table_[c];
      auto orb = orbit(x);
      if (!orb) continue;
      std::vector<ModRow> gens = h.generators;
      gens.insert(gens.end(), orb->begin(), orb->end());
      Subgroup next = span(l_.factors, gens);
      if (next.order == h.order || next.order > target_) continue;
      if (!visited_.insert(next.howell).second) continue;
      charge();
      if (next.order == target_) {
        found_.push_back(std::move(next));
        continue;
      }
      dfs(next, filter(cand, *orb));
    }
  }

  const LinkingForm& l_;
  bool invariant_;
  std::size_t budget_;
  i64 n_;
  std::size_t k_;
  i64 target_ = 1;
  std::size_t used_ = 0;
  std::vector<ModRow> table_;
  std::vector<std::vector<std::int32_t>> cols_;  // SoA copy of table_
  std::set<std::vector<ModRow>> visited_;
  std::vector<Subgroup> found_;
};

}  // namespace

std::vector<Metabolizer> enumerate_metabolizers(const LinkingForm& l, bool invariant_only,
                                                std::size_t budget) {
  // Metabolizers split along primary parts, since distinct primary parts
  // are orthogonal.
  std::vector<std::vector<std::vector<ModRow>>> per_prime;
  for (i64 p : prime_divisors(l.order())) {
    LinkingForm pp = primary_part(l, p);
    std::vector<std::size_t> idx;
    std::vector<i64> mult;
    for (std::size_t i = 0; i < l.rank(); ++i) {
      i64 n = l.factors[i];
      while (n % p == 0) n /= p;
      if (n != l.factors[i]) {
        idx.push_back(i);
        mult.push_back(n);
      }
    }
    std::vector<std::vector<ModRow>> lifted;
    for (const auto& a : PrimaryEnumerator(pp, invariant_only, budget).run()) {
      std::vector<ModRow> gens;
      for (const auto& g : a.generators) {
        ModRow full(l.rank(), 0);
        for (std::size_t j = 0; j < idx.size(); ++j)
          full[idx[j]] = mul_mod(g[j], mult[j], l.factors[idx[j]]);
        gens.push_back(std::move(full));
      }
      lifted.push_back(std::move(gens));
    }
    if (lifted.empty()) return {};
    per_prime.push_back(std::move(lifted));
  }
  std::vector<std::vector<ModRow>> combos{{}};
  for (const auto& options : per_prime) {
    std::vector<std::vector<ModRow>> next;
    for (const auto& base : combos)
      for (const auto& add : options) {
        auto g = base;
        g.insert(g.end(), add.begin(), add.end());
        next.push_back(std::move(g));
      }
    require(next.size() <= budget, ErrorKind::BudgetExceeded, "too many metabolizers to list");
    combos = std::move(next);
  }
  std::vector<Metabolizer> out;
  for (const auto& g : combos) out.push_back(span(l.factors, g));
  std::sort(out.begin(), out.end());
  return out;
}

Metabolizer project_metabolizer(const LinkingForm& g1, const LinkingForm& g2, const Metabolizer& a,
                                const Metabolizer& a1, std::size_t budget) {
  std::vector<i64> f = g1.factors;
  f.insert(f.end(), g2.factors.begin(), g2.factors.end());
  const std::size_t k1 = g1.rank();
  std::vector<ModRow> image;
  for (const auto& e : elements(f, a, budget)) {
    ModRow x(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k1));
    if (!contains(g1.factors, a1, x)) continue;
    image.emplace_back(e.begin() + static_cast<std::ptrdiff_t>(k1), e.end());
  }
  Metabolizer a2 = span(g2.factors, image);
  require(is_metabolizer(g2, a2), ErrorKind::InternalInvariantViolation,
          "projected subgroup is not a metabolizer");
  return a2;
}

CharSpace vanishing_chars(const LinkingForm& l, const Subgroup& a, i64 p) {
  CharSpace full = char_space(l, p);
  CharSpace out;
  out.p = p;
  out.coords = full.coords;
  const std::size_t r = out.coords.size();
  if (r == 0) return out;
  std::vector<ModRow> rows;
  for (const auto& g : a.generators) {
    ModRow row(r);
    for (std::size_t b = 0; b < r; ++b) row[b] = mod_norm(g[out.coords[b]], p);
    rows.push_back(std::move(row));
  }
  out.basis = nullspace_mod_p(rows, r, p);
  std::size_t total = 0;
  for (const auto& e : full.eigen) {
    std::vector<ModRow> m = rows;
    for (std::size_t i = 0; i < r; ++i) {
      ModRow row(r);
      for (std::size_t j = 0; j < r; ++j)
        row[j] = mod_norm(l.deck[out.coords[j]][out.coords[i]] - (i == j ? e.lambda : 0), p);
      m.push_back(std::move(row));
    }
    auto ker = nullspace_mod_p(m, r, p);
    if (ker.empty()) continue;
    total += ker.size();
    out.eigen.push_back({e.lambda, std::move(ker)});
  }
  out.diagonalizable = total == out.basis.size();
  return out;
}

bool is_odd(const ModRow& v) {
  std::size_t c = 0;
  for (i64 x : v) c += x != 0;
  return c % 2 == 1;
}

namespace {
std::optional<ModRow> odd_by_scan(const std::vector<ModRow>& rows, std::size_t n, i64 p) {
  const std::size_t k = rows.size();
  double size = 1;
  for (std::size_t i = 0; i < k; ++i) size *= static_cast<double>(p);
  require(size <= 1e8, ErrorKind::BudgetExceeded, "span too large for an exhaustive odd-vector scan");
  std::vector<i64> c(k, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < k) {
      if (++c[i] < p) break;
      c[i] = 0;
      ++i;
    }
    if (i == k) return std::nullopt;
    ModRow v(n, 0);
    for (std::size_t r = 0; r < k; ++r)
      if (c[r] != 0)
        for (std::size_t j = 0; j < n; ++j) v[j] = (v[j] + c[r] * rows[r][j]) % p;
    if (is_odd(v)) return v;
  }
}
}  // namespace

std::optional<ModRow> find_odd_char(const std::vector<ModRow>& basis, std::size_t n, i64 p) {
  std::vector<ModRow> rows = basis;
  for (auto& r : rows) require(r.size() == n, ErrorKind::InvalidInput, "character length mismatch");
  auto piv = rref_mod_p(rows, p);
  const std::size_t k = rows.size();
  if (k == 0) return std::nullopt;
  for (const auto& r : rows)
    if (is_odd(r)) return r;

  // Rows now look like (I B) up to a column permutation. A dependence among
  // the rows of B yields a combination supported on pivot columns only.
  std::vector<bool> is_piv(n, false);
  for (auto j : piv) is_piv[j] = true;
  std::vector<ModRow> bt;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_piv[j]) continue;
    ModRow col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = rows[i][j];
    bt.push_back(std::move(col));
  }
  auto dep = nullspace_mod_p(bt, k, p);
  if (!dep.empty() && p > 2) {
    const ModRow& lam = dep.front();
    ModRow v(n, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) v[j] = (v[j] + lam[i] * rows[i][j]) % p;
    if (is_odd(v)) return v;
    std::size_t j = 0;
    while (lam[j] == 0) ++j;
    // Every row is even, so row j has an odd B-part; adding f v with
    // 1 + f lam_j != 0 keeps all |supp lam| pivots and the B-part.
    i64 bad = mod_norm(-*inv_mod(lam[j], p), p);
    i64 f = bad == 1 ? 2 : 1;
    ModRow w(n);
    for (std::size_t c = 0; c < n; ++c) w[c] = (rows[j][c] + f * v[c]) % p;
    if (is_odd(w)) return w;
  }
  return odd_by_scan(rows, n, p);
}

bool is_permuted_diagonal(const std::vector<ModRow>& e) {
  const std::size_t k = e.size();
  std::vector<int> col_count(k, 0);
  for (const auto& row : e) {
    int c = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (row[j] != 0) {
        ++c;
        ++col_count[j];
      }
    if (c != 1) return false;
  }
  return std::all_of(col_count.begin(), col_count.end(), [](int c) { return c == 1; });
}

DiagonalLemmaReport check_diagonal_lemma(i64 p, int k, std::size_t budget) {
  require(is_prime(p) && k >= 1, ErrorKind::InvalidInput, "diagonal lemma needs a prime and k >= 1");
  DiagonalLemmaReport rep;
  rep.p = p;
  rep.k = k;
  const std::size_t kk = static_cast<std::size_t>(k);
  double total = 1;
  for (std::size_t i = 0; i < kk * kk; ++i) total *= static_cast<double>(p);
  require(total <= static_cast<double>(budget), ErrorKind::BudgetExceeded,
          "p^(k^2) exceeds the exhaustive budget");
  std::vector<i64> entries(kk * kk, 0);
  for (;;) {
    ++rep.total;
    std::vector<ModRow> e(kk, ModRow(kk));
    for (std::size_t i = 0; i < kk; ++i)
      for (std::size_t j = 0; j < kk; ++j) e[i][j] = entries[i * kk + j];
    if (rank_mod_p(e, p) == kk) {
      ++rep.nonsingular;
      std::vector<ModRow> rows(kk, ModRow(2 * kk, 0));
      for (std::size_t i = 0; i < kk; ++i) {
        rows[i][i] = 1;
        for (std::size_t j = 0; j < kk; ++j) rows[i][kk + j] = e[i][j];
      }
      if (!find_odd_char(rows, 2 * kk, p)) {
        ++rep.without_odd;
        if (is_permuted_diagonal(e))
          ++rep.permuted_diagonal;
        else
          ++rep.counterexamples;
      }
    }
    std::size_t i = 0;
    while (i < entries.size()) {
      if (++entries[i] < p) break;
      entries[i] = 0;
      ++i;
    }
    if (i == entries.size()) break;
  }
  return rep;
}

bool admissible_pair(const ModRow& a, const ModRow& b, const std::vector<int>& eps, i64 p) {
  require(a.size() == b.size() && a.size() == eps.size(), ErrorKind::InvalidInput,
          "character vectors and signs must have equal length");
  i64 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = mod_norm(s + eps[i] * mul_mod(mod_norm(a[i], p), mod_norm(b[i], p), p), p);
  return s == 0;
}

}  // namespace cgk
