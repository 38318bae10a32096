#include "cgk/cgcalc.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cgk/error.hpp"

namespace cgk {

using nlohmann::json;

SigGrowth sig_add(const SigGrowth& x, const SigGrowth& y) { return {x.coefficient + y.coefficient}; }

SigGrowth satellite_sigma(const SigGrowth& base, const IntMatrix& j, i64 value, i64 p) {
  const i64 v = mod_norm(value, p);
  if (v == 0 || j.rows() == 0) return base;
  return {base.coefficient + lt_signature(j, Rat(v, p))};
}

std::string DiscExpr::str() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " * ";
    first = false;
  };
  for (const auto& [tok, m] : residual) {
    if (m == 0) continue;
    sep();
    os << "delta[" << tok << "]";
    if (m != 1) os << "^" << m;
  }
  for (const auto& [key, m] : factors) {
    if (m == 0) continue;
    sep();
    os << "D[" << key.first << "](z^" << key.second << " t)";
    if (m != 1) os << "^" << m;
  }
  if (first) os << "1";
  return os.str();
}

DiscExpr disc_mul(const DiscExpr& x, const DiscExpr& y) {
  require(x.p == y.p, ErrorKind::InvalidInput, "discriminants over different cyclotomic fields");
  DiscExpr r = x;
  for (const auto& [k, m] : y.residual)
    if ((r.residual[k] += m) == 0) r.residual.erase(k);
  for (const auto& [k, m] : y.factors)
    if ((r.factors[k] += m) == 0) r.factors.erase(k);
  return r;
}

DiscExpr satellite_delta(const DiscExpr& base, const std::string& poly_id, const std::vector<i64>& lift_values) {
  DiscExpr r = base;
  for (i64 a : lift_values) {
    auto key = std::make_pair(poly_id, mod_norm(a, base.p));
    if (++r.factors[key] == 0) r.factors.erase(key);
  }
  return r;
}

std::vector<i64> orbit_exponents(i64 a, i64 p) {
  std::vector<i64> out;
  for (i64 m : {1, 2, 4, -1, -2, -4}) out.push_back(mod_norm(m * a, p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<i64> mixed_exponents(i64 c, int eps, i64 p) {
  auto inv = inv_mod(c, p);
  require(inv.has_value(), ErrorKind::InvalidInput, "mixed_exponents needs a unit c");
  const i64 cb = *inv;
  std::vector<i64> out;
  for (auto [x, y] : {std::pair<i64, i64>{1, 1}, {2, 4}, {4, 2}}) {
    i64 e = mod_norm(x * c - eps * y * cb, p);
    out.push_back(e);
    out.push_back(mod_norm(-e, p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ hypotheses

namespace {

// Squarefree part with sign; 0 stays 0.
Int squarefree_part_of(const Int& n) {
  if (n == 0) return 0;
  Int m = abs(n), out = 1;
  for (Int q = 2; q * q <= m; ++q) {
    int e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    if (e % 2) out *= q;
  }
  out *= m;
  return n < 0 ? Int(-out) : out;
}

bool is_square(const Int& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::string matrix_key(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string row_key(const ModRow& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

bool all_zero(const ModRow& r) {
  return std::all_of(r.begin(), r.end(), [](i64 x) { return x == 0; });
}

}  // namespace

PolyHypotheses check_poly_hypotheses(const RatLaurent& f) {
  require(!f.is_zero() && f.span() == 2, ErrorKind::UnsupportedShape,
          "polynomial hypotheses are checked for quadratics only");
  PolyHypotheses h;
  RatLaurent g = f.normalized();
  h.poly = g.str();
  std::vector<Int> c = g.body().primitive().integer_coeffs();
  h.discriminant = c[1] * c[1] - 4 * c[0] * c[2];
  h.squarefree_part = squarefree_part_of(h.discriminant);
  h.symmetric = g.symmetric();
  h.irreducible_over_q = !is_square(h.discriminant);
  // An irreducible quadratic stays irreducible over Q(zeta_7) unless its
  // splitting field is the unique quadratic subfield Q(sqrt(-7)).
  h.irreducible_over_cyclotomic = h.irreducible_over_q && h.squarefree_part != -7;
  bool t7 = true;
  for (const auto& [e, coef] : g.terms())
    if (coef != 0 && e % 7 != 0) t7 = false;
  h.not_t7_form = !t7;
  h.passes = h.irreducible_over_q && h.irreducible_over_cyclotomic && h.not_t7_form;
  if (!h.irreducible_over_q) h.notes.push_back("discriminant is a square: reducible over Q");
  if (h.irreducible_over_q && !h.irreducible_over_cyclotomic)
    h.notes.push_back("splitting field is Q(sqrt(-7)), contained in Q(zeta_7)");
  if (!h.symmetric) h.notes.push_back("not symmetric: not the Alexander polynomial of a knot");
  if (h.discriminant > 0) h.notes.push_back("real roots");
  return h;
}

const char* verdict_name(NormVerdict v) {
  switch (v) {
    case NormVerdict::Norm: return "NORM";
    case NormVerdict::NotNorm: return "NOT_NORM";
    case NormVerdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

NormVerdict norm_test(const DiscExpr& e, const Genericity& hyp) {
  std::set<std::string> used;
  for (const auto& [key, m] : e.factors)
    if (m != 0) used.insert(key.first);
  for (const auto& id : used) {
    auto it = hyp.polys.find(id);
    if (it == hyp.polys.end()) fail(ErrorKind::HypothesisUnverified, "polynomial " + id + " is not registered");
    if (e.p != 7) fail(ErrorKind::HypothesisUnverified, "irreducibility is only checked over Q(zeta_7)");
    const RatLaurent& f = it->second;
    if (f.span() != 2)
      fail(ErrorKind::HypothesisUnverified, "irreducibility over Q(zeta_7) of " + id + " cannot be decided");
    PolyHypotheses h = check_poly_hypotheses(f);
    if (!h.passes)
      fail(ErrorKind::HypothesisUnverified,
           "polynomial " + id + " fails: " + (h.notes.empty() ? std::string("hypotheses") : h.notes.front()));
  }
  for (auto a = used.begin(); a != used.end(); ++a)
    for (auto b = std::next(a); b != used.end(); ++b)
      if (gcd(hyp.polys.at(*a).body(), hyp.polys.at(*b).body()).degree() > 0)
        fail(ErrorKind::HypothesisUnverified, "polynomials " + *a + " and " + *b + " share a factor over Q");

  for (const auto& [key, m] : e.factors)
    if (m % 2 != 0) return NormVerdict::NotNorm;
  for (const auto& [tok, m] : e.residual)
    if (m % 2 != 0) return NormVerdict::Unknown;
  return NormVerdict::Norm;
}

// ------------------------------------------------------------ characters

CharacterModel::CharacterModel(const KnotModel& model, int d, i64 p) : model_(model), d_(d), p_(p) {
  require(d >= 2 && is_prime(p), ErrorKind::InvalidInput, "character model needs d >= 2 and a prime p");
  std::size_t offset = 0;
  for (const auto& s : model_.summands) {
    LinkingForm l = linking_form(s.base, d);
    if (s.sign < 0) l = negate(l);
    CharSpace cs = char_space(l, p);
    form_ = direct_sum(form_, l);

    Part part;
    part.offset = offset;
    part.width = cs.ambient();
    offset += part.width;
    part.token = (s.sign < 0 ? "-" : "") + (s.family == "kj" ? std::string("K") : "V" + matrix_key(s.base));
    const bool simple = cs.diagonalizable && std::all_of(cs.eigen.begin(), cs.eigen.end(),
                                                         [](const CharSpace::Eigen& e) { return e.basis.size() == 1; });
    if (simple) {
      for (const auto& e : cs.eigen) {
        part.lambdas.push_back(e.lambda);
        part.eigvecs.push_back(e.basis.front());
      }
    }
    if (!s.infections.empty()) {
      require(s.degree == d && s.prime == p, ErrorKind::InvalidInput,
              "infection data of " + s.id + " refers to the " + std::to_string(s.degree) + "-fold cover mod " +
                  std::to_string(s.prime));
      require(simple && part.width > 0, ErrorKind::UnsupportedShape,
              "infected summand needs one-dimensional deck eigenspaces");
      for (const auto& inf : s.infections) {
        require(inf.values.size() == part.lambdas.size(), ErrorKind::InvalidInput,
                "infection " + inf.curve + " needs one value per eigencharacter");
        const std::string key = (s.sign < 0 ? "-" : "+") + inf.companion_id;
        if (inf.companion.rows() > 0) {
          if (!sigfun_.count(key)) sigfun_.emplace(key, SignatureFunction(s.sign < 0 ? mirror(inf.companion) : inf.companion));
          RatLaurent a = alexander(inf.companion);
          if (a.span() > 0) generic_.polys.emplace(a.normalized().str(), a.normalized());
        }
      }
    }
    parts_.push_back(std::move(part));
  }
  space_ = char_space(form_, p);
  require(space_.ambient() == offset, ErrorKind::InternalInvariantViolation, "summand character spaces do not tile");
}

std::vector<std::vector<i64>> CharacterModel::coefficients(const ModRow& chi) const {
  require(chi.size() == space_.ambient(), ErrorKind::InvalidInput, "character has the wrong length");
  std::vector<std::vector<i64>> out;
  for (const auto& part : parts_) {
    ModRow r(chi.begin() + static_cast<long>(part.offset), chi.begin() + static_cast<long>(part.offset + part.width));
    for (auto& x : r) x = mod_norm(x, p_);
    if (part.lambdas.empty()) {
      out.push_back(r);
      continue;
    }
    const std::size_t m = part.eigvecs.size();
    std::vector<ModRow> aug(part.width, ModRow(m + 1, 0));
    for (std::size_t i = 0; i < part.width; ++i) {
      for (std::size_t l = 0; l < m; ++l) aug[i][l] = part.eigvecs[l][i];
      aug[i][m] = r[i];
    }
    auto piv = rref_mod_p(aug, p_);
    std::vector<i64> coef(m, 0);
    for (std::size_t i = 0; i < piv.size(); ++i) {
      require(piv[i] < m, ErrorKind::InternalInvariantViolation, "character outside the eigencharacter span");
      coef[piv[i]] = aug[i][m];
    }
    out.push_back(std::move(coef));
  }
  return out;
}

ModRow CharacterModel::from_coefficients(const std::vector<std::vector<i64>>& coef) const {
  require(coef.size() == parts_.size(), ErrorKind::InvalidInput, "one coefficient list per summand expected");
  ModRow chi(space_.ambient(), 0);
  for (std::size_t s = 0; s < parts_.size(); ++s) {
    const Part& part = parts_[s];
    if (part.lambdas.empty()) {
      require(coef[s].size() == part.width, ErrorKind::InvalidInput, "coefficient list has the wrong length");
      for (std::size_t i = 0; i < part.width; ++i) chi[part.offset + i] = mod_norm(coef[s][i], p_);
      continue;
    }
    require(coef[s].size() == part.lambdas.size(), ErrorKind::InvalidInput, "coefficient list has the wrong length");
    for (std::size_t l = 0; l < part.lambdas.size(); ++l)
      for (std::size_t i = 0; i < part.width; ++i)
        chi[part.offset + i] = mod_norm(chi[part.offset + i] + mul_mod(mod_norm(coef[s][l], p_), part.eigvecs[l][i], p_), p_);
  }
  return chi;
}

std::vector<i64> CharacterModel::lift_values(std::size_t s, std::size_t inf, const std::vector<i64>& coef) const {
  const Part& part = parts_.at(s);
  const Infection& in = model_.summands.at(s).infections.at(inf);
  std::vector<i64> out;
  for (int i = 0; i < d_; ++i) {
    i64 v = 0;
    for (std::size_t l = 0; l < part.lambdas.size(); ++l)
      v = mod_norm(v + mul_mod(mul_mod(mod_norm(coef[l], p_), pow_mod(part.lambdas[l], i, p_), p_),
                               mod_norm(in.values[l], p_), p_),
                   p_);
    out.push_back(v);
  }
  return out;
}

SigGrowth CharacterModel::sigma(const ModRow& chi) const {
  auto coef = coefficients(chi);
  SigGrowth g;
  for (std::size_t s = 0; s < parts_.size(); ++s) {
    const Summand& sm = model_.summands[s];
    for (std::size_t k = 0; k < sm.infections.size(); ++k) {
      const Infection& inf = sm.infections[k];
      if (inf.companion.rows() == 0) continue;
      i64 v = lift_values(s, k, coef[s]).front();
      if (v == 0) continue;
      g.coefficient += sigfun_.at((sm.sign < 0 ? "-" : "+") + inf.companion_id).at(Rat(v, p_));
    }
  }
  return g;
}

DiscExpr CharacterModel::delta(const ModRow& chi) const {
  auto coef = coefficients(chi);
  DiscExpr e;
  e.p = p_;
  for (std::size_t s = 0; s < parts_.size(); ++s) {
    if (all_zero(coef[s])) continue;
    e.residual[parts_[s].token + row_key(coef[s])] += 1;
    const Summand& sm = model_.summands[s];
    for (std::size_t k = 0; k < sm.infections.size(); ++k) {
      const Infection& inf = sm.infections[k];
      if (inf.companion.rows() == 0) continue;
      RatLaurent a = alexander(inf.companion);
      if (a.span() == 0) continue;
      e = satellite_delta(e, a.normalized().str(), lift_values(s, k, coef[s]));
    }
  }
  return e;
}

// ------------------------------------------------------------ drivers

namespace {

// Every nonzero vector of the row span of `basis` (rows independent).
std::vector<ModRow> span_vectors(const std::vector<ModRow>& basis, std::size_t n, i64 p, std::size_t budget) {
  double size = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) size *= static_cast<double>(p);
  require(size <= static_cast<double>(budget), ErrorKind::BudgetExceeded, "character span exceeds the budget");
  std::vector<ModRow> out;
  std::vector<i64> c(basis.size(), 0);
  for (;;) {
    std::size_t i = 0;
    while (i < c.size() && c[i] == p - 1) c[i++] = 0;
    if (i == c.size()) break;
    ++c[i];
    ModRow v(n, 0);
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t j = 0; j < n; ++j) v[j] = mod_norm(v[j] + mul_mod(c[k], basis[k][j], p), p);
    out.push_back(std::move(v));
  }
  return out;
}

bool leading_one(const ModRow& v) {
  for (i64 x : v)
    if (x != 0) return x == 1;
  return false;
}

}  // namespace

SigmaReport cg_sigma(const KnotModel& model, int d, i64 p, std::size_t budget) {
  CharacterModel cm(model, d, p);
  SigmaReport rep;
  rep.d = d;
  rep.p = p;
  const std::size_t r = cm.space().ambient();
  auto mets = enumerate_metabolizers(cm.form(), true, budget);
  rep.not_cg_slice = !mets.empty();
  for (const auto& a : mets) {
    SigmaCase sc;
    sc.metabolizer = a;
    CharSpace vc = vanishing_chars(cm.form(), a, p);
    sc.char_dim = vc.dim();
    for (auto& chi : span_vectors(vc.basis, r, p, budget)) {
      SigGrowth g = cm.sigma(chi);
      if (!g.is_zero()) sc.obstructed = true;
      if (leading_one(chi) && (sc.character.empty() || (sc.growth.is_zero() && !g.is_zero()))) {
        sc.character = chi;
        sc.growth = g;
      }
      sc.all.emplace_back(std::move(chi), g);
    }
    std::sort(sc.all.begin(), sc.all.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    if (!sc.obstructed) rep.not_cg_slice = false;
    rep.cases.push_back(std::move(sc));
  }
  if (mets.empty()) rep.notes.push_back("no metabolizer: the linking form alone obstructs sliceness");
  double full = 1;
  for (std::size_t i = 0; i < r; ++i) full *= static_cast<double>(p);
  if (r > 0 && full <= static_cast<double>(budget)) {
    std::vector<ModRow> id(r, ModRow(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    rep.all_characters_nonzero = true;
    for (const auto& chi : span_vectors(id, r, p, budget))
      if (cm.sigma(chi).is_zero()) {
        rep.all_characters_nonzero = false;
        break;
      }
  } else if (r > 0) {
    rep.notes.push_back("full character space exceeds the budget; all_characters_nonzero not evaluated");
  }
  return rep;
}

TwistedDoubleReport twisted_double_obstruction(long a, std::size_t budget) {
  require(a > 1, ErrorKind::InvalidInput, "no obstruction claimed for a <= 1");
  require(is_prime(2 * a + 1), ErrorKind::InvalidInput, "2a+1 must be prime");
  TwistedDoubleReport rep;
  rep.a = a;
  rep.p = 2 * a + 1;
  SignatureFunction sf(torus_matrix(-a, a + 1));
  rep.all_positive = true;
  for (i64 j = 1; j < rep.p; ++j) {
    SigGrowth g{sf.at(Rat(j, rep.p))};
    rep.all_positive = rep.all_positive && g.coefficient > 0;
    rep.by_value.emplace_back(j, g);
  }
  rep.sigma = cg_sigma(build(twisted_double_spec(a)), 2, rep.p, budget);
  rep.notes.push_back("character value 1 on the chosen lift of the infection curve is a modeling assumption");
  return rep;
}

SigmaReport twisted_double_sum(long a, int n, std::size_t budget) {
  require(n >= 1, ErrorKind::InvalidInput, "need at least one summand");
  require(a > 1 && is_prime(2 * a + 1), ErrorKind::InvalidInput, "need a > 1 with 2a+1 prime");
  json s{{"kind", "sum"}, {"summands", json::array()}};
  for (int i = 0; i < n; ++i) s["summands"].push_back(json{{"knot", twisted_double_spec(a)}, {"sign", 1}});
  return cg_sigma(build(s), 2, 2 * a + 1, budget);
}

SigmaReport order_two_obstruction(int i, int j, std::size_t budget) {
  require(i >= 0 && j >= 0, ErrorKind::InvalidInput, "torus multiplicities must be nonnegative");
  json s{{"kind", "sum"},
         {"summands",
          json::array({json{{"knot", order_two_spec(torus_sum_spec(2, 7, i))}, {"sign", 1}},
                       json{{"knot", order_two_spec(torus_sum_spec(2, 7, j))}, {"sign", 1}}})}};
  return cg_sigma(build(s), 2, 5, budget);
}

std::vector<std::vector<ModRow>> subspaces(std::size_t n, std::size_t k, i64 p) {
  std::vector<std::vector<ModRow>> out;
  if (k > n) return out;
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  for (;;) {
    // Free entries: row r, columns after piv[r] that are not pivots.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
    std::vector<i64> val(free.size(), 0);
    for (;;) {
      std::vector<ModRow> rows(k, ModRow(n, 0));
      for (std::size_t r = 0; r < k; ++r) rows[r][piv[r]] = 1;
      for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = val[f];
      out.push_back(std::move(rows));
      std::size_t f = 0;
      while (f < val.size() && val[f] == p - 1) val[f++] = 0;
      if (f == val.size()) break;
      ++val[f];
    }
    // Next pivot combination.
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t t = i; t < k; ++t) piv[t] = piv[t - 1] + 1;
  }
  return out;
}

namespace {

bool in_span(const std::vector<ModRow>& basis, const ModRow& v, i64 p) {
  std::vector<ModRow> m = basis;
  const std::size_t r = rank_mod_p(m, p);
  m.push_back(v);
  return rank_mod_p(m, p) == r;
}

}  // namespace

MutantCase decide_mutant_case(const CharacterModel& cm, const std::vector<ModRow>& span2,
                              const std::vector<ModRow>& span4, const std::vector<int>& eps) {
  const i64 p = cm.prime();
  const std::size_t n = eps.size();
  MutantCase mc;
  mc.span2 = span2;
  mc.span4 = span4;
  mc.admissible = true;
  for (const auto& u : span2)
    for (const auto& w : span4) mc.admissible = mc.admissible && admissible_pair(u, w, eps, p);

  if (auto v = find_odd_char(span2, n, p)) {
    mc.branch = "odd-2";
    mc.a = *v;
    mc.b = ModRow(n, 0);
  } else if (auto w = find_odd_char(span4, n, p)) {
    mc.branch = "odd-4";
    mc.a = ModRow(n, 0);
    mc.b = *w;
  } else {
    std::vector<ModRow> s2 = span2;
    auto piv = rref_mod_p(s2, p);
    const std::size_t k = piv.size();
    require(2 * k == n && rank_mod_p(span4, p) == k, ErrorKind::InternalInvariantViolation,
            "no odd character but A* is not half-dimensional in each eigenspace");
    std::vector<std::size_t> rest;
    for (std::size_t c = 0; c < n; ++c)
      if (std::find(piv.begin(), piv.end(), c) == piv.end()) rest.push_back(c);
    std::vector<ModRow> e(k, ModRow(k, 0));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) e[r][c] = s2[r][rest[c]];
    require(is_permuted_diagonal(e), ErrorKind::InternalInvariantViolation,
            "even A*_2 is not of the form (I C)R with C diagonal");
    const ModRow& row = s2.front();
    const std::size_t i0 = piv.front();
    std::size_t j0 = n;
    for (std::size_t c : rest)
      if (row[c] != 0) j0 = c;
    const i64 c = row[j0];
    ModRow alpha4(n, 0);
    alpha4[i0] = mod_norm(eps[i0], p);
    alpha4[j0] = mod_norm(-eps[j0] * *inv_mod(c, p), p);
    require(in_span(span4, alpha4, p), ErrorKind::InternalInvariantViolation,
            "A*_4 does not contain the partner of the first A*_2 generator");
    mc.branch = "even";
    mc.a = row;
    mc.b = alpha4;
    for (auto& x : mc.b) x = mod_norm(eps[i0] * x, p);
  }

  mc.character_admissible = admissible_pair(mc.a, mc.b, eps, p);
  std::vector<std::vector<i64>> coef(n);
  for (std::size_t s = 0; s < n; ++s) coef[s] = {mc.a[s], mc.b[s]};
  mc.delta = cm.delta(cm.from_coefficients(coef));
  mc.verdict = norm_test(mc.delta, cm.genericity());
  return mc;
}

MutantReport mutant_sum_obstruction(const std::vector<json>& companions, const std::vector<int>& eps,
                                    std::size_t budget, MutantMode mode) {
  const std::size_t n = companions.size();
  require(n >= 1 && eps.size() == n, ErrorKind::InvalidInput, "one sign per companion expected");
  MutantReport rep;
  rep.eps = eps;
  json spec{{"kind", "sum"}, {"summands", json::array()}};
  std::map<std::string, int> sign_of;
  for (std::size_t i = 0; i < n; ++i) {
    require(eps[i] == 1 || eps[i] == -1, ErrorKind::InvalidInput, "signs must be +1 or -1");
    const std::string id = canonical_id(companions[i]);
    auto [it, fresh] = sign_of.emplace(id, eps[i]);
    require(fresh || it->second == eps[i], ErrorKind::InvalidInput, "equal companions must carry equal signs");
    rep.companions.push_back(id);
    spec["summands"].push_back(json{{"knot", kj_spec(companions[i], true)}, {"sign", eps[i]}});
  }
  CharacterModel cm(build(spec), 3, 7);
  for (std::size_t s = 0; s < n; ++s)
    require(cm.eigenvalues(s) == std::vector<i64>{2, 4}, ErrorKind::InternalInvariantViolation,
            "base cover does not split into the 2 and 4 eigencharacters");
  for (const auto& [id, f] : cm.genericity().polys) {
    if (f.span() != 2) fail(ErrorKind::HypothesisUnverified, "companion polynomial " + id + " is not quadratic");
    PolyHypotheses h = check_poly_hypotheses(f);
    if (!h.passes) fail(ErrorKind::HypothesisUnverified, "companion polynomial " + id + " fails the hypotheses");
  }
  rep.notes.push_back("residual delta tokens are assumed coprime to the Alexander factors");

  bool enumerate = mode != MutantMode::Abstract;
  std::vector<Metabolizer> mets;
  if (enumerate) {
    try {
      mets = enumerate_metabolizers(cm.form(), true, budget);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded || mode == MutantMode::Enumerate) throw;
      enumerate = false;
      rep.notes.push_back("metabolizer enumeration exceeded the budget; switched to abstract A*");
    }
  }

  if (enumerate) {
    rep.mode = "enumerated";
    rep.metabolizers = mets.size();
    for (const auto& a : mets) {
      CharSpace vc = vanishing_chars(cm.form(), a, 7);
      require(vc.diagonalizable, ErrorKind::InternalInvariantViolation, "invariant A* does not split");
      std::vector<ModRow> s2, s4;
      for (const auto& e : vc.eigen) {
        require(e.lambda == 2 || e.lambda == 4, ErrorKind::InternalInvariantViolation, "unexpected eigenvalue");
        for (const auto& row : e.basis) {
          auto coef = cm.coefficients(row);
          ModRow v(n);
          for (std::size_t s = 0; s < n; ++s) {
            require(coef[s][e.lambda == 2 ? 1 : 0] == 0, ErrorKind::InternalInvariantViolation,
                    "eigencharacter has a component in the other eigenspace");
            v[s] = coef[s][e.lambda == 2 ? 0 : 1];
          }
          (e.lambda == 2 ? s2 : s4).push_back(std::move(v));
        }
      }
      MutantCase mc = decide_mutant_case(cm, s2, s4, eps);
      mc.source = "metabolizer";
      mc.generators = a.generators;
      rep.cases.push_back(std::move(mc));
    }
  } else {
    rep.mode = "abstract";
    for (std::size_t k = n / 2 + 1; k <= n; ++k)
      for (const auto& s : subspaces(n, k, 7)) {
        for (int role = 0; role < 2; ++role) {
          MutantCase mc = role == 0 ? decide_mutant_case(cm, s, {}, eps) : decide_mutant_case(cm, {}, s, eps);
          mc.source = "abstract";
          rep.cases.push_back(std::move(mc));
        }
      }
    if (n % 2 == 0) {
      for (const auto& s : subspaces(n, n / 2, 7)) {
        std::vector<ModRow> weighted = s;
        for (auto& row : weighted)
          for (std::size_t i = 0; i < n; ++i) row[i] = mod_norm(eps[i] * row[i], 7);
        auto perp = nullspace_mod_p(weighted, n, 7);
        rref_mod_p(perp, 7);
        MutantCase mc = decide_mutant_case(cm, s, perp, eps);
        mc.source = "abstract";
        rep.cases.push_back(std::move(mc));
      }
    }
  }
  rep.all_not_norm = !rep.cases.empty() && std::all_of(rep.cases.begin(), rep.cases.end(), [](const MutantCase& c) {
    return c.verdict == NormVerdict::NotNorm;
  });
  return rep;
}

}  // namespace cgk
