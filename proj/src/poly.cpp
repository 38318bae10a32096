#include "cgk/poly.hpp"

#include <algorithm>
#include <sstream>

#include "cgk/error.hpp"

namespace cgk {

QPoly::QPoly(std::vector<Rat> c) : c_(std::move(c)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

QPoly::QPoly(std::initializer_list<long> c) {
  for (long v : c) c_.emplace_back(v);
  trim();
}

QPoly QPoly::constant(const Rat& c) { return QPoly(std::vector<Rat>{c}); }

QPoly QPoly::monomial(const Rat& c, int e) {
  std::vector<Rat> v(static_cast<std::size_t>(e) + 1, Rat(0));
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat QPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return c_[static_cast<std::size_t>(i)];
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::scaled(const Rat& s) const {
  if (s == 0) return {};
  QPoly r(*this);
  for (auto& x : r.c_) x *= s;
  return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  require(!b.is_zero(), ErrorKind::InvalidInput, "polynomial division by zero");
  std::vector<Rat> rem = a.c_;
  const int db = b.degree();
  const int da = a.degree();
  std::vector<Rat> quo(da >= db ? static_cast<std::size_t>(da - db + 1) : 0, Rat(0));
  Rat lb = b.leading();
  for (int i = da; i >= db; --i) {
    Rat f = rem[static_cast<std::size_t>(i)] / lb;
    if (f == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
  }
  q = QPoly(std::move(quo));
  r = QPoly(std::move(rem));
}

QPoly QPoly::operator/(const QPoly& o) const {
  QPoly q, r;
  divmod(*this, o, q, r);
  return q;
}

QPoly QPoly::operator%(const QPoly& o) const {
  QPoly q, r;
  divmod(*this, o, q, r);
  return r;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading());
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int QPoly::sign_at(const Rat& x) const { return sgn(eval(x)); }

QPoly QPoly::primitive() const {
  if (is_zero()) return {};
  Int den = 1, num = 0;
  for (const auto& x : c_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  for (const auto& x : c_) {
    Int v = x.get_num() * (den / x.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  return scaled(Rat(den, num));
}

std::vector<Int> QPoly::integer_coeffs() const {
  std::vector<Int> r;
  r.reserve(c_.size());
  for (const auto& x : c_) {
    require(x.get_den() == 1, ErrorKind::InvalidInput, "polynomial has non-integral coefficients");
    r.push_back(x.get_num());
  }
  return r;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = (a % b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return p;
  return (p / gcd(p, p.derivative())).primitive();
}

QPoly pow(const QPoly& p, int e) {
  QPoly r = QPoly::constant(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

SturmSequence::SturmSequence(const QPoly& sf) {
  if (sf.is_zero()) return;
  seq_.push_back(sf.primitive());
  if (sf.degree() == 0) return;
  seq_.push_back(sf.derivative().primitive());
  while (seq_.back().degree() > 0) {
    QPoly r = seq_[seq_.size() - 2] % seq_.back();
    if (r.is_zero()) break;
    seq_.push_back((-r).primitive());
  }
}

int SturmSequence::variations(const Rat& x) const {
  int v = 0, last = 0;
  for (const auto& p : seq_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::count(const Rat& a, const Rat& b) const {
  if (seq_.empty() || seq_.front().degree() <= 0) return 0;
  return variations(a) - variations(b);
}

Rat root_bound(const QPoly& p) {
  Rat m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rat r = abs(p.coeff(i) / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

QPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<Rat> dd(ys);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QPoly r;
  for (std::size_t i = n; i-- > 0;) {
    r = r * QPoly(std::vector<Rat>{-xs[i], Rat(1)}) + QPoly::constant(dd[i]);
  }
  return r;
}

QPoly cyclotomic_poly(int d) {
  QPoly r = QPoly::monomial(1, d) - QPoly::constant(1);
  for (int e = 1; e < d; ++e)
    if (d % e == 0) r = r / cyclotomic_poly(e);
  return r;
}

RatLaurent::RatLaurent(const QPoly& p, int low) : low_(low), p_(p) { canon(); }

void RatLaurent::canon() {
  if (p_.is_zero()) {
    low_ = 0;
    return;
  }
  int k = 0;
  while (p_.coeff(k) == 0) ++k;
  if (k > 0) {
    std::vector<Rat> c(p_.coeffs().begin() + k, p_.coeffs().end());
    p_ = QPoly(std::move(c));
    low_ += k;
  }
}

RatLaurent RatLaurent::from_terms(const std::map<int, Rat>& terms) {
  if (terms.empty()) return {};
  int lo = terms.begin()->first, hi = terms.rbegin()->first;
  std::vector<Rat> c(static_cast<std::size_t>(hi - lo + 1), Rat(0));
  for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] = v;
  return RatLaurent(QPoly(std::move(c)), lo);
}

RatLaurent RatLaurent::monomial(const Rat& c, int e) { return RatLaurent(QPoly::constant(c), e); }

std::map<int, Rat> RatLaurent::terms() const {
  std::map<int, Rat> m;
  for (int i = 0; i <= p_.degree(); ++i)
    if (p_.coeff(i) != 0) m[low_ + i] = p_.coeff(i);
  return m;
}

RatLaurent RatLaurent::operator+(const RatLaurent& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(low_, o.low_);
  QPoly a = p_ * QPoly::monomial(1, low_ - lo);
  QPoly b = o.p_ * QPoly::monomial(1, o.low_ - lo);
  return RatLaurent(a + b, lo);
}

RatLaurent RatLaurent::operator-(const RatLaurent& o) const {
  return *this + RatLaurent(-o.p_, o.low_);
}

RatLaurent RatLaurent::operator*(const RatLaurent& o) const {
  return RatLaurent(p_ * o.p_, low_ + o.low_);
}

RatLaurent RatLaurent::normalized() const {
  if (is_zero()) return {};
  QPoly p = p_.leading() < 0 ? -p_ : p_;
  return RatLaurent(p, 0);
}

bool RatLaurent::equal_up_to_unit(const RatLaurent& o) const {
  return normalized() == o.normalized();
}

RatLaurent RatLaurent::reciprocal() const {
  std::vector<Rat> c(p_.coeffs().rbegin(), p_.coeffs().rend());
  return RatLaurent(QPoly(std::move(c)), -max_exp());
}

bool RatLaurent::symmetric() const { return reciprocal().equal_up_to_unit(*this); }

std::string RatLaurent::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p_.degree(); i >= 0; --i) {
    Rat c = p_.coeff(i);
    if (c == 0) continue;
    int e = low_ + i;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    Rat a = abs(c);
    bool unit = a == 1;
    if (!unit || e == 0) {
      if (a.get_den() == 1)
        os << a.get_num().get_str();
      else
        os << "(" << a.get_str() << ")";
    }
    if (e != 0) {
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace cgk
