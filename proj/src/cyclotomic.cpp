#include "cgk/cyclotomic.hpp"

#include <sstream>

#include "cgk/error.hpp"
#include "cgk/modular.hpp"

namespace cgk {

namespace {
long posmod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

QPoly cyclotomic_modulus(int p) {
  return QPoly(std::vector<Rat>(static_cast<std::size_t>(p), Rat(1)));
}
}  // namespace

CycNum::CycNum(int p) : p_(p), c_(static_cast<std::size_t>(p - 1), Rat(0)) {
  require(is_prime(p), ErrorKind::InvalidInput, "cyclotomic field needs a prime");
}

CycNum CycNum::rational(int p, const Rat& r) {
  CycNum z(p);
  z.c_[0] = r;
  return z;
}

CycNum CycNum::reduce(int p, std::vector<Rat> full) {
  CycNum z(p);
  const Rat top = full[static_cast<std::size_t>(p - 1)];
  for (int i = 0; i < p - 1; ++i) z.c_[static_cast<std::size_t>(i)] = full[static_cast<std::size_t>(i)] - top;
  return z;
}

CycNum CycNum::zeta_pow(int p, long k) {
  std::vector<Rat> full(static_cast<std::size_t>(p), Rat(0));
  full[static_cast<std::size_t>(posmod(k, p))] = 1;
  return reduce(p, std::move(full));
}

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

CycNum CycNum::operator+(const CycNum& o) const {
  CycNum z(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] += o.c_[i];
  return z;
}
CycNum CycNum::operator-(const CycNum& o) const {
  CycNum z(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] -= o.c_[i];
  return z;
}
CycNum CycNum::operator-() const {
  CycNum z(*this);
  for (auto& x : z.c_) x = -x;
  return z;
}

CycNum CycNum::operator*(const CycNum& o) const {
  require(p_ == o.p_, ErrorKind::InvalidInput, "mixing cyclotomic fields");
  std::vector<Rat> full(static_cast<std::size_t>(p_), Rat(0));
  for (int i = 0; i < p_ - 1; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < p_ - 1; ++j)
      full[static_cast<std::size_t>((i + j) % p_)] += c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
  }
  return reduce(p_, std::move(full));
}

CycNum CycNum::inverse() const {
  require(!is_zero(), ErrorKind::InvalidInput, "inverse of zero in cyclotomic field");
  // s a + t Phi = 1 by the extended Euclidean algorithm over Q.
  QPoly r0 = cyclotomic_modulus(p_), r1 = QPoly(c_);
  QPoly s0, s1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    QPoly q, r;
    QPoly::divmod(r0, r1, q, r);
    QPoly ns = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(ns);
  }
  // r0 is a nonzero constant; s0 * a = r0 mod Phi.
  QPoly inv = (s0.scaled(1 / r0.leading())) % cyclotomic_modulus(p_);
  CycNum z(p_);
  for (int i = 0; i <= inv.degree(); ++i) z.c_[static_cast<std::size_t>(i)] = inv.coeff(i);
  return z;
}

CycNum CycNum::conj() const {
  std::vector<Rat> full(static_cast<std::size_t>(p_), Rat(0));
  for (int i = 0; i < p_ - 1; ++i) full[static_cast<std::size_t>(posmod(-i, p_))] += c_[static_cast<std::size_t>(i)];
  return reduce(p_, std::move(full));
}

int CycNum::as_signed_root_of_unity() const {
  for (int m = 0; m < p_; ++m) {
    CycNum z = zeta_pow(p_, m);
    if (*this == z) return m + 1;
    if (*this == -z) return -(m + 1);
  }
  return 0;
}

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < p_ - 1; ++i) {
    const Rat& x = c_[static_cast<std::size_t>(i)];
    if (x == 0) continue;
    if (!first) os << (x < 0 ? "-" : "+");
    else if (x < 0) os << "-";
    Rat a = abs(x);
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

CycLaurent CycLaurent::monomial(const CycNum& c, int e) {
  CycLaurent f(c.prime());
  f.set(e, c);
  return f;
}

void CycLaurent::set(int e, const CycNum& c) {
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[e] = c;
}

CycNum CycLaurent::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CycNum(p_) : it->second;
}

CycLaurent CycLaurent::operator+(const CycLaurent& o) const {
  CycLaurent f(*this);
  if (f.p_ == 0) f.p_ = o.p_;
  for (const auto& [e, c] : o.terms_) f.set(e, f.coeff(e) + c);
  return f;
}

CycLaurent CycLaurent::operator-(const CycLaurent& o) const {
  CycLaurent f(*this);
  if (f.p_ == 0) f.p_ = o.p_;
  for (const auto& [e, c] : o.terms_) f.set(e, f.coeff(e) - c);
  return f;
}

CycLaurent CycLaurent::operator*(const CycLaurent& o) const {
  CycLaurent f(p_ ? p_ : o.p_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) f.set(e1 + e2, f.coeff(e1 + e2) + c1 * c2);
  return f;
}

CycLaurent CycLaurent::scaled(const CycNum& c) const {
  CycLaurent f(p_);
  for (const auto& [e, x] : terms_) f.set(e, x * c);
  return f;
}

CycLaurent CycLaurent::shifted(int k) const {
  CycLaurent f(p_);
  for (const auto& [e, x] : terms_) f.terms_[e + k] = x;
  return f;
}

CycLaurent CycLaurent::conj() const {
  CycLaurent f(p_);
  for (const auto& [e, x] : terms_) f.terms_[-e] = x.conj();
  return f;
}

bool CycLaurent::is_associate(const CycLaurent& g) const {
  if (is_zero() || g.is_zero()) return is_zero() && g.is_zero();
  if (max_exp() - min_exp() != g.max_exp() - g.min_exp()) return false;
  CycNum u = terms_.rbegin()->second / g.terms_.rbegin()->second;
  if (u.as_signed_root_of_unity() == 0) return false;
  return g.scaled(u).shifted(max_exp() - g.max_exp()) == *this;
}

std::string CycLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    os << "(" << it->second.str() << ")";
    if (it->first != 0) os << "t" << (it->first != 1 ? "^" + std::to_string(it->first) : "");
    first = false;
  }
  return os.str();
}

CycLaurent cyc_eval(const RatLaurent& f, long shift, int p) {
  CycLaurent out(p);
  for (const auto& [e, c] : f.terms()) {
    CycNum z = CycNum::zeta_pow(p, shift * e);
    out = out + CycLaurent::monomial(z * CycNum::rational(p, c), e);
  }
  return out;
}

}  // namespace cgk
