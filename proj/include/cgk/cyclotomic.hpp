#pragma once

#include <map>
#include <string>
#include <vector>

#include "cgk/poly.hpp"

namespace cgk {

// Element of Q(zeta_p) = Q[x]/(1 + x + ... + x^{p-1}), stored in the power
// basis 1, zeta, ..., zeta^{p-2}.
class CycNum {
 public:
  CycNum() = default;
  explicit CycNum(int p);  // zero
  static CycNum rational(int p, const Rat& r);
  static CycNum zeta_pow(int p, long k);  // zeta^k for any integer k

  int prime() const { return p_; }
  bool is_zero() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator-() const;
  CycNum operator*(const CycNum& o) const;
  CycNum inverse() const;  // throws on zero
  CycNum operator/(const CycNum& o) const { return *this * o.inverse(); }
  CycNum conj() const;     // zeta -> zeta^{-1}
  bool operator==(const CycNum& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const CycNum& o) const { return !(*this == o); }
  // If this equals +-zeta^m, returns sign * (m + 1); otherwise 0.
  int as_signed_root_of_unity() const;

  std::string str() const;

 private:
  // Fold a length-p vector (coefficients of 1..x^{p-1}) into the basis.
  static CycNum reduce(int p, std::vector<Rat> full);
  int p_ = 0;
  std::vector<Rat> c_;
};

// Laurent polynomial in t with coefficients in Q(zeta_p).
class CycLaurent {
 public:
  CycLaurent() = default;
  explicit CycLaurent(int p) : p_(p) {}
  static CycLaurent monomial(const CycNum& c, int e);

  int prime() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, CycNum>& terms() const { return terms_; }
  CycNum coeff(int e) const;
  int min_exp() const { return terms_.begin()->first; }
  int max_exp() const { return terms_.rbegin()->first; }

  CycLaurent operator+(const CycLaurent& o) const;
  CycLaurent operator-(const CycLaurent& o) const;
  CycLaurent operator*(const CycLaurent& o) const;
  CycLaurent scaled(const CycNum& c) const;
  CycLaurent shifted(int k) const;  // multiply by t^k
  bool operator==(const CycLaurent& o) const { return p_ == o.p_ && terms_ == o.terms_; }

  // Coefficientwise zeta -> zeta^{-1} together with t -> t^{-1}.
  CycLaurent conj() const;
  // f = u g for a unit u = +-zeta^m t^k.
  bool is_associate(const CycLaurent& g) const;
  std::string str() const;

 private:
  void set(int e, const CycNum& c);
  int p_ = 0;
  std::map<int, CycNum> terms_;
};

// f(zeta^shift * t) expanded over Q(zeta_p).
CycLaurent cyc_eval(const RatLaurent& f, long shift, int p);

}  // namespace cgk
