#pragma once

#include <map>
#include <string>
#include <vector>

#include "cgk/matrix.hpp"

namespace cgk {

// Dense univariate polynomial over Q, ascending coefficients, always trimmed.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> c);
  QPoly(std::initializer_list<long> c);
  static QPoly constant(const Rat& c);
  static QPoly monomial(const Rat& c, int e);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const { return c_.back(); }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly scaled(const Rat& s) const;
  QPoly operator/(const QPoly& o) const;  // quotient
  QPoly operator%(const QPoly& o) const;  // remainder
  static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return c_ != o.c_; }

  QPoly derivative() const;
  QPoly monic() const;
  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const;
  // Positive rational multiple with coprime integer coefficients.
  QPoly primitive() const;
  std::vector<Int> integer_coeffs() const;  // requires integral coefficients

 private:
  void trim();
  std::vector<Rat> c_;
};

QPoly gcd(QPoly a, QPoly b);  // monic gcd, zero if both zero
QPoly squarefree_part(const QPoly& p);
QPoly pow(const QPoly& p, int e);

// Sturm sequence of a squarefree polynomial; counts distinct real roots.
class SturmSequence {
 public:
  SturmSequence() = default;
  explicit SturmSequence(const QPoly& squarefree);
  int variations(const Rat& x) const;
  // Number of distinct roots in the half-open interval (a, b].
  int count(const Rat& a, const Rat& b) const;
  const QPoly& base() const { return seq_.front(); }
  bool empty() const { return seq_.empty(); }

 private:
  std::vector<QPoly> seq_;
};

// Cauchy bound: every real root has |x| < bound.
Rat root_bound(const QPoly& p);

// Interpolating polynomial through (xs[i], ys[i]) with distinct xs.
QPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// The d-th cyclotomic polynomial.
QPoly cyclotomic_poly(int d);

// Laurent polynomial over Q: value = t^low * p(t) with p(0) != 0 unless zero.
class RatLaurent {
 public:
  RatLaurent() = default;
  RatLaurent(const QPoly& p, int low = 0);
  static RatLaurent from_terms(const std::map<int, Rat>& terms);
  static RatLaurent monomial(const Rat& c, int e);

  bool is_zero() const { return p_.is_zero(); }
  int min_exp() const { return low_; }
  int max_exp() const { return low_ + p_.degree(); }
  int span() const { return p_.degree(); }
  Rat coeff(int e) const { return p_.coeff(e - low_); }
  std::map<int, Rat> terms() const;
  const QPoly& body() const { return p_; }

  RatLaurent operator+(const RatLaurent& o) const;
  RatLaurent operator-(const RatLaurent& o) const;
  RatLaurent operator*(const RatLaurent& o) const;
  bool operator==(const RatLaurent& o) const { return low_ == o.low_ && p_ == o.p_; }

  // Minimal exponent 0 and positive leading coefficient.
  RatLaurent normalized() const;
  bool equal_up_to_unit(const RatLaurent& o) const;  // units +-t^k
  RatLaurent reciprocal() const;                      // t -> 1/t
  bool symmetric() const;  // f(1/t) = +-t^k f(t)
  std::string str(const std::string& var = "t") const;

 private:
  void canon();
  int low_ = 0;
  QPoly p_;
};

}  // namespace cgk
