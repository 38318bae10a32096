#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cgk/matrix.hpp"

namespace cgk {

using i64 = std::int64_t;
using ModRow = std::vector<i64>;

inline i64 mod_norm(i64 a, i64 n) {
  i64 r = a % n;
  return r < 0 ? r + n : r;
}
inline i64 mul_mod(i64 a, i64 b, i64 n) {
  return static_cast<i64>((static_cast<__int128>(a) * b) % n);
}
i64 pow_mod(i64 a, i64 e, i64 n);
i64 gcd_i64(i64 a, i64 b);
// Inverse of a modulo n; nullopt when gcd(a, n) != 1.
std::optional<i64> inv_mod(i64 a, i64 n);
bool is_prime(i64 n);

// Residue in Z/n with closed arithmetic.
class ModInt {
 public:
  ModInt(i64 value, i64 modulus);
  i64 value() const { return v_; }
  i64 modulus() const { return n_; }
  ModInt operator+(const ModInt& o) const;
  ModInt operator-(const ModInt& o) const;
  ModInt operator*(const ModInt& o) const;
  ModInt operator-() const;
  bool invertible() const;
  ModInt inverse() const;  // throws InvalidInput when not a unit
  ModInt pow(i64 e) const;
  bool operator==(const ModInt& o) const { return v_ == o.v_ && n_ == o.n_; }

 private:
  i64 v_, n_;
};

// All r in [0, n) with r^3 = 1 mod n.
std::vector<i64> cube_roots_mod(i64 n);
// All r in [0, n) with r^d = 1 mod n.
std::vector<i64> roots_of_unity_mod(i64 d, i64 n);

// Reduced row echelon form over the field Z/p. Returns pivot columns.
std::vector<std::size_t> rref_mod_p(std::vector<ModRow>& rows, i64 p);
// Basis of {x : A x = 0} over Z/p, A given as rows.
std::vector<ModRow> nullspace_mod_p(const std::vector<ModRow>& a, std::size_t ncols, i64 p);
std::size_t rank_mod_p(std::vector<ModRow> rows, i64 p);

// Howell normal form of the row span of `rows` in (Z/N)^k. Two generator
// sets span the same submodule iff their Howell forms are equal.
std::vector<ModRow> howell_form(std::vector<ModRow> rows, i64 n, std::size_t k);
// Order of the submodule with the given Howell form.
i64 howell_order(const std::vector<ModRow>& h, i64 n);

// Inverse of a square matrix over Z/N; nullopt if it is not invertible.
std::optional<std::vector<ModRow>> inverse_mod(const std::vector<ModRow>& a, i64 n);

i64 to_i64(const Int& x);
i64 mod_of(const Int& x, i64 n);

}  // namespace cgk
