#pragma once

// Exact elements of Z[zeta_p], p an odd prime.
//
// A value is stored as p coefficients c_0..c_{p-1} of 1, zeta, ..., zeta^{p-1}.
// Canonical form uses 1 + zeta + ... + zeta^{p-1} = 0 to force c_{p-1} = 0, so
// equality of values is equality of canonical coefficient vectors. All
// arithmetic is checked and throws std::overflow_error instead of wrapping.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cwe {

class CycInt {
 public:
  CycInt() = default;
  /// Zero of Z[zeta_p].
  explicit CycInt(unsigned p);
  /// Canonicalizes an arbitrary length-p coefficient vector.
  CycInt(unsigned p, std::vector<std::int64_t> coeffs);

  static CycInt integer(unsigned p, std::int64_t n);
  /// zeta_p^t, t reduced mod p.
  static CycInt root(unsigned p, std::int64_t t);
  /// sum_t counts[t] zeta^t for a length-p histogram of exponents.
  static CycInt from_exponent_counts(unsigned p, std::span<const std::int64_t> counts);

  unsigned p() const { return p_; }
  std::span<const std::int64_t> coeffs() const { return c_; }

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  CycInt scaled(std::int64_t n) const;
  /// Multiplication by zeta^t is a cyclic shift followed by canonicalization.
  CycInt times_root(std::int64_t t) const;
  /// Image under the automorphism zeta -> zeta^t, gcd(t, p) = 1.
  CycInt galois(std::int64_t t) const;

  /// n when the value is the rational integer n.
  std::optional<std::int64_t> as_rational_integer() const;
  bool is_zero() const;

  friend bool operator==(const CycInt& a, const CycInt& b) = default;

  std::string to_string() const;

 private:
  void canonicalize();
  void check_same(const CycInt& o) const;

  unsigned p_ = 0;
  std::vector<std::int64_t> c_;
};

// Named forms of the ring operations.
inline CycInt cyc_from_root(unsigned p, std::int64_t t) { return CycInt::root(p, t); }
inline CycInt cyc_add(const CycInt& a, const CycInt& b) { return a + b; }
inline CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }
inline CycInt cyc_neg(const CycInt& a) { return -a; }
inline CycInt cyc_scale(const CycInt& a, std::int64_t n) { return a.scaled(n); }
inline std::optional<std::int64_t> as_rational_integer(const CycInt& a) { return a.as_rational_integer(); }

}  // namespace cwe
