#pragma once

// Prime fields F_p and extension fields F_{p^e} in a polynomial basis.
//
// Elements are plain values; every operation takes the owning FieldCtx
// explicitly. An FqElem packs its coefficient vector (c_0, ..., c_{e-1}) as the
// base-p integer c_0 + c_1 p + ... + c_{e-1} p^{e-1}, so the zero element is 0,
// the one element is 1, and F_p embeds as the indices 0..p-1.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cwe {

struct FpElem {
  std::uint32_t value = 0;
  friend auto operator<=>(const FpElem&, const FpElem&) = default;
};

struct FqElem {
  std::uint32_t index = 0;
  friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

bool is_prime(std::uint64_t n);
/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

// Prime-field helpers. p is passed explicitly since FpElem carries no modulus.
FpElem fp_add(unsigned p, FpElem x, FpElem y);
FpElem fp_sub(unsigned p, FpElem x, FpElem y);
FpElem fp_mul(unsigned p, FpElem x, FpElem y);
FpElem fp_neg(unsigned p, FpElem x);
FpElem fp_inv(unsigned p, FpElem x);
FpElem fp_reduce(unsigned p, std::int64_t v);

/// Quadratic character of F_p, extended by eta(0) = 0.
int eta_p(unsigned p, FpElem x);
/// Least primitive root modulo p.
FpElem prime_generator(unsigned p);

class FieldCtx {
 public:
  /// Builds F_{p^e} modulo the lexicographically least monic primitive
  /// polynomial (coefficient tuples compared low degree first). theta is the
  /// class of X. Throws std::invalid_argument for even or composite p, or e == 0.
  static FieldCtx build(unsigned p, unsigned e);

  unsigned p() const { return t_->p; }
  unsigned e() const { return t_->e; }
  std::uint64_t q() const { return t_->q; }

  /// c_0, ..., c_{e-1}, c_e = 1.
  std::span<const std::uint32_t> modulus() const { return t_->modulus; }
  /// Human-readable modulus, highest degree first, e.g. "X^2 + 2X + 2".
  std::string modulus_string() const;

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  FqElem theta() const;
  FqElem embed(FpElem x) const { return {x.value}; }
  /// Throws std::invalid_argument on wrong length.
  FqElem from_coeffs(std::span<const std::int64_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FqElem x) const;
  bool contains(FqElem x) const { return x.index < t_->q; }

  FqElem add(FqElem x, FqElem y) const;
  FqElem sub(FqElem x, FqElem y) const;
  FqElem neg(FqElem x) const;
  FqElem scale(FpElem lambda, FqElem x) const;
  FqElem mul(FqElem x, FqElem y) const;
  /// Throws std::domain_error for x == 0.
  FqElem inv(FqElem x) const;
  FqElem pow(FqElem x, std::uint64_t n) const;
  /// x^{p^times}
  FqElem frobenius(FqElem x, unsigned times = 1) const;

  FqElem theta_pow(std::uint64_t t) const;
  /// Discrete log base theta; empty for zero.
  std::optional<std::uint64_t> log(FqElem x) const;

  FpElem trace(FqElem x) const { return {t_->trace[x.index]}; }
  /// Traces of the basis elements 1, X, ..., X^{e-1}.
  std::span<const std::uint8_t> basis_traces() const { return t_->basis_trace; }
  /// Trace of every element, indexed by FqElem::index.
  std::span<const std::uint8_t> trace_table() const { return t_->trace; }

  /// Quadratic character of F_q, extended by 0.
  int eta(FqElem x) const;

  /// i-th element of the canonical order 0, theta^0, theta^1, ..., theta^{q-2}.
  FqElem element(std::uint64_t i) const;

 private:
  struct Tables {
    unsigned p = 0;
    unsigned e = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> place;  // p^i
    std::vector<std::uint32_t> exp;    // exp[i] = theta^i, length q - 1
    std::vector<std::uint32_t> log;    // log[index], undefined at 0
    std::vector<std::uint8_t> trace;
    std::vector<std::uint8_t> basis_trace;
  };
  explicit FieldCtx(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::shared_ptr<const Tables> t_;
};

// Free-function forms of the field operations.
inline FpElem trace(const FieldCtx& ctx, FqElem x) { return ctx.trace(x); }
inline int eta_q(const FieldCtx& ctx, FqElem x) { return ctx.eta(x); }
inline FieldCtx build_field(unsigned p, unsigned e) { return FieldCtx::build(p, e); }

}  // namespace cwe
