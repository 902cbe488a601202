#pragma once

// Character sums over F_q: additive characters, the quadratic Gauss sum, and
// the Weil sums S(alpha, beta) = sum_x chi_1(alpha x^{p^k+1} + beta x), each
// by direct summation and by closed form.

#include <cstdint>
#include <optional>
#include <vector>

#include "cwe/cyclotomic.hpp"
#include "cwe/galois.hpp"

namespace cwe {

/// (k, d = gcd(k, e), m = e/2, s = m/d) with e/d even.
struct WeilParams {
  FieldCtx ctx;
  unsigned k = 0;
  unsigned d = 0;
  unsigned m = 0;
  unsigned s = 0;

  /// Throws std::invalid_argument if k == 0, e is odd, or e/d is odd.
  static WeilParams make(const FieldCtx& ctx, unsigned k);
  /// p^k + 1 as an exponent.
  std::uint64_t quadratic_exponent() const;
};

CycInt additive_char(const FieldCtx& ctx, FqElem b, FqElem x);
/// G_e = sum_{x != 0} eta_e(x) chi_1(x).
CycInt gauss_sum_q(const FieldCtx& ctx);

CycInt weil_sum_direct(const WeilParams& wp, FqElem alpha, FqElem beta);

/// a^{(q-1)/(p^d+1)} == (-1)^s, compared as field elements.
bool condition_holds(const WeilParams& wp, FqElem a);
/// (-1)^s embedded in F_q.
FqElem minus_one_to_s(const WeilParams& wp);

/// Closed form of S(alpha, 0). Throws std::invalid_argument for alpha == 0.
std::int64_t weil_sum_alpha0_closed(const WeilParams& wp, FqElem alpha);

/// The F_p-linear map f_a(X) = a^{p^k} X^{p^{2k}} + a X as an e x e matrix,
/// row-reduced once so that each right-hand side costs O(e^2).
class AffineSolver {
 public:
  AffineSolver(const WeilParams& wp, FqElem a);

  FqElem apply(FqElem x) const;
  /// One solution of f_a(X) = rhs, or empty when unsolvable.
  std::optional<FqElem> particular(FqElem rhs) const;
  /// F_p-basis of ker f_a.
  const std::vector<FqElem>& kernel_basis() const { return kernel_; }
  std::uint64_t kernel_size() const;
  /// The full solution set, particular + span(kernel).
  std::vector<FqElem> solutions(FqElem rhs) const;
  /// rhs = -b^{p^k} for the given b.
  FqElem rhs_for(FqElem b) const;

 private:
  FieldCtx ctx_;
  unsigned k_;
  FqElem a_;
  FqElem a_pk_;
  std::vector<std::vector<std::uint32_t>> transform_;  // T with T * M = R
  std::vector<int> pivot_col_;                        // per row of R; -1 when zero row
  std::vector<FqElem> kernel_;
};

/// Complete solution set of f_a(X) = -b^{p^k}.
std::vector<FqElem> solve_affine(const WeilParams& wp, FqElem a, FqElem b);

/// Closed form of S(a, beta) for a, beta != 0; throws std::invalid_argument on a == 0.
CycInt weil_sum_closed(const WeilParams& wp, FqElem a, FqElem beta);
/// Same, with an explicit solution x0 of f_a(X) = -beta^{p^k}.
CycInt weil_sum_closed_at(const WeilParams& wp, FqElem a, FqElem x0);

/// #{b : f_a(X) = -b^{p^k} solvable}; p^e whenever f_a is a permutation.
std::uint64_t solvable_b_count(const WeilParams& wp, FqElem a);

/// zeta^{Tr(a0 - a1^2 (4 a2)^{-1})} eta_e(a2) G_e. Throws for a2 == 0.
CycInt quad_sum_closed(const FieldCtx& ctx, FqElem a2, FqElem a1, FqElem a0);
/// sum_x eta_e(a2 x^2 + a1 x + a0) in closed form. Throws for a2 == 0.
std::int64_t eta_sum_closed(const FieldCtx& ctx, FqElem a2, FqElem a1, FqElem a0);

}  // namespace cwe
