#pragma once

// The trace code C_{D_c} = {(Tr(bx))_{x in D_c} : b in F_q} over the defining
// set D_c = {x in F_q^* : Tr(a x^{p^k+1}) = c}, and its exact enumerators.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cwe/charsums.hpp"
#include "cwe/galois.hpp"

namespace cwe {

class CodeParams {
 public:
  /// Throws std::invalid_argument when e is odd, e/d is odd, a == 0, or c >= p.
  static CodeParams make(const FieldCtx& ctx, unsigned k, FqElem a, FpElem c);

  const FieldCtx& ctx() const { return weil_.ctx; }
  const WeilParams& weil() const { return weil_; }
  unsigned p() const { return ctx().p(); }
  unsigned e() const { return ctx().e(); }
  std::uint64_t q() const { return ctx().q(); }
  unsigned k() const { return weil_.k; }
  unsigned d() const { return weil_.d; }
  unsigned m() const { return weil_.m; }
  unsigned s() const { return weil_.s; }
  /// (-1)^s as an integer.
  int sign_s() const { return weil_.s % 2 == 0 ? 1 : -1; }
  FqElem a() const { return a_; }
  FpElem c() const { return c_; }

 private:
  CodeParams(WeilParams w, FqElem a, FpElem c) : weil_(std::move(w)), a_(a), c_(c) {}

  WeilParams weil_;
  FqElem a_;
  FpElem c_;
};

class EmptyDefiningSet : public std::domain_error {
 public:
  EmptyDefiningSet() : std::domain_error("empty defining set") {}
};

struct DefiningSet {
  std::vector<FqElem> elements;
  FpElem c;
  std::size_t size() const { return elements.size(); }
};

/// (k_0, ..., k_{p-1}): how many coordinates equal each symbol.
using Composition = std::vector<std::uint64_t>;

/// weight -> number of b in F_q whose codeword has that weight.
struct WeightEnumerator {
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t total() const;
  /// Least nonzero weight, 0 if every codeword is zero.
  std::uint64_t min_nonzero() const;
  std::uint64_t max_weight() const;
  /// e.g. "1 + 32z^162 + 648z^198"
  std::string to_string() const;
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

struct CompleteWeightEnumerator {
  std::map<Composition, std::uint64_t> counts;

  std::uint64_t total() const;
  /// Composition -> n - k_0.
  WeightEnumerator project() const;
  friend bool operator==(const CompleteWeightEnumerator&, const CompleteWeightEnumerator&) = default;
};

struct CodeSummary {
  CodeParams params;
  std::uint64_t length = 0;
  unsigned dimension = 0;
  std::uint64_t min_distance = 0;
  /// Number of b giving each distinct codeword.
  std::uint64_t multiplicity = 1;
  WeightEnumerator we;
  CompleteWeightEnumerator cwe;
  /// Composition of c_b for every b, flattened: entry [b.index * p + rho].
  std::vector<std::uint32_t> compositions;

  std::span<const std::uint32_t> composition(FqElem b) const {
    return std::span<const std::uint32_t>(compositions).subspan(std::size_t{b.index} * params.p(), params.p());
  }
};

/// Nonzero x with Tr(a x^{p^k+1}) = c in canonical order. Throws EmptyDefiningSet.
DefiningSet defining_set(const CodeParams& params);
Composition symbol_counts(const CodeParams& params, const DefiningSet& D, FqElem b);
/// The full codeword c_b.
std::vector<std::uint8_t> codeword(const CodeParams& params, const DefiningSet& D, FqElem b);

/// Enumerates every b in F_q. Throws EmptyDefiningSet.
CodeSummary build_code(const CodeParams& params);

/// #{x in F_q : Tr(a x^{p^k+1}) = c}, including x = 0 when c = 0.
std::uint64_t count_nc(const CodeParams& params);
/// N_rho(b, c) over the whole fiber in F_q for every rho, by direct counting.
Composition full_fiber_counts(const CodeParams& params, FqElem b);
/// Tr(a x^{p^k+1}) for every x, indexed by FqElem::index.
std::vector<std::uint8_t> quadratic_trace_table(const CodeParams& params);

}  // namespace cwe
