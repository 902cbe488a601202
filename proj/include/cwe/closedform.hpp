#pragma once

// Closed-form predictions for C_{D_c}: code length, the counting quantities
// B(b,c) and N_rho(b,c), and the weight and complete weight enumerators of the
// four parameter cases and their two degenerate corollaries.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cwe/charsums.hpp"
#include "cwe/codes.hpp"

namespace cwe {

enum class Degenerate { none, m_eq_d_plus_1, m_eq_d };

std::string to_string(Degenerate d);

struct CaseClass {
  bool condition_holds = false;
  bool c_zero = false;
  Degenerate degenerate = Degenerate::none;

  /// 1: c = 0, condition fails. 2: c = 0, holds. 3: c != 0, fails. 4: c != 0, holds.
  int number() const;
  /// "Theorem 1" .. "Theorem 4", "Corollary 1", "Corollary 2", or "none".
  std::string source() const;
  friend bool operator==(const CaseClass&, const CaseClass&) = default;
};

CaseClass classify(const CodeParams& params);

class NoClosedForm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// n_c in closed form.
std::int64_t predict_nc(const CodeParams& params);

/// One monomial of a predicted complete weight enumerator.
struct CweTerm {
  std::string label;
  Composition composition;
  std::uint64_t frequency = 0;
};

struct Prediction {
  CaseClass cls;
  std::uint64_t length = 0;
  unsigned dimension = 0;
  std::uint64_t multiplicity = 1;
  WeightEnumerator we;
  CompleteWeightEnumerator cwe;
  std::vector<CweTerm> terms;
};

/// Throws std::invalid_argument when `cls` is not classify(params), and
/// NoClosedForm for parameters no theorem covers.
WeightEnumerator predict_we(const CodeParams& params, const CaseClass& cls);
std::vector<CweTerm> predict_cwe_terms(const CodeParams& params, const CaseClass& cls);
CompleteWeightEnumerator predict_cwe(const CodeParams& params, const CaseClass& cls);
Prediction predict(const CodeParams& params);

/// Evaluates the per-b lemma tables. Holds one row-reduced f_a.
class LemmaEvaluator {
 public:
  explicit LemmaEvaluator(const CodeParams& params);

  struct Gamma {
    bool solvable = false;
    /// Tr(a gamma^{p^k+1}) for a solution gamma of f_a(X) = -b^{p^k}.
    FpElem t;
  };
  Gamma gamma(FqElem b) const;

  /// B(b, c) for b != 0, rho != 0.
  std::int64_t B(FqElem b, FpElem rho) const;
  /// N_rho(b, c) over the full fiber, b != 0, any rho.
  std::int64_t N(FqElem b, FpElem rho) const;

 private:
  CodeParams params_;
  bool holds_;
  AffineSolver solver_;
};

std::int64_t predict_B(const CodeParams& params, FqElem b, FpElem rho);
std::int64_t predict_N(const CodeParams& params, FqElem b, FpElem rho);

}  // namespace cwe
