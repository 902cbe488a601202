#include "cwe/closedform.hpp"

#include <sstream>

namespace cwe {

namespace {

// Integer helper for p^k with k possibly computed as a difference of
// parameters; a negative exponent means the caller left the theorem's range.
struct Powers {
  unsigned p;
  std::int64_t operator()(int k) const {
    if (k < 0) throw std::logic_error("negative exponent in closed form");
    return static_cast<std::int64_t>(ipow(p, static_cast<unsigned>(k)));
  }
};

std::uint64_t as_count(std::int64_t v) {
  if (v < 0) throw std::logic_error("negative frequency in closed form");
  return static_cast<std::uint64_t>(v);
}

void check_case(const CodeParams& params, const CaseClass& cls) {
  if (!(cls == classify(params))) throw std::invalid_argument("parameter/case mismatch");
  if (cls.number() == 4 && cls.degenerate == Degenerate::m_eq_d) {
    throw NoClosedForm("no closed form available for c != 0 with m = d (empty defining set)");
  }
}

void add_weight(WeightEnumerator& we, std::int64_t weight, std::int64_t freq) {
  if (freq == 0) return;
  we.counts[as_count(weight)] += as_count(freq);
}

// A class of b values sharing N_0 (full fiber) and N_rho for rho != 0.
struct ClassSpec {
  std::string label;
  std::int64_t frequency;
  std::int64_t n0_full;
  std::vector<std::int64_t> n_rho;  // indexed by rho, entry 0 unused
};

std::vector<std::int64_t> constant_rho(unsigned p, std::int64_t v) { return std::vector<std::int64_t>(p, v); }

}  // namespace

std::string to_string(Degenerate d) {
  switch (d) {
    case Degenerate::none:
      return "none";
    case Degenerate::m_eq_d_plus_1:
      return "m_eq_d_plus_1";
    case Degenerate::m_eq_d:
      return "m_eq_d";
  }
  return "none";
}

int CaseClass::number() const {
  if (c_zero) return condition_holds ? 2 : 1;
  return condition_holds ? 4 : 3;
}

std::string CaseClass::source() const {
  switch (number()) {
    case 1:
      return "Theorem 1";
    case 2:
      if (degenerate == Degenerate::m_eq_d_plus_1) return "Corollary 1";
      if (degenerate == Degenerate::m_eq_d) return "Corollary 2";
      return "Theorem 2";
    case 3:
      return "Theorem 3";
    default:
      return degenerate == Degenerate::m_eq_d ? "none" : "Theorem 4";
  }
}

CaseClass classify(const CodeParams& params) {
  CaseClass cls;
  cls.condition_holds = condition_holds(params.weil(), params.a());
  cls.c_zero = params.c().value == 0;
  if (cls.condition_holds) {
    if (params.m() == params.d() + 1) cls.degenerate = Degenerate::m_eq_d_plus_1;
    if (params.m() == params.d()) cls.degenerate = Degenerate::m_eq_d;
  }
  return cls;
}

std::int64_t predict_nc(const CodeParams& params) {
  const Powers P{params.p()};
  const std::int64_t sg = params.sign_s();
  const int e = static_cast<int>(params.e()), m = static_cast<int>(params.m()), d = static_cast<int>(params.d());
  const std::int64_t p = params.p();
  const bool holds = condition_holds(params.weil(), params.a());
  if (params.c().value == 0) {
    return holds ? P(e - 1) - sg * (p - 1) * P(m + d - 1) : P(e - 1) + sg * (p - 1) * P(m - 1);
  }
  return holds ? P(e - 1) + sg * P(m + d - 1) : P(e - 1) - sg * P(m - 1);
}

WeightEnumerator predict_we(const CodeParams& params, const CaseClass& cls) {
  check_case(params, cls);
  const Powers P{params.p()};
  const std::int64_t sg = params.sign_s();
  const std::int64_t p = params.p();
  const std::int64_t half_lo = (p - 1) / 2, half_hi = (p + 1) / 2;
  const int e = static_cast<int>(params.e()), m = static_cast<int>(params.m()), d = static_cast<int>(params.d());

  WeightEnumerator we;
  switch (cls.number()) {
    case 1:
      add_weight(we, 0, 1);
      add_weight(we, (p - 1) * P(e - 2), P(e - 1) + sg * (p - 1) * P(m - 1) - 1);
      add_weight(we, (p - 1) * (P(e - 2) + sg * P(m - 1)), (p - 1) * (P(e - 1) - sg * P(m - 1)));
      break;
    case 2:
      if (cls.degenerate == Degenerate::m_eq_d_plus_1) {
        add_weight(we, 0, p * p);
        add_weight(we, (p - 1) * p, P(e) - p * p);
      } else if (cls.degenerate == Degenerate::m_eq_d) {
        add_weight(we, 0, 1);
        add_weight(we, (p - 1) * P(e - 1), P(e) - 1);
      } else {
        add_weight(we, 0, 1);
        add_weight(we, (p - 1) * (P(e - 2) - sg * (p - 1) * P(m + d - 2)), P(e) - P(e - 2 * d));
        add_weight(we, (p - 1) * P(e - 2), P(e - 2 * d - 1) - sg * (p - 1) * P(m - d - 1) - 1);
        add_weight(we, (p - 1) * (P(e - 2) - sg * P(m + d - 1)), (p - 1) * (P(e - 2 * d - 1) + sg * P(m - d - 1)));
      }
      break;
    case 3:
      add_weight(we, 0, 1);
      add_weight(we, (p - 1) * P(e - 2), half_hi * P(e - 1) + half_lo * sg * P(m - 1) - 1);
      add_weight(we, (p - 1) * P(e - 2) - 2 * sg * P(m - 1), half_lo * (P(e - 1) - sg * P(m - 1)));
      break;
    default:
      add_weight(we, 0, 1);
      add_weight(we, (p - 1) * (P(e - 2) + sg * P(m + d - 2)), P(e) - P(e - 2 * d));
      add_weight(we, (p - 1) * P(e - 2), half_hi * P(e - 2 * d - 1) - half_lo * sg * P(m - d - 1) - 1);
      add_weight(we, (p - 1) * P(e - 2) + 2 * sg * P(m + d - 1), half_lo * (P(e - 2 * d - 1) + sg * P(m - d - 1)));
      break;
  }
  return we;
}

std::vector<CweTerm> predict_cwe_terms(const CodeParams& params, const CaseClass& cls) {
  check_case(params, cls);
  const Powers P{params.p()};
  const std::int64_t sg = params.sign_s();
  const unsigned pu = params.p();
  const std::int64_t p = pu;
  const int e = static_cast<int>(params.e()), m = static_cast<int>(params.m()), d = static_cast<int>(params.d());
  const std::int64_t length = predict_nc(params) - (cls.c_zero ? 1 : 0);
  const std::string src = cls.source();

  std::vector<ClassSpec> classes;
  // For c != 0 the t != 0 classes split by u = c * Tr(a gamma^{p^k+1}); each
  // u in F_p^* gets its own composition with exponents eta(rho^2 - 4u), eta(-u).
  auto u_classes = [&](std::int64_t freq, std::int64_t shift) {
    for (unsigned u = 1; u < pu; ++u) {
      ClassSpec cs;
      std::ostringstream label;
      label << src << ": c*Tr(a*gamma^(p^k+1)) = " << u << (eta_p(pu, {u}) == 1 ? " (square)" : " (non-square)");
      cs.label = label.str();
      cs.frequency = freq;
      cs.n0_full = P(e - 2) + shift * eta_p(pu, fp_neg(pu, {u}));
      cs.n_rho.assign(pu, 0);
      for (unsigned rho = 1; rho < pu; ++rho) {
        const FpElem disc = fp_sub(pu, fp_mul(pu, {rho}, {rho}), fp_mul(pu, {4 % pu}, {u}));
        cs.n_rho[rho] = P(e - 2) + shift * eta_p(pu, disc);
      }
      classes.push_back(std::move(cs));
    }
  };

  switch (cls.number()) {
    case 1:
      classes.push_back({src + ": Tr(a*gamma^(p^k+1)) = 0", P(e - 1) + sg * (p - 1) * P(m - 1) - 1,
                         P(e - 2) + sg * (p - 1) * P(m - 1), constant_rho(pu, P(e - 2))});
      classes.push_back({src + ": Tr(a*gamma^(p^k+1)) != 0", (p - 1) * (P(e - 1) - sg * P(m - 1)), P(e - 2),
                         constant_rho(pu, P(e - 2) + sg * P(m - 1))});
      break;
    case 2:
      if (cls.degenerate == Degenerate::m_eq_d) {
        classes.push_back({src + ": b != 0", P(e) - 1, P(e - 1), constant_rho(pu, P(e - 1))});
        break;
      }
      {
        const std::int64_t unsolv = P(e - 2) - sg * (p - 1) * P(m + d - 2);
        classes.push_back({src + ": f_a(X) = -b^(p^k) unsolvable", P(e) - P(e - 2 * d), unsolv,
                           constant_rho(pu, unsolv)});
        classes.push_back({src + ": solvable, Tr(a*gamma^(p^k+1)) = 0",
                           P(e - 2 * d - 1) - sg * (p - 1) * P(m - d - 1) - 1, P(e - 2) - sg * (p - 1) * P(m + d - 1),
                           constant_rho(pu, P(e - 2))});
        classes.push_back({src + ": solvable, Tr(a*gamma^(p^k+1)) != 0",
                           (p - 1) * (P(e - 2 * d - 1) + sg * P(m - d - 1)), P(e - 2),
                           constant_rho(pu, P(e - 2) - sg * P(m + d - 1))});
      }
      break;
    case 3:
      classes.push_back({src + ": Tr(a*gamma^(p^k+1)) = 0", P(e - 1) + sg * (p - 1) * P(m - 1) - 1,
                         P(e - 2) - sg * P(m - 1), constant_rho(pu, P(e - 2))});
      u_classes(P(e - 1) - sg * P(m - 1), sg * P(m - 1));
      break;
    default: {
      const std::int64_t unsolv = P(e - 2) + sg * P(m + d - 2);
      classes.push_back({src + ": f_a(X) = -b^(p^k) unsolvable", P(e) - P(e - 2 * d), unsolv,
                         constant_rho(pu, unsolv)});
      classes.push_back({src + ": solvable, Tr(a*gamma^(p^k+1)) = 0",
                         P(e - 2 * d - 1) - sg * (p - 1) * P(m - d - 1) - 1, P(e - 2) + sg * P(m + d - 1),
                         constant_rho(pu, P(e - 2))});
      u_classes(P(e - 2 * d - 1) + sg * P(m - d - 1), -sg * P(m + d - 1));
      break;
    }
  }

  std::vector<CweTerm> terms;
  Composition zero(pu, 0);
  zero[0] = as_count(length);
  terms.push_back({src + ": zero codeword", zero, 1});
  for (const ClassSpec& cs : classes) {
    if (cs.frequency == 0) continue;
    Composition comp(pu, 0);
    comp[0] = as_count(cs.n0_full - (cls.c_zero ? 1 : 0));
    for (unsigned rho = 1; rho < pu; ++rho) comp[rho] = as_count(cs.n_rho[rho]);
    terms.push_back({cs.label, std::move(comp), as_count(cs.frequency)});
  }
  return terms;
}

CompleteWeightEnumerator predict_cwe(const CodeParams& params, const CaseClass& cls) {
  CompleteWeightEnumerator cwe;
  for (const CweTerm& t : predict_cwe_terms(params, cls)) cwe.counts[t.composition] += t.frequency;
  return cwe;
}

Prediction predict(const CodeParams& params) {
  Prediction out;
  out.cls = classify(params);
  out.we = predict_we(params, out.cls);
  out.terms = predict_cwe_terms(params, out.cls);
  for (const CweTerm& t : out.terms) out.cwe.counts[t.composition] += t.frequency;
  out.length = as_count(predict_nc(params) - (out.cls.c_zero ? 1 : 0));
  out.multiplicity = out.we.counts.count(0) ? out.we.counts.at(0) : 1;
  std::uint64_t distinct = params.q() / out.multiplicity;
  while (distinct > 1) {
    distinct /= params.p();
    ++out.dimension;
  }
  return out;
}

LemmaEvaluator::LemmaEvaluator(const CodeParams& params)
    : params_(params), holds_(condition_holds(params.weil(), params.a())), solver_(params.weil(), params.a()) {}

LemmaEvaluator::Gamma LemmaEvaluator::gamma(FqElem b) const {
  const auto g = solver_.particular(solver_.rhs_for(b));
  if (!g) return {false, {0}};
  const FieldCtx& ctx = params_.ctx();
  const FqElem v = ctx.mul(params_.a(), ctx.pow(*g, params_.weil().quadratic_exponent()));
  return {true, ctx.trace(v)};
}

std::int64_t LemmaEvaluator::B(FqElem b, FpElem rho) const {
  if (b == params_.ctx().zero() || rho.value == 0) throw std::invalid_argument("B needs b != 0 and rho != 0");
  const Powers P{params_.p()};
  const unsigned p = params_.p();
  const std::int64_t sg = params_.sign_s();
  const int m = static_cast<int>(params_.m()), d = static_cast<int>(params_.d());
  const bool c_zero = params_.c().value == 0;
  const Gamma g = gamma(b);
  auto eta_disc = [&] {
    return eta_p(p, fp_sub(p, fp_mul(p, rho, rho), fp_mul(p, fp_mul(p, {4 % p}, params_.c()), g.t)));
  };
  if (!holds_) {
    if (c_zero) return g.t.value == 0 ? -sg * (P(1) - 1) * P(m) : sg * P(m);
    if (g.t.value == 0) return sg * P(m);
    return sg * eta_disc() * P(m + 1) + sg * P(m);
  }
  if (!g.solvable) return 0;
  if (c_zero) return g.t.value == 0 ? sg * (P(1) - 1) * P(m + d) : -sg * P(m + d);
  if (g.t.value == 0) return -sg * P(m + d);
  return -sg * eta_disc() * P(m + d + 1) - sg * P(m + d);
}

std::int64_t LemmaEvaluator::N(FqElem b, FpElem rho) const {
  if (b == params_.ctx().zero()) throw std::invalid_argument("N needs b != 0");
  const Powers P{params_.p()};
  const unsigned p = params_.p();
  const std::int64_t sg = params_.sign_s();
  const int e = static_cast<int>(params_.e()), m = static_cast<int>(params_.m()), d = static_cast<int>(params_.d());
  const std::int64_t pm1 = static_cast<std::int64_t>(p) - 1;
  const FpElem c = params_.c();
  const bool c_zero = c.value == 0;
  const bool rho_zero = rho.value == 0;
  const Gamma g = gamma(b);
  const bool t_zero = g.t.value == 0;
  const FpElem ct = fp_mul(p, c, g.t);
  auto eta_disc = [&] { return eta_p(p, fp_sub(p, fp_mul(p, rho, rho), fp_mul(p, {4 % p}, ct))); };
  auto eta_minus_ct = [&] { return eta_p(p, fp_neg(p, ct)); };

  if (c_zero && !holds_) {
    if (!rho_zero) return t_zero ? P(e - 2) : P(e - 2) + sg * P(m - 1);
    return t_zero ? P(e - 2) + sg * pm1 * P(m - 1) : P(e - 2);
  }
  if (c_zero) {
    if (!g.solvable) return P(e - 2) - sg * pm1 * P(m + d - 2);
    if (!rho_zero) return t_zero ? P(e - 2) : P(e - 2) - sg * P(m + d - 1);
    return t_zero ? P(e - 2) - sg * pm1 * P(m + d - 1) : P(e - 2);
  }
  if (!holds_) {
    if (!rho_zero) return t_zero ? P(e - 2) : P(e - 2) + sg * eta_disc() * P(m - 1);
    return t_zero ? P(e - 2) - sg * P(m - 1) : P(e - 2) + sg * eta_minus_ct() * P(m - 1);
  }
  if (!g.solvable) return P(e - 2) + sg * P(m + d - 2);
  if (!rho_zero) return t_zero ? P(e - 2) : P(e - 2) - sg * eta_disc() * P(m + d - 1);
  return t_zero ? P(e - 2) + sg * P(m + d - 1) : P(e - 2) - sg * eta_minus_ct() * P(m + d - 1);
}

std::int64_t predict_B(const CodeParams& params, FqElem b, FpElem rho) { return LemmaEvaluator(params).B(b, rho); }
std::int64_t predict_N(const CodeParams& params, FqElem b, FpElem rho) { return LemmaEvaluator(params).N(b, rho); }

}  // namespace cwe
