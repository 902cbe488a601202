#include "cwe/charsums.hpp"

#include <numeric>
#include <stdexcept>

namespace cwe {

namespace {

std::int64_t signed_pow(int sign, unsigned p, unsigned exp) {
  return sign * static_cast<std::int64_t>(ipow(p, exp));
}

FqElem embed_int(const FieldCtx& ctx, std::int64_t v) { return ctx.embed(fp_reduce(ctx.p(), v)); }

}  // namespace

WeilParams WeilParams::make(const FieldCtx& ctx, unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  const unsigned e = ctx.e();
  if (e % 2 != 0) throw std::invalid_argument("e must be even");
  const unsigned d = std::gcd(k, e);
  if ((e / d) % 2 != 0) throw std::invalid_argument("outside paper hypothesis (e/d must be even)");
  const unsigned m = e / 2;
  return WeilParams{ctx, k, d, m, m / d};
}

std::uint64_t WeilParams::quadratic_exponent() const {
  const std::uint64_t order = ctx.q() - 1;
  std::uint64_t pk = 1;
  for (unsigned i = 0; i < k; ++i) pk = pk * ctx.p() % order;
  return pk + 1;
}

CycInt additive_char(const FieldCtx& ctx, FqElem b, FqElem x) {
  return CycInt::root(ctx.p(), ctx.trace(ctx.mul(b, x)).value);
}

CycInt gauss_sum_q(const FieldCtx& ctx) {
  std::vector<std::int64_t> hist(ctx.p(), 0);
  for (std::uint64_t i = 1; i < ctx.q(); ++i) {
    const FqElem x = ctx.element(i);
    hist[ctx.trace(x).value] += ctx.eta(x);
  }
  return CycInt::from_exponent_counts(ctx.p(), hist);
}

CycInt weil_sum_direct(const WeilParams& wp, FqElem alpha, FqElem beta) {
  const FieldCtx& ctx = wp.ctx;
  const std::uint64_t ex = wp.quadratic_exponent();
  std::vector<std::int64_t> hist(ctx.p(), 0);
  for (std::uint32_t idx = 0; idx < ctx.q(); ++idx) {
    const FqElem x{idx};
    const FqElem arg = ctx.add(ctx.mul(alpha, ctx.pow(x, ex)), ctx.mul(beta, x));
    ++hist[ctx.trace(arg).value];
  }
  return CycInt::from_exponent_counts(ctx.p(), hist);
}

FqElem minus_one_to_s(const WeilParams& wp) {
  return wp.s % 2 == 1 ? wp.ctx.embed({wp.ctx.p() - 1}) : wp.ctx.one();
}

bool condition_holds(const WeilParams& wp, FqElem a) {
  const std::uint64_t ex = (wp.ctx.q() - 1) / (ipow(wp.ctx.p(), wp.d) + 1);
  return wp.ctx.pow(a, ex) == minus_one_to_s(wp);
}

std::int64_t weil_sum_alpha0_closed(const WeilParams& wp, FqElem alpha) {
  if (alpha == wp.ctx.zero()) throw std::invalid_argument("alpha must be nonzero");
  const int sign_s = wp.s % 2 == 0 ? 1 : -1;
  if (!condition_holds(wp, alpha)) return signed_pow(sign_s, wp.ctx.p(), wp.m);
  return signed_pow(-sign_s, wp.ctx.p(), wp.m + wp.d);
}

AffineSolver::AffineSolver(const WeilParams& wp, FqElem a)
    : ctx_(wp.ctx), k_(wp.k), a_(a), a_pk_(wp.ctx.frobenius(a, wp.k)) {
  if (a == ctx_.zero()) throw std::invalid_argument("a must be nonzero");
  const unsigned e = ctx_.e();
  const unsigned p = ctx_.p();

  // Column j of M holds the coordinates of f_a(X^j).
  std::vector<std::vector<std::uint32_t>> m(e, std::vector<std::uint32_t>(e));
  std::uint32_t place = 1;
  for (unsigned j = 0; j < e; ++j, place *= p) {
    const auto col = ctx_.coeffs(apply(FqElem{place}));
    for (unsigned i = 0; i < e; ++i) m[i][j] = col[i];
  }
  transform_.assign(e, std::vector<std::uint32_t>(e, 0));
  for (unsigned i = 0; i < e; ++i) transform_[i][i] = 1;

  auto row_op = [&](unsigned dst, unsigned src, std::uint32_t factor) {
    // dst -= factor * src
    for (unsigned c = 0; c < e; ++c) {
      m[dst][c] = (m[dst][c] + (p - factor) * m[src][c]) % p;
      transform_[dst][c] = (transform_[dst][c] + (p - factor) * transform_[src][c]) % p;
    }
  };

  pivot_col_.assign(e, -1);
  unsigned row = 0;
  std::vector<bool> is_pivot(e, false);
  for (unsigned col = 0; col < e && row < e; ++col) {
    unsigned sel = row;
    while (sel < e && m[sel][col] == 0) ++sel;
    if (sel == e) continue;
    std::swap(m[sel], m[row]);
    std::swap(transform_[sel], transform_[row]);
    const std::uint32_t inv = fp_inv(p, {m[row][col]}).value;
    for (unsigned c = 0; c < e; ++c) {
      m[row][c] = m[row][c] * inv % p;
      transform_[row][c] = transform_[row][c] * inv % p;
    }
    for (unsigned r = 0; r < e; ++r) {
      if (r != row && m[r][col] != 0) row_op(r, row, m[r][col]);
    }
    pivot_col_[row] = static_cast<int>(col);
    is_pivot[col] = true;
    ++row;
  }

  // One kernel vector per free column: x_free = 1, x_pivot = -R[row][free].
  for (unsigned free = 0; free < e; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::int64_t> x(e, 0);
    x[free] = 1;
    for (unsigned r = 0; r < e; ++r) {
      if (pivot_col_[r] >= 0) x[static_cast<unsigned>(pivot_col_[r])] = (p - m[r][free]) % p;
    }
    kernel_.push_back(ctx_.from_coeffs(x));
  }
}

FqElem AffineSolver::apply(FqElem x) const {
  return ctx_.add(ctx_.mul(a_pk_, ctx_.frobenius(x, 2 * k_)), ctx_.mul(a_, x));
}

std::optional<FqElem> AffineSolver::particular(FqElem rhs) const {
  const unsigned e = ctx_.e();
  const unsigned p = ctx_.p();
  const auto r = ctx_.coeffs(rhs);
  std::vector<std::int64_t> x(e, 0);
  for (unsigned i = 0; i < e; ++i) {
    std::uint64_t v = 0;
    for (unsigned c = 0; c < e; ++c) v += static_cast<std::uint64_t>(transform_[i][c]) * r[c];
    v %= p;
    if (pivot_col_[i] < 0) {
      if (v != 0) return std::nullopt;
    } else {
      x[static_cast<unsigned>(pivot_col_[i])] = static_cast<std::int64_t>(v);
    }
  }
  return ctx_.from_coeffs(x);
}

std::uint64_t AffineSolver::kernel_size() const {
  return ipow(ctx_.p(), static_cast<unsigned>(kernel_.size()));
}

std::vector<FqElem> AffineSolver::solutions(FqElem rhs) const {
  const auto base = particular(rhs);
  if (!base) return {};
  std::vector<FqElem> out{*base};
  for (const FqElem& v : kernel_) {
    const std::size_t n = out.size();
    for (unsigned lambda = 1; lambda < ctx_.p(); ++lambda) {
      const FqElem step = ctx_.scale({lambda}, v);
      for (std::size_t i = 0; i < n; ++i) out.push_back(ctx_.add(out[i], step));
    }
  }
  return out;
}

FqElem AffineSolver::rhs_for(FqElem b) const { return ctx_.neg(ctx_.frobenius(b, k_)); }

std::vector<FqElem> solve_affine(const WeilParams& wp, FqElem a, FqElem b) {
  const AffineSolver solver(wp, a);
  return solver.solutions(solver.rhs_for(b));
}

CycInt weil_sum_closed_at(const WeilParams& wp, FqElem a, FqElem x0) {
  const FieldCtx& ctx = wp.ctx;
  const int sign_s = wp.s % 2 == 0 ? 1 : -1;
  const std::int64_t mag = condition_holds(wp, a) ? signed_pow(-sign_s, ctx.p(), wp.m + wp.d)
                                                  : signed_pow(sign_s, ctx.p(), wp.m);
  const FqElem arg = ctx.neg(ctx.mul(a, ctx.pow(x0, wp.quadratic_exponent())));
  return CycInt::root(ctx.p(), ctx.trace(arg).value).scaled(mag);
}

CycInt weil_sum_closed(const WeilParams& wp, FqElem a, FqElem beta) {
  if (a == wp.ctx.zero()) throw std::invalid_argument("a must be nonzero");
  const AffineSolver solver(wp, a);
  const auto x0 = solver.particular(solver.rhs_for(beta));
  if (!x0) return CycInt(wp.ctx.p());
  return weil_sum_closed_at(wp, a, *x0);
}

std::uint64_t solvable_b_count(const WeilParams& wp, FqElem a) {
  const AffineSolver solver(wp, a);
  // b -> -b^{p^k} is a bijection of F_q, so #S is the size of the image of f_a.
  return wp.ctx.q() / solver.kernel_size();
}

CycInt quad_sum_closed(const FieldCtx& ctx, FqElem a2, FqElem a1, FqElem a0) {
  if (a2 == ctx.zero()) throw std::invalid_argument("a2 must be nonzero");
  const FqElem shift = ctx.mul(ctx.mul(a1, a1), ctx.inv(ctx.mul(embed_int(ctx, 4), a2)));
  const FpElem ex = ctx.trace(ctx.sub(a0, shift));
  return gauss_sum_q(ctx).times_root(ex.value).scaled(ctx.eta(a2));
}

std::int64_t eta_sum_closed(const FieldCtx& ctx, FqElem a2, FqElem a1, FqElem a0) {
  if (a2 == ctx.zero()) throw std::invalid_argument("a2 must be nonzero");
  const FqElem disc = ctx.sub(ctx.mul(a1, a1), ctx.mul(embed_int(ctx, 4), ctx.mul(a0, a2)));
  const std::int64_t eta = ctx.eta(a2);
  if (disc != ctx.zero()) return -eta;
  return static_cast<std::int64_t>(ctx.q() - 1) * eta;
}

}  // namespace cwe
