#include <doctest.h>

#include <algorithm>

#include "cwe/charsums.hpp"

using namespace cwe;

namespace {

CycInt direct_quad_sum(const FieldCtx& ctx, FqElem a2, FqElem a1, FqElem a0) {
  CycInt s(ctx.p());
  for (std::uint32_t i = 0; i < ctx.q(); ++i) {
    const FqElem x{i};
    const FqElem v = ctx.add(ctx.add(ctx.mul(a2, ctx.mul(x, x)), ctx.mul(a1, x)), a0);
    s += CycInt::root(ctx.p(), ctx.trace(v).value);
  }
  return s;
}

std::vector<FqElem> brute_solutions(const WeilParams& wp, FqElem a, FqElem b) {
  const FieldCtx& ctx = wp.ctx;
  const FqElem rhs = ctx.neg(ctx.frobenius(b, wp.k));
  const FqElem a_pk = ctx.frobenius(a, wp.k);
  std::vector<FqElem> out;
  for (std::uint32_t i = 0; i < ctx.q(); ++i) {
    const FqElem x{i};
    if (ctx.add(ctx.mul(a_pk, ctx.frobenius(x, 2 * wp.k)), ctx.mul(a, x)) == rhs) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("WeilParams hypotheses") {
  const FieldCtx f36 = build_field(3, 6);
  const WeilParams wp = WeilParams::make(f36, 1);
  CHECK(wp.d == 1);
  CHECK(wp.m == 3);
  CHECK(wp.s == 3);
  CHECK_THROWS_WITH_AS(WeilParams::make(f36, 2), "outside paper hypothesis (e/d must be even)", std::invalid_argument);
  CHECK_THROWS_AS(WeilParams::make(build_field(3, 3), 1), std::invalid_argument);
  const WeilParams w3 = WeilParams::make(f36, 3);
  CHECK(w3.d == 3);
  CHECK(w3.s == 1);
}

TEST_CASE("additive characters") {
  const FieldCtx ctx = build_field(3, 2);
  CHECK(additive_char(ctx, ctx.one(), ctx.zero()) == CycInt::integer(3, 1));
  CHECK(additive_char(ctx, ctx.zero(), ctx.theta()) == CycInt::integer(3, 1));
  for (std::uint32_t i = 0; i < ctx.q(); ++i) {
    if (ctx.trace(FqElem{i}).value == 2) CHECK(additive_char(ctx, ctx.one(), FqElem{i}) == CycInt::root(3, 2));
  }
}

TEST_CASE("Gauss sums square to eta(-1) q") {
  for (auto [p, e] : {std::pair{3u, 1u}, {3u, 2u}, {5u, 1u}, {5u, 2u}, {7u, 1u}, {3u, 4u}}) {
    const FieldCtx ctx = build_field(p, e);
    const CycInt g = gauss_sum_q(ctx);
    const std::int64_t q = static_cast<std::int64_t>(ctx.q());
    CAPTURE(p);
    CAPTURE(e);
    CHECK(g * g == CycInt::integer(p, ctx.eta(ctx.neg(ctx.one())) * q));
  }
  const CycInt g3 = gauss_sum_q(build_field(3, 1));
  CHECK(g3 * g3 + CycInt::integer(3, 3) == CycInt(3));
  const CycInt g5 = gauss_sum_q(build_field(5, 1));
  CHECK(g5 * g5 == CycInt::integer(5, 5));
}

TEST_CASE("Weil sum trivial values") {
  const FieldCtx ctx = build_field(3, 4);
  const WeilParams wp = WeilParams::make(ctx, 1);
  CHECK(weil_sum_direct(wp, ctx.zero(), ctx.zero()) == CycInt::integer(3, 81));
  for (std::uint32_t i = 1; i < ctx.q(); i += 4) CHECK(weil_sum_direct(wp, ctx.zero(), FqElem{i}).is_zero());
  CHECK_THROWS_AS(weil_sum_alpha0_closed(wp, ctx.zero()), std::invalid_argument);
}

TEST_CASE("S(alpha, 0) examples") {
  const FieldCtx f36 = build_field(3, 6);
  const WeilParams w36 = WeilParams::make(f36, 1);
  CHECK(condition_holds(w36, f36.theta_pow(2)));
  CHECK(f36.pow(f36.theta(), 364) == f36.neg(f36.one()));
  CHECK(weil_sum_alpha0_closed(w36, f36.theta_pow(2)) == 81);
  CHECK(weil_sum_direct(w36, f36.theta_pow(2), f36.zero()) == CycInt::integer(3, 81));
  for (std::uint64_t t = 0; t < 8; ++t) {
    const FqElem a = f36.theta_pow(t);
    if (!condition_holds(w36, a)) {
      CHECK(weil_sum_alpha0_closed(w36, a) == -27);
      CHECK(weil_sum_direct(w36, a, f36.zero()) == CycInt::integer(3, -27));
    }
  }
  const FieldCtx f54 = build_field(5, 4);
  const WeilParams w54 = WeilParams::make(f54, 1);
  CHECK_FALSE(condition_holds(w54, f54.theta_pow(3)));
  CHECK(weil_sum_alpha0_closed(w54, f54.theta_pow(3)) == 25);
  // Elements of F_p^* satisfy y^{(q-1)/(p^d+1)} = 1, so the branch depends only on (-1)^s.
  for (unsigned l = 1; l < 5; ++l) CHECK(condition_holds(w54, f54.embed({l})));
  for (unsigned l = 1; l < 3; ++l) CHECK_FALSE(condition_holds(w36, f36.embed({l})));
}

TEST_CASE("S(alpha, 0): closed form equals direct sum, exhaustively") {
  for (auto [e, k] : {std::pair{2u, 1u}, {4u, 1u}, {4u, 2u}, {4u, 3u}, {6u, 1u}, {6u, 3u}}) {
    const FieldCtx ctx = build_field(3, e);
    const WeilParams wp = WeilParams::make(ctx, k);
    const std::uint64_t step = e == 6 ? 13 : 1;
    for (std::uint64_t i = 1; i < ctx.q(); i += step) {
      const FqElem a{static_cast<std::uint32_t>(i)};
      CHECK(weil_sum_direct(wp, a, ctx.zero()).as_rational_integer() == weil_sum_alpha0_closed(wp, a));
    }
  }
}

TEST_CASE("S(alpha, beta): closed form equals direct sum at p=3, e=4, k=1") {
  const FieldCtx ctx = build_field(3, 4);
  const WeilParams wp = WeilParams::make(ctx, 1);
  for (std::uint32_t i = 1; i < ctx.q(); ++i) {
    for (std::uint32_t j = 1; j < ctx.q(); ++j) {
      REQUIRE(weil_sum_closed(wp, FqElem{i}, FqElem{j}) == weil_sum_direct(wp, FqElem{i}, FqElem{j}));
    }
  }
}

TEST_CASE("S(alpha, beta) at Example 1 parameters") {
  const FieldCtx ctx = build_field(3, 6);
  const WeilParams wp = WeilParams::make(ctx, 1);
  const FqElem a = ctx.theta_pow(2);
  for (std::uint32_t j = 1; j < ctx.q(); j += 17) CHECK(weil_sum_closed(wp, a, FqElem{j}) == weil_sum_direct(wp, a, FqElem{j}));
}

TEST_CASE("affine solutions: sizes, agreement with brute force, and independence of x0") {
  for (unsigned k : {1u, 2u, 3u}) {
    const FieldCtx ctx = build_field(3, 4);
    const WeilParams wp = WeilParams::make(ctx, k);
    const std::uint64_t kernel = ipow(3, 2 * wp.d);
    for (std::uint32_t i = 1; i < ctx.q(); ++i) {
      const FqElem a{i};
      const bool holds = condition_holds(wp, a);
      std::uint64_t total = 0, solvable = 0;
      for (std::uint32_t j = 0; j < ctx.q(); ++j) {
        const FqElem b{j};
        auto sols = solve_affine(wp, a, b);
        auto brute = brute_solutions(wp, a, b);
        std::sort(sols.begin(), sols.end());
        REQUIRE(sols == brute);
        const std::uint64_t n = sols.size();
        CHECK((n == 0 || n == 1 || n == kernel));
        CHECK((holds ? (n == 0 || n == kernel) : n == 1));
        if (j == 0) CHECK(std::find(sols.begin(), sols.end(), ctx.zero()) != sols.end());
        total += n;
        solvable += n != 0;
        if (j != 0 && n > 1) {
          const CycInt first = weil_sum_closed_at(wp, a, sols.front());
          for (const FqElem& x0 : sols) REQUIRE(weil_sum_closed_at(wp, a, x0) == first);
        }
      }
      CHECK(total == ctx.q());
      CHECK(solvable == (holds ? ipow(3, 4 - 2 * wp.d) : ctx.q()));
      CHECK(solvable_b_count(wp, a) == solvable);
    }
  }
}

TEST_CASE("solvable_b_count examples") {
  const FieldCtx f36 = build_field(3, 6);
  CHECK(solvable_b_count(WeilParams::make(f36, 1), f36.theta_pow(2)) == 81);
  const FieldCtx f54 = build_field(5, 4);
  CHECK(solvable_b_count(WeilParams::make(f54, 1), f54.theta_pow(3)) == 625);
  const FieldCtx f34 = build_field(3, 4);
  const WeilParams w34 = WeilParams::make(f34, 1);
  for (std::uint64_t t = 0; t < 80; ++t) {
    const FqElem a = f34.theta_pow(t);
    if (f34.pow(a, 20) == f34.one()) CHECK(solvable_b_count(w34, a) == 9);
  }
}

TEST_CASE("quadratic sums: closed form equals direct sum at p=3, e=2") {
  const FieldCtx ctx = build_field(3, 2);
  CHECK(quad_sum_closed(ctx, ctx.one(), ctx.zero(), ctx.zero()) == gauss_sum_q(ctx));
  for (std::uint32_t a2 = 1; a2 < ctx.q(); ++a2) {
    for (std::uint32_t a1 = 0; a1 < ctx.q(); ++a1) {
      for (std::uint32_t a0 = 0; a0 < ctx.q(); ++a0) {
        CHECK(quad_sum_closed(ctx, FqElem{a2}, FqElem{a1}, FqElem{a0}) ==
              direct_quad_sum(ctx, FqElem{a2}, FqElem{a1}, FqElem{a0}));
      }
    }
  }
  const FqElem a2 = ctx.theta(), a1 = ctx.one(), d = ctx.theta_pow(3);
  CHECK(quad_sum_closed(ctx, a2, a1, ctx.zero()).times_root(ctx.trace(d).value) == quad_sum_closed(ctx, a2, a1, d));
  CHECK_THROWS_AS(quad_sum_closed(ctx, ctx.zero(), ctx.one(), ctx.zero()), std::invalid_argument);
}

TEST_CASE("eta sums: closed form equals direct sum") {
  const FieldCtx f32 = build_field(3, 2);
  CHECK(eta_sum_closed(f32, f32.one(), f32.zero(), f32.zero()) == 8);
  const FieldCtx f5 = build_field(5, 2);
  CHECK(eta_sum_closed(f5, f5.one(), f5.zero(), f5.neg(f5.one())) == -1);
  for (const FieldCtx* ctx : {&f32, &f5}) {
    for (std::uint32_t a2 = 1; a2 < ctx->q(); a2 += (ctx->q() > 9 ? 5 : 1)) {
      for (std::uint32_t a1 = 0; a1 < ctx->q(); a1 += (ctx->q() > 9 ? 3 : 1)) {
        for (std::uint32_t a0 = 0; a0 < ctx->q(); ++a0) {
          std::int64_t s = 0;
          for (std::uint32_t x = 0; x < ctx->q(); ++x) {
            const FqElem X{x};
            s += ctx->eta(ctx->add(ctx->add(ctx->mul(FqElem{a2}, ctx->mul(X, X)), ctx->mul(FqElem{a1}, X)), FqElem{a0}));
          }
          CHECK(eta_sum_closed(*ctx, FqElem{a2}, FqElem{a1}, FqElem{a0}) == s);
        }
      }
    }
  }
}
