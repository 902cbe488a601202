#include <doctest.h>

#include <tuple>

#include "cwe/closedform.hpp"
#include "cwe/verify.hpp"

using namespace cwe;

namespace {

CodeParams point(unsigned p, unsigned e, unsigned k, std::uint64_t t, unsigned c) {
  const FieldCtx ctx = build_field(p, e);
  return CodeParams::make(ctx, k, ctx.theta_pow(t), {c});
}

std::map<std::uint64_t, std::uint64_t> we_map(const CodeParams& cp) { return predict_we(cp, classify(cp)).counts; }

}  // namespace

TEST_CASE("classify examples") {
  const CaseClass ex1 = classify(point(3, 6, 1, 2, 0));
  CHECK(ex1.number() == 2);
  CHECK(ex1.degenerate == Degenerate::none);
  CHECK(ex1.source() == "Theorem 2");
  CHECK(classify(point(5, 4, 1, 3, 0)).number() == 1);
  CHECK(classify(point(5, 4, 1, 3, 1)).number() == 3);
  CHECK(classify(point(3, 6, 1, 2, 1)).number() == 4);
  const CaseClass cor1 = classify(point(3, 4, 1, 0, 0));
  CHECK(cor1.condition_holds);
  CHECK(cor1.degenerate == Degenerate::m_eq_d_plus_1);
  CHECK(cor1.source() == "Corollary 1");
  const FieldCtx f34 = build_field(3, 4);
  const WeilParams w2 = WeilParams::make(f34, 2);
  for (std::uint64_t t = 0; t < 80; ++t) {
    if (condition_holds(w2, f34.theta_pow(t))) {
      CHECK(classify(CodeParams::make(f34, 2, f34.theta_pow(t), {0})).source() == "Corollary 2");
      break;
    }
  }
}

TEST_CASE("predict_we examples") {
  CHECK(we_map(point(3, 6, 1, 2, 0)) == std::map<std::uint64_t, std::uint64_t>{{0, 1}, {162, 32}, {198, 648}, {216, 48}});
  CHECK(we_map(point(5, 4, 1, 3, 0)) == std::map<std::uint64_t, std::uint64_t>{{0, 1}, {100, 144}, {120, 480}});
  CHECK(we_map(point(3, 6, 1, 2, 1)) == std::map<std::uint64_t, std::uint64_t>{{0, 1}, {108, 24}, {144, 648}, {162, 56}});
  CHECK(we_map(point(5, 4, 1, 3, 1)) == std::map<std::uint64_t, std::uint64_t>{{0, 1}, {90, 240}, {100, 384}});
  CHECK(we_map(point(3, 4, 1, 0, 0)) == std::map<std::uint64_t, std::uint64_t>{{0, 9}, {6, 72}});
}

TEST_CASE("predict_we rejects a mismatched case") {
  const CodeParams cp = point(3, 4, 1, 0, 0);
  CaseClass wrong = classify(cp);
  wrong.degenerate = Degenerate::none;
  CHECK_THROWS_WITH_AS(predict_we(cp, wrong), "parameter/case mismatch", std::invalid_argument);
  CaseClass flipped = classify(point(5, 4, 1, 3, 0));
  flipped.condition_holds = true;
  CHECK_THROWS_AS(predict_cwe(point(5, 4, 1, 3, 0), flipped), std::invalid_argument);
}

TEST_CASE("predict_cwe examples") {
  CHECK(predict_cwe(point(3, 6, 1, 2, 0), classify(point(3, 6, 1, 2, 0))).counts ==
        std::map<Composition, std::uint64_t>{{{296, 0, 0}, 1}, {{134, 81, 81}, 32}, {{98, 99, 99}, 648}, {{80, 108, 108}, 48}});
  CHECK(predict_cwe(point(3, 6, 1, 2, 1), classify(point(3, 6, 1, 2, 1))).counts ==
        std::map<Composition, std::uint64_t>{{{216, 0, 0}, 1}, {{108, 54, 54}, 24}, {{72, 72, 72}, 648}, {{54, 81, 81}, 56}});
  const CodeParams ex2 = point(5, 4, 1, 3, 1);
  const auto cwe = predict_cwe(ex2, classify(ex2)).counts;
  CHECK(cwe.size() == 6);
  CHECK(cwe.at({120, 0, 0, 0, 0}) == 1);
  CHECK(cwe.at({20, 25, 25, 25, 25}) == 144);
  CHECK(cwe.at({30, 25, 20, 20, 25}) == 120);
  CHECK(cwe.at({30, 20, 25, 25, 20}) == 120);
  CHECK(cwe.at({20, 30, 20, 20, 30}) == 120);
  CHECK(cwe.at({20, 20, 30, 30, 20}) == 120);
  const CodeParams ex2c0 = point(5, 4, 1, 3, 0);
  CHECK(predict_cwe(ex2c0, classify(ex2c0)) == build_code(ex2c0).cwe);
}

TEST_CASE("m = d with c != 0 has no closed form") {
  const FieldCtx ctx = build_field(3, 2);
  const WeilParams wp = WeilParams::make(ctx, 1);
  for (std::uint64_t t = 0; t < 8; ++t) {
    if (!condition_holds(wp, ctx.theta_pow(t))) continue;
    const CodeParams cp = CodeParams::make(ctx, 1, ctx.theta_pow(t), {1});
    CHECK(classify(cp).source() == "none");
    CHECK_THROWS_AS(predict(cp), NoClosedForm);
    CHECK(predict_nc(cp) == 0);
  }
}

TEST_CASE("Theorem 3 weight arithmetic at p=5, e=4, s=2") {
  const std::int64_t p = 5, sign = 1;
  // w = (p-1)p^{e-2} - 2(-1)^s p^{m-1}, frequency (p-1)/2 (p^{e-1} - (-1)^s p^{m-1})
  CHECK((p - 1) * 25 - 2 * sign * 5 == 90);
  CHECK((p - 1) / 2 * (125 - sign * 5) == 240);
}

TEST_CASE("predicted enumerators are internally consistent") {
  for (unsigned p : {3u, 5u, 7u}) {
    for (auto [e, k] : {std::pair{4u, 1u}, {4u, 2u}, {6u, 1u}, {6u, 3u}}) {
      const FieldCtx ctx = build_field(p, e);
      for (std::uint64_t t : {0ull, 1ull}) {
        for (unsigned c : {0u, 1u, 2u}) {
          const CodeParams cp = CodeParams::make(ctx, k, ctx.theta_pow(t), {c});
          Prediction pr;
          try {
            pr = predict(cp);
          } catch (const NoClosedForm&) {
            continue;
          }
          CAPTURE(p);
          CAPTURE(e);
          CAPTURE(k);
          CAPTURE(t);
          CAPTURE(c);
          CHECK(pr.we.total() == cp.q());
          CHECK(pr.cwe.project() == pr.we);
          if (pr.multiplicity == 1) {
            std::uint64_t a = 0, w = 0;
            for (const auto& [wt, n] : pr.we.counts) {
              if (wt == 0) continue;
              a += n;
              w += wt * n;
            }
            CHECK(a == cp.q() - 1);
            CHECK(w == cp.q() / p * (p - 1) * pr.length);
          }
          // Compositions are symmetric under rho -> -rho.
          for (const auto& [comp, n] : pr.cwe.counts) {
            for (unsigned r = 1; r < p; ++r) CHECK(comp[r] == comp[p - r]);
          }
        }
      }
    }
  }
}

TEST_CASE("lemma tables equal direct oracles at q = 3^4, exhaustively") {
  const FieldCtx ctx = build_field(3, 4);
  for (unsigned k : {1u, 2u}) {
    for (std::uint32_t ai = 1; ai < ctx.q(); ai += (k == 1 ? 1 : 5)) {
      for (unsigned c = 0; c < 3; ++c) {
        const CodeParams cp = CodeParams::make(ctx, k, FqElem{ai}, {c});
        const LemmaEvaluator lemmas(cp);
        const auto quad = quadratic_trace_table(cp);
        const std::int64_t nc = predict_nc(cp);
        REQUIRE(nc == static_cast<std::int64_t>(count_nc(cp)));
        for (std::uint32_t bi = 1; bi < ctx.q(); ++bi) {
          const FqElem b{bi};
          const Composition full = full_fiber_counts(cp, b);
          for (unsigned rho = 0; rho < 3; ++rho) {
            REQUIRE(lemmas.N(b, {rho}) == static_cast<std::int64_t>(full[rho]));
            if (rho == 0) continue;
            const std::int64_t B = direct_B(cp, quad, b, {rho});
            REQUIRE(lemmas.B(b, {rho}) == B);
            // N_rho = n_c / p + B / p^2.
            REQUIRE(9 * static_cast<std::int64_t>(full[rho]) == 3 * nc + B);
          }
        }
      }
    }
  }
}

TEST_CASE("predict_B and predict_N branch examples") {
  // Condition holds, unsolvable b: B = 0.
  const CodeParams holds = point(3, 6, 1, 2, 0);
  const WeilParams& wp = holds.weil();
  for (std::uint32_t i = 1; i < holds.q(); ++i) {
    if (solve_affine(wp, holds.a(), FqElem{i}).empty()) {
      CHECK(predict_B(holds, FqElem{i}, {1}) == 0);
      // N_rho = p^{e-2} - (-1)^s (p-1) p^{m+d-2} = 81 + 2*9.
      CHECK(predict_N(holds, FqElem{i}, {1}) == 99);
      break;
    }
  }
  // Condition fails, c = 0, Tr(a gamma^{p^k+1}) = 0: B = -(-1)^s (p-1) p^m and N_rho = p^{e-2}.
  const CodeParams fails = point(5, 4, 1, 3, 0);
  const LemmaEvaluator ev(fails);
  bool found = false;
  for (std::uint32_t i = 1; i < fails.q() && !found; ++i) {
    const auto g = ev.gamma(FqElem{i});
    if (g.solvable && g.t.value == 0) {
      CHECK(predict_B(fails, FqElem{i}, {2}) == -(4 * 25));
      CHECK(predict_N(fails, FqElem{i}, {2}) == 25);
      found = true;
    }
  }
  CHECK(found);
}
