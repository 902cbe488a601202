#include "cwe/codes.hpp"

#include <array>
#include <sstream>

namespace cwe {

CodeParams CodeParams::make(const FieldCtx& ctx, unsigned k, FqElem a, FpElem c) {
  WeilParams w = WeilParams::make(ctx, k);
  if (a == ctx.zero() || !ctx.contains(a)) throw std::invalid_argument("a must be a nonzero element of F_q");
  if (c.value >= ctx.p()) throw std::invalid_argument("c must lie in F_p");
  return CodeParams(std::move(w), a, c);
}

std::uint64_t WeightEnumerator::total() const {
  std::uint64_t t = 0;
  for (const auto& [w, n] : counts) t += n;
  return t;
}

std::uint64_t WeightEnumerator::min_nonzero() const {
  for (const auto& [w, n] : counts) {
    if (w != 0) return w;
  }
  return 0;
}

std::uint64_t WeightEnumerator::max_weight() const { return counts.empty() ? 0 : counts.rbegin()->first; }

std::string WeightEnumerator::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, n] : counts) {
    if (!first) os << " + ";
    first = false;
    if (w == 0) {
      os << n;
    } else {
      if (n != 1) os << n;
      os << "z^" << w;
    }
  }
  return os.str();
}

std::uint64_t CompleteWeightEnumerator::total() const {
  std::uint64_t t = 0;
  for (const auto& [comp, n] : counts) t += n;
  return t;
}

WeightEnumerator CompleteWeightEnumerator::project() const {
  WeightEnumerator we;
  for (const auto& [comp, n] : counts) {
    std::uint64_t len = 0;
    for (auto v : comp) len += v;
    we.counts[len - comp[0]] += n;
  }
  return we;
}

std::vector<std::uint8_t> quadratic_trace_table(const CodeParams& params) {
  const FieldCtx& ctx = params.ctx();
  const std::uint64_t ex = params.weil().quadratic_exponent();
  std::vector<std::uint8_t> out(ctx.q());
  for (std::uint32_t idx = 0; idx < ctx.q(); ++idx) {
    out[idx] = static_cast<std::uint8_t>(ctx.trace(ctx.mul(params.a(), ctx.pow(FqElem{idx}, ex))).value);
  }
  return out;
}

DefiningSet defining_set(const CodeParams& params) {
  const FieldCtx& ctx = params.ctx();
  const std::uint64_t ex = params.weil().quadratic_exponent();
  DefiningSet D{{}, params.c()};
  for (std::uint64_t i = 1; i < ctx.q(); ++i) {
    const FqElem x = ctx.element(i);
    if (ctx.trace(ctx.mul(params.a(), ctx.pow(x, ex))) == params.c()) D.elements.push_back(x);
  }
  if (D.elements.empty()) throw EmptyDefiningSet();
  return D;
}

Composition symbol_counts(const CodeParams& params, const DefiningSet& D, FqElem b) {
  const FieldCtx& ctx = params.ctx();
  Composition out(params.p(), 0);
  for (const FqElem& x : D.elements) ++out[ctx.trace(ctx.mul(b, x)).value];
  return out;
}

std::vector<std::uint8_t> codeword(const CodeParams& params, const DefiningSet& D, FqElem b) {
  const FieldCtx& ctx = params.ctx();
  std::vector<std::uint8_t> out;
  out.reserve(D.size());
  for (const FqElem& x : D.elements) out.push_back(static_cast<std::uint8_t>(ctx.trace(ctx.mul(b, x)).value));
  return out;
}

std::uint64_t count_nc(const CodeParams& params) {
  std::uint64_t n = 0;
  for (auto t : quadratic_trace_table(params)) n += (t == params.c().value);
  return n;
}

Composition full_fiber_counts(const CodeParams& params, FqElem b) {
  const FieldCtx& ctx = params.ctx();
  const auto quad = quadratic_trace_table(params);
  Composition out(params.p(), 0);
  for (std::uint32_t idx = 0; idx < ctx.q(); ++idx) {
    if (quad[idx] == params.c().value) ++out[ctx.trace(ctx.mul(b, FqElem{idx})).value];
  }
  return out;
}

CodeSummary build_code(const CodeParams& params) {
  const FieldCtx& ctx = params.ctx();
  const unsigned p = params.p();
  const unsigned e = params.e();
  const DefiningSet D = defining_set(params);
  const std::size_t n = D.size();

  // rows[i] is the codeword of b = X^i; c_b is linear in the coordinates of b.
  std::vector<std::vector<std::uint8_t>> rows(e);
  std::vector<std::uint32_t> place(e);
  for (unsigned i = 0, v = 1; i < e; ++i, v *= p) {
    place[i] = v;
    rows[i] = codeword(params, D, FqElem{v});
  }

  std::vector<std::uint32_t> comps(static_cast<std::size_t>(ctx.q()) * p, 0);
  comps[0] = static_cast<std::uint32_t>(n);

  std::vector<std::uint32_t> inv(p, 0);
  for (unsigned l = 1; l < p; ++l) inv[l] = fp_inv(p, {l}).value;

  // Record c_{lambda b} for every lambda in F_p^* from the histogram of c_b:
  // N_rho(lambda b) = N_{rho / lambda}(b).
  auto record = [&](std::uint32_t b_idx, const std::array<std::uint64_t, 256>& hist) {
    for (unsigned l = 1; l < p; ++l) {
      const std::uint32_t lb = ctx.scale({l}, FqElem{b_idx}).index;
      std::uint32_t* out = &comps[std::size_t{lb} * p];
      for (unsigned rho = 0; rho < p; ++rho) out[rho] = static_cast<std::uint32_t>(hist[fp_mul(p, {rho}, {inv[l]}).value]);
    }
  };

  std::vector<std::uint8_t> word(n);
  std::array<std::uint64_t, 256> hist{};
  auto histogram = [&]() {
    hist.fill(0);
    for (std::uint8_t v : word) ++hist[v];
  };

  // One representative per line {lambda b}: the leading coordinate j is 1 and
  // coordinates below j run through a modular p-ary Gray code, where each step
  // adds 1 to a single coordinate, i.e. adds one basis row to the codeword.
  for (unsigned j = 0; j < e; ++j) {
    word = rows[j];
    std::uint32_t b_idx = place[j];
    std::vector<std::uint32_t> counter(j, 0);
    std::vector<std::uint32_t> gray(j, 0);
    const std::uint64_t steps = ipow(p, j);
    for (std::uint64_t step = 0;; ++step) {
      histogram();
      record(b_idx, hist);
      if (step + 1 == steps) break;
      unsigned r = 0;
      while (counter[r] == p - 1) counter[r++] = 0;
      ++counter[r];
      const std::uint8_t* row = rows[r].data();
      for (std::size_t x = 0; x < n; ++x) {
        const unsigned v = word[x] + row[x];
        word[x] = static_cast<std::uint8_t>(v >= p ? v - p : v);
      }
      gray[r] = (gray[r] + 1) % p;
      b_idx = gray[r] == 0 ? b_idx - (p - 1) * place[r] : b_idx + place[r];
    }
  }

  CodeSummary out{params, n, 0, 0, 1, {}, {}, std::move(comps)};
  for (std::uint32_t b = 0; b < ctx.q(); ++b) {
    const auto c = out.composition(FqElem{b});
    Composition comp(c.begin(), c.end());
    out.we.counts[n - comp[0]] += 1;
    out.cwe.counts[std::move(comp)] += 1;
  }
  // c_b is linear in b, so each distinct codeword is hit by as many b as the zero word.
  out.multiplicity = out.we.counts[0];
  std::uint64_t distinct = ctx.q() / out.multiplicity;
  while (distinct > 1) {
    distinct /= p;
    ++out.dimension;
  }
  out.min_distance = out.we.min_nonzero();
  return out;
}

}  // namespace cwe
