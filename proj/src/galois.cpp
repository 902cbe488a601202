#include "cwe/galois.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace cwe {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw std::overflow_error("ipow overflow");
    }
    r *= base;
  }
  return r;
}

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t n, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (n > 0) {
    if (n & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * b % m);
    b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % m);
    n >>= 1;
  }
  return r;
}

void check_odd_prime(unsigned p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("p must be an odd prime");
  }
}

// Dense polynomial arithmetic modulo a monic f of degree e, used only while
// searching for the modulus.
using Poly = std::vector<std::uint32_t>;

Poly mulmod(const Poly& x, const Poly& y, const Poly& f, unsigned p) {
  const std::size_t e = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p;
    }
  }
  for (std::size_t deg = prod.size(); deg-- > e;) {
    const std::uint64_t t = prod[deg];
    if (t == 0) continue;
    prod[deg] = 0;
    for (std::size_t i = 0; i < e; ++i) {
      prod[deg - e + i] = (prod[deg - e + i] + (p - t) * f[i]) % p;
    }
  }
  return Poly(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(e));
}

Poly x_mod(const Poly& f, unsigned p) {
  const std::size_t e = f.size() - 1;
  Poly r(e, 0);
  if (e > 1) {
    r[1] = 1;
  } else {
    r[0] = (p - f[0]) % p;
  }
  return r;
}

Poly powmod_poly(Poly base, std::uint64_t n, const Poly& f, unsigned p) {
  Poly r(f.size() - 1, 0);
  r[0] = 1;
  while (n > 0) {
    if (n & 1) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    n >>= 1;
  }
  return r;
}

bool is_one(const Poly& x) {
  if (x[0] != 1) return false;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] != 0) return false;
  }
  return true;
}

// X generates (F_p[X]/f)^* with q - 1 elements only if f is irreducible, so
// this test covers irreducibility as well.
bool x_is_primitive(const Poly& f, unsigned p, std::uint64_t q, const std::vector<std::uint64_t>& primes) {
  if (f[0] == 0) return false;
  const Poly x = x_mod(f, p);
  if (!is_one(powmod_poly(x, q - 1, f, p))) return false;
  for (std::uint64_t r : primes) {
    if (is_one(powmod_poly(x, (q - 1) / r, f, p))) return false;
  }
  return true;
}

}  // namespace

FpElem fp_reduce(unsigned p, std::int64_t v) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return {static_cast<std::uint32_t>(r)};
}
FpElem fp_add(unsigned p, FpElem x, FpElem y) { return {(x.value + y.value) % p}; }
FpElem fp_sub(unsigned p, FpElem x, FpElem y) { return {(x.value + p - y.value) % p}; }
FpElem fp_neg(unsigned p, FpElem x) { return {(p - x.value) % p}; }
FpElem fp_mul(unsigned p, FpElem x, FpElem y) {
  return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(x.value) * y.value % p)};
}
FpElem fp_inv(unsigned p, FpElem x) {
  if (x.value % p == 0) throw std::domain_error("inverse of zero in F_p");
  return {static_cast<std::uint32_t>(powmod(x.value, p - 2, p))};
}

int eta_p(unsigned p, FpElem x) {
  const std::uint32_t v = x.value % p;
  if (v == 0) return 0;
  return powmod(v, (p - 1) / 2, p) == 1 ? 1 : -1;
}

FpElem prime_generator(unsigned p) {
  check_odd_prime(p);
  const auto primes = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t r : primes) {
      if (powmod(g, (p - 1) / r, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return {g};
  }
  throw std::logic_error("no primitive root found");
}

FieldCtx FieldCtx::build(unsigned p, unsigned e) {
  check_odd_prime(p);
  if (p > 251) throw std::invalid_argument("p must be below 256");
  if (e == 0) throw std::invalid_argument("e must be positive");
  const std::uint64_t q64 = ipow(p, e);
  if (q64 > (std::uint64_t{1} << 31)) throw std::invalid_argument("field too large");

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = static_cast<std::uint32_t>(q64);
  const std::uint32_t q = t->q;
  for (unsigned i = 0, v = 1; i < e; ++i, v *= p) t->place.push_back(v);

  // Candidates in lexicographic order of (c_0, ..., c_{e-1}): the tuple with
  // counter value n has c_0 as its most significant base-p digit.
  const auto primes = prime_factors(q - 1);
  Poly f(e + 1, 0);
  f[e] = 1;
  bool found = false;
  for (std::uint64_t n = 0; n < q64 && !found; ++n) {
    std::uint64_t r = n;
    for (unsigned i = e; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(r % p);
      r /= p;
    }
    found = x_is_primitive(f, p, q64, primes);
  }
  if (!found) throw std::logic_error("no primitive polynomial found");
  t->modulus = f;

  // Powers of theta by repeated multiplication by X.
  t->exp.resize(q - 1);
  t->log.assign(q, 0);
  std::vector<std::uint32_t> cur(e, 0);
  cur[0] = 1;
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    std::uint32_t idx = 0;
    for (unsigned j = 0; j < e; ++j) idx += cur[j] * t->place[j];
    t->exp[i] = idx;
    t->log[idx] = i;
    const std::uint32_t top = cur[e - 1];
    for (unsigned j = e; j-- > 0;) {
      const std::uint32_t lower = j > 0 ? cur[j - 1] : 0;
      cur[j] = static_cast<std::uint32_t>((lower + static_cast<std::uint64_t>(p - top) * f[j]) % p);
    }
  }

  FieldCtx ctx(t);
  // Basis traces by summing Frobenius conjugates, then extend linearly.
  t->basis_trace.resize(e);
  for (unsigned i = 0; i < e; ++i) {
    const FqElem xi{t->place[i]};
    FqElem sum = ctx.zero();
    FqElem conj = xi;
    for (unsigned j = 0; j < e; ++j) {
      sum = ctx.add(sum, conj);
      conj = ctx.frobenius(conj);
    }
    if (sum.index >= p) throw std::logic_error("trace left the prime field");
    t->basis_trace[i] = static_cast<std::uint8_t>(sum.index);
  }
  t->trace.resize(q);
  for (std::uint32_t idx = 0; idx < q; ++idx) {
    std::uint32_t r = idx;
    std::uint32_t acc = 0;
    for (unsigned j = 0; j < e; ++j) {
      acc += (r % p) * t->basis_trace[j];
      r /= p;
    }
    t->trace[idx] = static_cast<std::uint8_t>(acc % p);
  }
  return ctx;
}

std::string FieldCtx::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = e() + 1; i-- > 0;) {
    const std::uint32_t c = t_->modulus[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << 'X';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

FqElem FieldCtx::theta() const { return {t_->exp[1]}; }

FqElem FieldCtx::from_coeffs(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() != e()) throw std::invalid_argument("coefficient vector must have length e");
  std::uint32_t idx = 0;
  for (unsigned i = 0; i < e(); ++i) idx += fp_reduce(p(), coeffs[i]).value * t_->place[i];
  return {idx};
}

std::vector<std::uint32_t> FieldCtx::coeffs(FqElem x) const {
  std::vector<std::uint32_t> out(e());
  std::uint32_t r = x.index;
  for (unsigned i = 0; i < e(); ++i) {
    out[i] = r % p();
    r /= p();
  }
  return out;
}

FqElem FieldCtx::add(FqElem x, FqElem y) const {
  const unsigned pp = p();
  std::uint32_t a = x.index, b = y.index, idx = 0;
  for (unsigned i = 0; i < e(); ++i) {
    idx += ((a % pp + b % pp) % pp) * t_->place[i];
    a /= pp;
    b /= pp;
  }
  return {idx};
}

FqElem FieldCtx::scale(FpElem lambda, FqElem x) const {
  const unsigned pp = p();
  const std::uint32_t l = lambda.value % pp;
  std::uint32_t a = x.index, idx = 0;
  for (unsigned i = 0; i < e(); ++i) {
    idx += ((a % pp) * l % pp) * t_->place[i];
    a /= pp;
  }
  return {idx};
}

FqElem FieldCtx::neg(FqElem x) const { return scale({p() - 1}, x); }
FqElem FieldCtx::sub(FqElem x, FqElem y) const { return add(x, neg(y)); }

FqElem FieldCtx::mul(FqElem x, FqElem y) const {
  if (x.index == 0 || y.index == 0) return zero();
  const std::uint64_t n = q() - 1;
  return {t_->exp[(t_->log[x.index] + static_cast<std::uint64_t>(t_->log[y.index])) % n]};
}

FqElem FieldCtx::inv(FqElem x) const {
  if (x.index == 0) throw std::domain_error("inverse of zero in F_q");
  const std::uint64_t n = q() - 1;
  return {t_->exp[(n - t_->log[x.index]) % n]};
}

FqElem FieldCtx::pow(FqElem x, std::uint64_t n) const {
  if (x.index == 0) return n == 0 ? one() : zero();
  const std::uint64_t order = q() - 1;
  const auto l = static_cast<unsigned __int128>(t_->log[x.index]) * (n % order);
  return {t_->exp[static_cast<std::uint64_t>(l % order)]};
}

FqElem FieldCtx::frobenius(FqElem x, unsigned times) const {
  const std::uint64_t order = q() - 1;
  std::uint64_t ex = 1 % order;
  for (unsigned i = 0; i < times; ++i) ex = ex * p() % order;
  return pow(x, ex);
}

FqElem FieldCtx::theta_pow(std::uint64_t t) const { return {t_->exp[t % (q() - 1)]}; }

std::optional<std::uint64_t> FieldCtx::log(FqElem x) const {
  if (x.index == 0) return std::nullopt;
  return t_->log[x.index];
}

int FieldCtx::eta(FqElem x) const {
  if (x.index == 0) return 0;
  return t_->log[x.index] % 2 == 0 ? 1 : -1;
}

FqElem FieldCtx::element(std::uint64_t i) const {
  if (i == 0) return zero();
  return {t_->exp[i - 1]};
}

}  // namespace cwe
