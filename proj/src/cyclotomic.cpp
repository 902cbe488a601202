#include "cwe/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace cwe {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("CycInt coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("CycInt coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("CycInt coefficient overflow");
  return r;
}

std::size_t mod_index(std::int64_t t, unsigned p) {
  std::int64_t r = t % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::size_t>(r);
}

}  // namespace

CycInt::CycInt(unsigned p) : p_(p), c_(p, 0) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("CycInt requires an odd prime");
}

CycInt::CycInt(unsigned p, std::vector<std::int64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("CycInt requires an odd prime");
  if (c_.size() != p) throw std::invalid_argument("CycInt needs exactly p coefficients");
  canonicalize();
}

CycInt CycInt::integer(unsigned p, std::int64_t n) {
  CycInt r(p);
  r.c_[0] = n;
  return r;
}

CycInt CycInt::root(unsigned p, std::int64_t t) {
  CycInt r(p);
  r.c_[mod_index(t, p)] = 1;
  r.canonicalize();
  return r;
}

CycInt CycInt::from_exponent_counts(unsigned p, std::span<const std::int64_t> counts) {
  if (counts.size() != p) throw std::invalid_argument("histogram must have p entries");
  return CycInt(p, std::vector<std::int64_t>(counts.begin(), counts.end()));
}

void CycInt::canonicalize() {
  const std::int64_t top = c_[p_ - 1];
  if (top == 0) return;
  for (auto& v : c_) v = checked_sub(v, top);
}

void CycInt::check_same(const CycInt& o) const {
  if (p_ != o.p_) throw std::invalid_argument("CycInt operands over different p");
}

CycInt CycInt::operator-() const {
  CycInt r(*this);
  for (auto& v : r.c_) v = checked_sub(0, v);
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same(o);
  for (unsigned i = 0; i < p_; ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same(o);
  for (unsigned i = 0; i < p_; ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.check_same(b);
  const unsigned p = a.p_;
  std::vector<std::int64_t> out(p, 0);
  for (unsigned i = 0; i < p; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < p; ++j) {
      if (b.c_[j] == 0) continue;
      auto& slot = out[(i + j) % p];
      slot = checked_add(slot, checked_mul(a.c_[i], b.c_[j]));
    }
  }
  return CycInt(p, std::move(out));
}

CycInt CycInt::scaled(std::int64_t n) const {
  CycInt r(*this);
  for (auto& v : r.c_) v = checked_mul(v, n);
  return r;
}

CycInt CycInt::times_root(std::int64_t t) const {
  std::vector<std::int64_t> out(p_, 0);
  const std::size_t s = mod_index(t, p_);
  for (unsigned i = 0; i < p_; ++i) out[(i + s) % p_] = c_[i];
  return CycInt(p_, std::move(out));
}

CycInt CycInt::galois(std::int64_t t) const {
  const std::size_t s = mod_index(t, p_);
  if (s == 0) throw std::invalid_argument("galois automorphism needs t coprime to p");
  std::vector<std::int64_t> out(p_, 0);
  for (unsigned i = 0; i < p_; ++i) out[(i * s) % p_] = c_[i];
  return CycInt(p_, std::move(out));
}

std::optional<std::int64_t> CycInt::as_rational_integer() const {
  for (unsigned i = 1; i < p_; ++i) {
    if (c_[i] != 0) return std::nullopt;
  }
  return c_[0];
}

bool CycInt::is_zero() const {
  for (auto v : c_) {
    if (v != 0) return false;
  }
  return true;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < p_; ++i) {
    const std::int64_t v = c_[i];
    if (v == 0) continue;
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << '-';
    first = false;
    const std::int64_t mag = v < 0 ? -v : v;
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << "z^" << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace cwe
