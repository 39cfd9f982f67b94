#include "steiner3/gf.hpp"

#include <numeric>

#include "steiner3/arith.hpp"
#include "steiner3/error.hpp"

namespace steiner3::gf {

namespace {

using Poly = std::vector<std::uint32_t>;

Poly digits(std::uint64_t index, std::uint32_t p, std::uint32_t len) {
  Poly c(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    c[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return c;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return r;
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(m.size() - 1);
  for (std::uint32_t k = 1; 2 * k <= n; ++k) {
    const std::uint64_t count = arith::checked_pow(p, k);
    for (std::uint64_t j = 0; j < count; ++j) {
      Poly g = digits(j, p, k);
      g.push_back(1);
      if (poly_rem(m, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldContext::FieldContext(std::uint32_t p, std::uint32_t d) : p_(p), d_(d) {
  if (!arith::is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (d < 1) throw InvalidArgument("field degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    q *= p;
    if (q > kMaxOrder) throw InvalidArgument("field order exceeds 2^20");
  }
  q_ = static_cast<std::uint32_t>(q);

  for (std::uint64_t j = 0; j < q; ++j) {
    Poly m = digits(j, p, d);
    m.push_back(1);
    if (is_irreducible(m, p)) {
      modulus_ = std::move(m);
      break;
    }
  }
  if (modulus_.empty()) throw ConsistencyError("no irreducible polynomial found");

  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    Poly r = poly_rem(poly_mul(digits(a, p_, d_), digits(b, p_, d_), p_), modulus_, p_);
    std::uint32_t idx = 0;
    for (std::size_t i = r.size(); i-- > 0;) idx = idx * p_ + r[i];
    return idx;
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  const std::uint64_t group = q_ - 1;
  const auto factors = arith::factorize(group);
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    bool primitive = true;
    for (const auto& [ell, mult] : factors) {
      if (slow_pow(cand, group / ell) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      omega_ = cand;
      break;
    }
  }
  if (omega_ == 0) throw ConsistencyError("no primitive element found");

  exp_.resize(group);
  log_.assign(q_, 0);
  std::vector<bool> seen(q_, false);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    if (x == 0 || seen[x]) throw ConsistencyError("primitive element has order below p^d - 1");
    seen[x] = true;
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, omega_);
  }
  if (x != 1) throw ConsistencyError("primitive element order check failed");
}

void FieldContext::check(FieldElement a) const {
  if (a.index >= q_) throw InvalidArgument("field element index out of range");
}

FieldElement FieldContext::element(std::uint32_t index) const {
  FieldElement a{index};
  check(a);
  return a;
}

FieldElement FieldContext::from_int(std::int64_t n) const {
  const std::int64_t p = p_;
  return FieldElement{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

FieldElement FieldContext::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (p_ == 2) return FieldElement{a.index ^ b.index};
  std::uint32_t x = a.index, y = b.index, r = 0, place = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    r += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return FieldElement{r};
}

FieldElement FieldContext::neg(FieldElement a) const {
  check(a);
  if (p_ == 2) return a;
  std::uint32_t x = a.index, r = 0, place = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    r += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return FieldElement{r};
}

FieldElement FieldContext::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FieldContext::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (a.index == 0 || b.index == 0) return zero();
  return FieldElement{exp_[(std::uint64_t{log_[a.index]} + log_[b.index]) % (q_ - 1)]};
}

FieldElement FieldContext::inv(FieldElement a) const {
  check(a);
  if (a.index == 0) throw InvalidArgument("inversion of zero");
  return FieldElement{exp_[(q_ - 1 - log_[a.index]) % (q_ - 1)]};
}

FieldElement FieldContext::pow(FieldElement a, std::uint64_t e) const {
  check(a);
  if (a.index == 0) return e == 0 ? one() : zero();
  const std::uint64_t n = q_ - 1;
  return FieldElement{exp_[(std::uint64_t{log_[a.index]} * (e % n)) % n]};
}

FieldElement FieldContext::frobenius(FieldElement a, std::uint64_t r) const {
  std::uint64_t s = r;
  while (s > 1 && s % p_ == 0) s /= p_;
  if (s != 1) throw InvalidArgument("frobenius exponent " + std::to_string(r) + " is not a power of p");
  return pow(a, r);
}

std::uint64_t FieldContext::multiplicative_order(FieldElement a) const {
  const std::uint64_t n = q_ - 1;
  return n / std::gcd<std::uint64_t, std::uint64_t>(log(a), n);
}

std::uint32_t FieldContext::log(FieldElement a) const {
  check(a);
  if (a.index == 0) throw InvalidArgument("logarithm of zero");
  return log_[a.index];
}

std::vector<std::uint32_t> FieldContext::coefficients(FieldElement a) const {
  check(a);
  return digits(a.index, p_, d_);
}

FieldElement FieldContext::from_coefficients(const std::vector<std::uint32_t>& c) const {
  if (c.size() > d_) throw InvalidArgument("too many coefficients for field degree");
  std::uint32_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw InvalidArgument("coefficient out of range");
    idx = idx * p_ + c[i];
  }
  return FieldElement{idx};
}

std::vector<FieldElement> FieldContext::fixed_points_of_power(std::uint64_t q) const {
  std::vector<FieldElement> out;
  for (std::uint32_t i = 0; i < q_; ++i) {
    if (pow(FieldElement{i}, q).index == i) out.push_back(FieldElement{i});
  }
  return out;
}

std::string FieldContext::to_string(FieldElement a) const {
  check(a);
  if (d_ == 1) return std::to_string(a.index);
  if (a.index == 0) return "0";
  const auto c = coefficients(a);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

FieldElement primitive_sixth_root(const FieldContext& ctx) {
  if ((ctx.order() - 1) % 6 != 0) {
    throw InvalidArgument("6 does not divide " + std::to_string(ctx.order()) + " - 1");
  }
  for (std::uint32_t i = 2; i < ctx.order(); ++i) {
    if (ctx.multiplicative_order(FieldElement{i}) == 6) return FieldElement{i};
  }
  throw ConsistencyError("no element of order 6");
}

}  // namespace steiner3::gf
