#include <doctest.h>

#include <algorithm>
#include <random>
#include <tuple>

#include "steiner3/arith.hpp"
#include "steiner3/error.hpp"
#include "steiner3/gf.hpp"

using namespace steiner3;
using gf::FieldContext;
using gf::FieldElement;

namespace {

// Multiplicative order of a modulo a prime p by repeated multiplication.
unsigned order_mod(unsigned a, unsigned p) {
  unsigned x = a % p, n = 1;
  while (x != 1) {
    x = x * a % p;
    ++n;
  }
  return n;
}

// Independent schoolbook product of two element indices modulo the
// context's modulus, on plain coefficient vectors.
std::uint32_t reference_mul(const FieldContext& f, std::uint32_t a, std::uint32_t b) {
  const unsigned p = f.characteristic(), d = f.degree();
  std::vector<std::uint64_t> x(d), y(d), r(2 * d, 0);
  for (unsigned i = 0; i < d; ++i, a /= p, b /= p) {
    x[i] = a % p;
    y[i] = b % p;
  }
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
  const auto& m = f.modulus();
  for (unsigned top = 2 * d - 1; top >= d; --top) {
    const std::uint64_t c = r[top];
    for (unsigned i = 0; i <= d; ++i) r[top - d + i] = (r[top - d + i] + (p - c) * m[i]) % p;
  }
  std::uint32_t idx = 0;
  for (unsigned i = d; i-- > 0;) idx = idx * p + static_cast<std::uint32_t>(r[i]);
  return idx;
}

}  // namespace

TEST_CASE("prime field GF(7)") {
  const FieldContext f(7, 1);
  unsigned smallest_root = 0;
  for (unsigned a = 2; a < 7 && smallest_root == 0; ++a) {
    if (order_mod(a, 7) == 6) smallest_root = a;
  }
  CHECK(smallest_root == 3);
  CHECK(f.omega().index == smallest_root);
  CHECK(f.order() == 7);

  unsigned inverse = 0;
  for (unsigned b = 1; b < 7; ++b) {
    if (3 * b % 7 == 1) inverse = b;
  }
  CHECK(inverse == 5);
  CHECK(f.inv(f.element(3)).index == inverse);
  CHECK(f.frobenius(f.element(3), 7).index == 3);
}

TEST_CASE("GF(8) uses x^3 + x + 1") {
  // Brute force: a cubic over GF(2) is irreducible iff it has no root.
  std::uint32_t smallest = 0;
  for (std::uint32_t low = 0; low < 8 && smallest == 0; ++low) {
    const unsigned c0 = low & 1, c1 = (low >> 1) & 1, c2 = (low >> 2) & 1;
    const bool root0 = c0 == 0;
    const bool root1 = (c0 + c1 + c2 + 1) % 2 == 0;
    if (!root0 && !root1) smallest = low;
  }
  CHECK(smallest == 0b011);

  const FieldContext f(2, 3);
  CHECK(f.modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  const FieldElement x = f.element(2);
  CHECK(f.omega() == x);
  CHECK(f.pow(x, 3) == f.add(x, f.one()));
  CHECK(f.mul(x, f.mul(x, x)) == f.element(3));  // x * x^2 = x + 1
  CHECK(f.to_string(f.element(3)) == "x+1");

  FieldElement y = f.omega();
  for (int i = 0; i < 3; ++i) y = f.frobenius(y, 2);
  CHECK(y == f.omega());
}

TEST_CASE("GF(9) modulus and Frobenius") {
  const FieldContext f(3, 2);
  CHECK(f.modulus() == std::vector<std::uint32_t>{1, 0, 1});
  const FieldElement x = f.from_coefficients({0, 1});
  CHECK(f.frobenius(x, 3) == f.neg(x));
  CHECK(f.frobenius(x, 3) == f.from_coefficients({0, 2}));
  CHECK_THROWS_AS(f.frobenius(x, 6), InvalidArgument);
  CHECK(f.multiplicative_order(f.omega()) == 8);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(FieldContext(4, 1), InvalidArgument);
  CHECK_THROWS_AS(FieldContext(1, 1), InvalidArgument);
  CHECK_THROWS_AS(FieldContext(2, 21), InvalidArgument);
  CHECK_THROWS_AS(FieldContext(3, 0), InvalidArgument);
  const FieldContext f(5, 1);
  CHECK_THROWS_AS(f.inv(f.zero()), InvalidArgument);
  CHECK_THROWS_AS(f.element(5), InvalidArgument);
}

TEST_CASE("primitive sixth roots") {
  for (auto [p, expect] : {std::pair{7u, 3u}, {19u, 8u}, {31u, 6u}}) {
    unsigned brute = 0;
    for (unsigned a = 2; a < p && brute == 0; ++a) {
      if (order_mod(a, p) == 6) brute = a;
    }
    CHECK(brute == expect);
    const FieldContext f(p, 1);
    const FieldElement eps = gf::primitive_sixth_root(f);
    CHECK(eps.index == expect);
    CHECK((expect * expect - expect + 1) % p == 0);
  }
  CHECK_THROWS_AS(gf::primitive_sixth_root(FieldContext(2, 3)), InvalidArgument);
}

TEST_CASE("sixth roots satisfy x^2 - x + 1 = 0 in every admissible field up to 4096") {
  int checked = 0;
  for (std::uint64_t q = 7; q <= 4096; ++q) {
    auto pp = arith::prime_power(q);
    if (!pp || (q - 1) % 6 != 0) continue;
    const FieldContext f(static_cast<std::uint32_t>(pp->first), pp->second);
    const FieldElement e = gf::primitive_sixth_root(f);
    CHECK(f.pow(e, 6) == f.one());
    CHECK(f.pow(e, 2) != f.one());
    CHECK(f.pow(e, 3) != f.one());
    CHECK(f.add(f.sub(f.mul(e, e), e), f.one()) == f.zero());
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("multiplication agrees with schoolbook polynomial arithmetic") {
  std::mt19937 rng(7);
  for (auto [p, d] : {std::pair{2u, 5u}, {3u, 3u}, {5u, 2u}, {2u, 7u}, {7u, 2u}, {13u, 1u}}) {
    const FieldContext f(p, d);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
    for (int i = 0; i < 300; ++i) {
      const std::uint32_t a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(f.mul(f.element(a), f.element(b)).index == reference_mul(f, a, b));
      const auto A = f.element(a), B = f.element(b), C = f.element(c);
      CHECK(f.mul(A, f.add(B, C)) == f.add(f.mul(A, B), f.mul(A, C)));
      CHECK(f.add(A, f.neg(A)) == f.zero());
      CHECK(f.mul(A, f.one()) == A);
      if (a != 0) CHECK(f.mul(A, f.inv(A)) == f.one());
    }
  }
}

TEST_CASE("every nonzero element has order dividing p^d - 1 and omega generates") {
  for (auto [p, d] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {11u, 1u}}) {
    const FieldContext f(p, d);
    std::vector<bool> seen(f.order(), false);
    FieldElement x = f.one();
    for (std::uint32_t i = 0; i + 1 < f.order(); ++i) {
      seen[x.index] = true;
      x = f.mul(x, f.omega());
    }
    CHECK(x == f.one());
    CHECK(std::count(seen.begin(), seen.end(), true) == f.order() - 1);
    for (std::uint32_t a = 1; a < f.order(); ++a) CHECK(f.pow(f.element(a), f.order() - 1) == f.one());
  }
}

TEST_CASE("subfields GF(q) inside GF(q^e)") {
  for (auto [p, a, e] : {std::tuple{3u, 1u, 2u}, {3u, 1u, 3u}, {2u, 2u, 2u}, {5u, 1u, 2u}}) {
    const FieldContext f(p, a * e);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < a; ++i) q *= p;
    const auto sub = f.fixed_points_of_power(q);
    CHECK(sub.size() == q);
    for (auto x : sub) {
      for (auto y : sub) {
        CHECK(std::find(sub.begin(), sub.end(), f.add(x, y)) != sub.end());
        CHECK(std::find(sub.begin(), sub.end(), f.mul(x, y)) != sub.end());
      }
    }
  }
}
