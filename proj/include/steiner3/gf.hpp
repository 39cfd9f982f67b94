#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace steiner3::gf {

// An element of GF(p^d), identified by the base-p integer whose digits are
// its polynomial-basis coefficients (constant term least significant).
// Only meaningful relative to the FieldContext that produced it.
struct FieldElement {
  std::uint32_t index = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// GF(p^d) in a fixed polynomial basis.
///
/// The modulus is the monic irreducible of degree d with the smallest
/// element-style index (lower coefficients read as a base-p number, constant
/// term least significant); omega is the primitive element of smallest index.
/// Both are checked at construction. Immutable afterwards, so a context may
/// be shared freely between threads.
class FieldContext {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  FieldContext(std::uint32_t p, std::uint32_t d);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return d_; }
  std::uint32_t order() const { return q_; }
  // Coefficients c_0..c_d of the modulus, c_d = 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldElement omega() const { return FieldElement{omega_}; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  FieldElement element(std::uint32_t index) const;
  // Embeds the integer n as n mod p.
  FieldElement from_int(std::int64_t n) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  // a^r where r must be a power of p.
  FieldElement frobenius(FieldElement a, std::uint64_t r) const;

  // Multiplicative order; a must be nonzero.
  std::uint64_t multiplicative_order(FieldElement a) const;
  // Discrete log to base omega; a must be nonzero.
  std::uint32_t log(FieldElement a) const;

  std::vector<std::uint32_t> coefficients(FieldElement a) const;
  FieldElement from_coefficients(const std::vector<std::uint32_t>& c) const;

  // The q elements fixed by x -> x^q, i.e. the subfield GF(q) when q^m = p^d.
  std::vector<FieldElement> fixed_points_of_power(std::uint64_t q) const;

  // Residue for prime fields, polynomial in "x" otherwise.
  std::string to_string(FieldElement a) const;

  friend bool operator==(const FieldContext& a, const FieldContext& b) {
    return a.p_ == b.p_ && a.d_ == b.d_ && a.modulus_ == b.modulus_;
  }

 private:
  void check(FieldElement a) const;

  std::uint32_t p_;
  std::uint32_t d_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t omega_ = 0;
  std::vector<std::uint32_t> exp_;  // exp_[i] = omega^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;  // log_[exp_[i]] = i; log_[0] unused
};

inline FieldContext field_new(std::uint32_t p, std::uint32_t d) { return FieldContext(p, d); }

// The smallest-index element of multiplicative order exactly 6.
FieldElement primitive_sixth_root(const FieldContext& ctx);

}  // namespace steiner3::gf
