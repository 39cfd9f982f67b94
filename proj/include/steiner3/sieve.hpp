#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "steiner3/action.hpp"
#include "steiner3/design.hpp"
#include "steiner3/perm.hpp"

namespace steiner3::sieve {

struct Check {
  std::string name;
  bool pass = false;
};

// Screening of a parameter pair (v, k) for a Steiner 3-design.
struct SieveReport {
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::vector<Check> checks;
  bool cameron_equality = false;
  bool in_equality_list = false;
  bool admissible = false;
};

SieveReport screen(std::uint64_t v, std::uint64_t k);

// Calls visit for every k in [4, blocksize_bound(v)] and every v in range.
void sieve_each(std::uint64_t v_min, std::uint64_t v_max, const std::function<void(const SieveReport&)>& visit);

// Reports for the whole range; with only_admissible, just the passing pairs.
std::vector<SieveReport> admissible_parameters(std::uint64_t v_min, std::uint64_t v_max, bool only_admissible = false);

// r | |G_x|.
bool division_property(std::uint64_t r, std::uint64_t order_gx);

struct StabilizerReport {
  std::uint64_t v = 0, k = 0, b = 0;
  std::uint64_t group_order = 0;
  std::uint64_t point_stabilizer = 0;  // |G_x|
  std::uint64_t pair_stabilizer = 0;   // |G_xy|
  std::uint64_t block_stabilizer = 0;  // |G_B|
  std::uint64_t flag_stabilizer = 0;   // |G_xB|
  // |G_x| and |G_xy| recomputed by Schreier-Sims with x (and y) leading the base.
  std::uint64_t point_stabilizer_chain = 0;
  std::uint64_t pair_stabilizer_chain = 0;
  bool block_count_identity = false;  // b |G_B| = v(v-1) |G_xy|
  bool v_minus_2_identity = false;    // (v-2) |G_xB| = (k-1)(k-2) |G_xy|
  bool ok = false;
};

// Stabilizer orders of a flag-transitive group and the two identities they
// satisfy. Throws InvalidArgument if the group is not flag-transitive and
// ConsistencyError on a non-integral quotient.
StabilizerReport stabilizer_equation(const Design& design, const GeneratorSet& group);

struct CyclotomicEval {
  std::uint64_t d = 0;
  std::uint64_t q = 0;
  mpz_class phi;
  std::uint64_t f = 1;
  std::uint64_t n = 1;
  mpz_class phi_star;
};

// Phi_d(q) by Phi_d(q) = (q^d - 1) / prod_{e | d, e < d} Phi_e(q), then the
// part of it coprime to f = gcd(d, Phi_d(q)).
CyclotomicEval cyclotomic_eval(std::uint64_t d, std::uint64_t q);

struct ZsigmondyResult {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::vector<std::uint64_t> primitive_primes;
};

// Primes dividing q^n - 1 but no q^m - 1 with 1 <= m < n. Requires q^n <= 2^63.
ZsigmondyResult zsigmondy_ppd(std::uint64_t q, std::uint64_t n);

// (2^d - 2) | d (k-1)(k-2).
bool case1_divisibility(std::uint64_t d, std::uint64_t k);

// All (x, n) with x > 0, 0 <= n <= n_max and x^2 - 17 = 2^n. Requires n_max <= 63.
std::vector<std::pair<std::uint64_t, std::uint64_t>> ramanujan_nagell(std::uint64_t n_max);

// Solutions with n = 2e + 5, e >= 1, mapped back through x = 2k - 3 to (e, k).
std::vector<std::pair<std::uint64_t, std::uint64_t>> exponent_blocksize_pairs(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& solutions);

}  // namespace steiner3::sieve
