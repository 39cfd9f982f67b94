#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Small exact integer helpers shared by the field, catalogue and sieve code.
namespace steiner3::arith {

bool is_prime(std::uint64_t n);

// (p, a) with n = p^a, or nullopt when n is not a prime power (n >= 2).
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

// Prime factorization by trial division, stopping early once the cofactor
// is a (Miller-Rabin certified) prime. Ascending, with multiplicities.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Throw ConsistencyError on 64-bit overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Exact binomial coefficient; throws on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace steiner3::arith
