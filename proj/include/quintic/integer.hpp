#pragma once

// Rational-integer helpers: 64-bit modular arithmetic, certified primality
// and factorization, and root finding modulo a prime.

#include <cstdint>
#include <optional>
#include <vector>

namespace quintic::nt {

struct PrimePower {
  std::uint64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial division stops here; any cofactor left above this bound must be
/// certified prime by Miller-Rabin or the factorization is rejected.
inline constexpr std::uint64_t kTrialDivisionBound = 1'000'000;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Deterministic for every 64-bit input (fixed witness set).
bool is_prime(std::uint64_t n);

/// Factorization in ascending prime order. Throws UnprovenFactorization when
/// a composite cofactor with no factor below kTrialDivisionBound remains.
std::vector<PrimePower> factor(std::uint64_t n);

int valuation(std::uint64_t n, std::uint64_t p);

/// Multiplicative order of a modulo the prime p (a not divisible by p).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p);

/// Smallest primitive root modulo the prime p.
std::uint64_t primitive_root(std::uint64_t p);

/// Square root modulo an odd prime p, the smaller of the two roots, or
/// nullopt if a is a non-residue.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);

/// The four elements of order 5 in (Z/p)^*, ascending; requires p = 1 mod 5.
std::vector<std::uint64_t> order_five_elements(std::uint64_t p);

/// Roots of t^2 + t - 1 modulo p, ascending; requires p = 4 mod 5.
std::vector<std::uint64_t> golden_roots(std::uint64_t p);

/// Primes below the bound, ascending (simple sieve).
std::vector<std::uint64_t> primes_below(std::uint64_t bound);

}  // namespace quintic::nt
