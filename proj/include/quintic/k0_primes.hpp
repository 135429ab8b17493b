#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "quintic/cyclo_ring.hpp"

namespace quintic {

enum class SplittingType { Ramified, SplitFour, SplitTwo, Inert };

/// A prime element of Z[zeta] together with the rational prime below it.
struct CycPrime {
  std::uint64_t rational_prime = 0;
  CycInt element;
  int residue_degree = 0;  // f
  int ramification = 0;    // e

  friend bool operator==(const CycPrime&, const CycPrime&) = default;
};

struct CycFactorization {
  CycInt unit;
  std::vector<std::pair<CycPrime, int>> factors;

  /// unit * prod pi^e, recomputed.
  CycInt product() const;
};

/// Throws CompositeInput unless p is prime.
SplittingType splitting_type(std::uint64_t p);

/// Primes of Z[zeta] above p, one full Galois orbit:
///   p = 5       -> [1 - zeta], e = 4
///   p = 1 mod 5 -> gcd(p, zeta - c) for the four c of order 5, ascending c
///   p = 4 mod 5 -> gcd(p, zeta^2 - t*zeta + 1), t^2 + t - 1 = 0, ascending t
///   otherwise   -> [p], f = 4
std::vector<CycPrime> factor_rational_prime(std::uint64_t p);

/// n = unit * prod pi_i^{e_i} over Z[zeta]. Throws InvalidArgument for n < 2.
CycFactorization factor_radicand(std::uint64_t n);

/// -(zeta^2 + zeta^3), a fundamental unit of the real quadratic subfield.
CycInt fundamental_unit();

/// Search bound on the exponent m of the fundamental unit.
inline constexpr int kUnitSearchBound = 4;

/// An associate u*pi with u*pi = a (mod 5) for a rational a in {1,2,3,4},
/// u ranging over +-zeta^j * eps^m, j in [0,4], |m| <= kUnitSearchBound,
/// searched by ascending |m| (positive m first), then j, then sign. Throws
/// NoPrimaryAssociate when the bounded search fails and InvalidArgument for
/// the prime above 5.
CycPrime primary_normalize(const CycPrime& q);

/// True iff a = r (mod 5 Z[zeta]) for some rational r in {1,2,3,4}.
bool is_primary(const CycInt& a);

}  // namespace quintic
