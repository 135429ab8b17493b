#pragma once

// Reference implementations written along a different path from the
// production code. They favour directness over speed and are only used to
// cross-check results in tests and in `quintic selftest`.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>

#include "quintic/cyclo_ring.hpp"
#include "quintic/radicand.hpp"

namespace quintic::oracle {

/// Family membership from plain trial division and residues mod 5 and 25.
/// Returns nullopt when n has a fifth-power factor.
std::optional<Verdict> classify(std::uint64_t n);

/// Minimal polynomial of the Gaussian periods of degree 5 for p = 1 (mod 5),
/// computed with dense vectors in Z[x]/(x^p - 1). Constant term first.
std::array<mpz_class, 6> period_polynomial(std::uint64_t p, std::uint64_t primitive_root);

/// Resultant of x^4 + x^3 + x^2 + x + 1 and a0 + a1 x + a2 x^2 + a3 x^3.
mpz_class norm_by_resultant(const CycInt& a);

/// v_lambda(a) by repeated trial division with lambda = 1 - zeta.
int lambda_valuation_naive(const CycInt& a);

}  // namespace quintic::oracle
