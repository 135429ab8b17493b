#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quintic/cyclo_ring.hpp"
#include "quintic/k0_primes.hpp"
#include "quintic/radicand.hpp"

namespace quintic {

/// Minimal polynomial of the Gaussian periods of degree 5 for a prime
/// p = 1 (mod 5); it defines the quintic subfield M(p) of Q(zeta_p).
struct PeriodPolynomial {
  std::uint64_t p = 0;
  std::array<mpz_class, 6> coefficients;  // constant term first, monic

  friend bool operator==(const PeriodPolynomial&, const PeriodPolynomial&) = default;
};

inline constexpr std::uint64_t kPeriodPrimeBound = 100'000;

/// With g a primitive root (the smallest one unless given) and H the index-5
/// subgroup of (Z/p)^*, returns prod_j (x - eta_j), eta_j = sum_{h in H}
/// zeta_p^(g^j h). Throws WrongCongruenceClass, BoundExceeded, or
/// InvalidArgument if the supplied root is not primitive.
PeriodPolynomial period_polynomial(std::uint64_t p,
                                   std::optional<std::uint64_t> primitive_root = {});

/// Discriminant of a monic quintic (constant term first).
mpz_class quintic_discriminant(const std::array<mpz_class, 6>& coefficients);

/// A prime l such that the polynomial is irreducible mod l (which proves it
/// irreducible over Q), searched over l < bound; nullopt if none is found.
std::optional<std::uint64_t> irreducibility_witness(
    const std::array<mpz_class, 6>& coefficients, std::uint64_t bound = 10'000);

struct AbsoluteGenus {
  int r = 0;
  std::vector<PeriodPolynomial> components;
  mpz_class genus_number;  // 5^r
};

AbsoluteGenus absolute_genus(std::uint64_t n);

/// Number of primes of Q(zeta) ramified in k = Q(zeta, n^(1/5)): the primes
/// dividing the prime-to-5 part of n, plus lambda unless n is hyperprimary.
int count_ramified_d(std::uint64_t n);

/// q* = assumed_rank + 3 - d. Throws NotClassified for verdict None and
/// QstarOutOfRange if the value leaves {0,1,2}.
int infer_qstar(std::uint64_t n, int assumed_rank = 1);

/// Formal radical w = lambda^lambda_exp * prod pi^a with its exact value.
struct KummerGenerator {
  int lambda_exp = 0;
  std::vector<std::pair<CycPrime, int>> prime_exps;
  CycInt realization;
};

struct GeneratorRejection {
  std::string exponents;
  std::string reason;
};

struct RelativeGenus {
  Verdict form = Verdict::None;
  std::string shape;  // human-readable radical shape
  std::vector<KummerGenerator> generators;
  std::vector<GeneratorRejection> rejections;
  std::vector<std::string> warnings;
};

/// Candidate generators of the relative genus field (k/k0)* in the radical
/// shape of the radicand's form, one canonical representative per Kummer
/// class. Throws NotClassified for verdict None and NoAdmissibleGenerator
/// (message carries the rejection ledger) when every candidate is rejected.
RelativeGenus relative_genus(std::uint64_t n);

enum class CorollaryOutcome {
  NoHypothesis,            // h_gamma absent, or 5 does not divide it exactly
  SingleSplitPrime,        // r = 1: Gamma* is the Hilbert 5-class field
  DistinctComposita,       // r = 0: the five composita are distinct
};

struct CorollaryReport {
  std::uint64_t n = 0;
  int r = 0;
  std::optional<mpz_class> h_gamma;
  CorollaryOutcome outcome = CorollaryOutcome::NoHypothesis;
  std::vector<std::string> statements;
};

/// Throws ContradictionWitness when 5 || h_gamma while r >= 2.
CorollaryReport corollary_report(std::uint64_t n, std::optional<mpz_class> h_gamma);

struct GenusReport {
  std::uint64_t n = 0;
  int r = 0;
  mpz_class genus_number;
  std::vector<PeriodPolynomial> absolute_components;
  std::vector<KummerGenerator> relative_candidates;
  int d = 0;
  std::optional<int> qstar_inferred;
  std::optional<int> rank_value;
  std::vector<std::string> warnings;
};

/// All genus data for n. Failures of q* inference or of the relative genus
/// search are recorded as warnings rather than thrown.
GenusReport genus_report(std::uint64_t n, int assumed_rank = 1);

}  // namespace quintic
