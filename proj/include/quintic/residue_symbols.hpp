#pragma once

// Quintic power residue symbols at primes of Z[zeta] other than lambda.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "quintic/cyclo_ring.hpp"
#include "quintic/k0_primes.hpp"

namespace quintic {

/// F_{p^f} = F_p[x] / (modulus), with the image of zeta.
class ResidueField {
 public:
  using Element = std::vector<std::uint64_t>;  // f coefficients, low first

  /// Residue field of a prime q != lambda. The modulus is the degree-f factor
  /// of Phi_5 mod p that q divides (x - c, x^2 - t x + 1 or Phi_5 itself).
  explicit ResidueField(const CycPrime& q);

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return f_; }
  /// Monic modulus, low coefficient first (f + 1 entries).
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  const Element& zeta_image() const { return zeta_; }
  mpz_class order() const;  // p^f

  Element zero() const { return Element(f_, 0); }
  Element one() const;
  bool is_zero(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(Element base, const mpz_class& exponent) const;

  /// Image of a in the field (zeta -> zeta_image).
  Element reduce(const CycInt& a) const;

  /// Elements indexed 0 .. p^f - 1 via base-p digits.
  Element from_index(std::uint64_t index) const;
  std::uint64_t to_index(const Element& a) const;

 private:
  std::uint64_t p_;
  int f_;
  std::vector<std::uint64_t> modulus_;
  Element zeta_;
};

/// The i in [0,4] with a^((p^f - 1)/5) = zeta^i in the residue field of q.
/// Throws SymbolUndefined for q = lambda, NotCoprime when q divides a.
int quintic_symbol(const CycInt& a, const CycPrime& q);
int quintic_symbol(const CycInt& a, const ResidueField& field);

/// Residue-ness of a rational integer locally at p:
///   p = 1 mod 5: a^((p-1)/5) = 1 (mod p);
///   p = 4 mod 5: symbol 0 at the first prime of Z[zeta] above p.
/// Throws EverythingIsAResidue for p = 2, 3 mod 5, SymbolUndefined for p = 5,
/// NotCoprime when p | a.
bool is_quintic_residue_mod_p(long long a, std::uint64_t p);

/// Brute-force fifth-power character; the independent oracle for
/// quintic_symbol. Works from a table of discrete logarithms built by walking
/// the powers of a generator one multiplication at a time, so it shares no
/// exponentiation code with quintic_symbol.
inline constexpr std::uint64_t kBruteForceFieldBound = 1'000'000;

/// Throws FieldTooLarge above kBruteForceFieldBound, plus the errors of
/// quintic_symbol.
int brute_force_symbol(const CycInt& a, const CycPrime& q);

/// Enumerated discrete logarithms and fifth powers of one residue field.
class FifthPowerTable {
 public:
  explicit FifthPowerTable(const ResidueField& field);

  bool contains(const ResidueField::Element& a) const;
  std::size_t count() const { return count_; }

  /// True when zeta itself is a fifth power, i.e. 25 | N - 1. The cosets
  /// zeta^j * (fifth powers) then do not cover the multiplicative group.
  bool zeta_is_fifth_power() const { return zeta_log_ % 5 == 0; }

  /// The j in {0..4} with a * zeta^-j a fifth power. This is not the symbol
  /// itself: zeta^j has symbol j * (N - 1)/5. Throws SymbolUndefined when
  /// zeta_is_fifth_power().
  int coset(const CycInt& a) const;

  /// The i with a^((N - 1)/5) = zeta^i, read off the logarithm table.
  int symbol(const CycInt& a) const;

 private:
  std::uint64_t log_of(const CycInt& a) const;

  ResidueField field_;
  std::vector<std::uint64_t> log_;  // by element index; index 0 unused
  std::uint64_t zeta_log_ = 0;
  std::size_t count_ = 0;
};

}  // namespace quintic
