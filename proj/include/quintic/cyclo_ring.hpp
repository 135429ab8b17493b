#pragma once

// Exact arithmetic in Z[zeta], zeta a primitive fifth root of unity.
//
// Elements are stored in the power basis 1, zeta, zeta^2, zeta^3; products
// are reduced with zeta^4 = -(1 + zeta + zeta^2 + zeta^3).

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>

namespace quintic {

class CycInt {
 public:
  using Coefficients = std::array<mpz_class, 4>;

  CycInt() = default;
  CycInt(long value) { c_[0] = value; }  // NOLINT: rational embedding
  explicit CycInt(const mpz_class& value) { c_[0] = value; }
  explicit CycInt(Coefficients coeffs) : c_(std::move(coeffs)) {}
  CycInt(long a0, long a1, long a2, long a3) : c_{a0, a1, a2, a3} {}

  static CycInt zeta() { return {0, 1, 0, 0}; }
  /// 1 - zeta, the prime above 5.
  static CycInt lambda() { return {1, -1, 0, 0}; }

  const mpz_class& operator[](std::size_t i) const { return c_[i]; }
  const Coefficients& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;

  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  CycInt& operator*=(const CycInt& rhs);

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator-(const CycInt& a);
  friend bool operator==(const CycInt& a, const CycInt& b);

  /// "a0 + a1*z + a2*z^2 + a3*z^3" with zero terms dropped.
  std::string to_string() const;

 private:
  Coefficients c_{};
};

CycInt pow(const CycInt& base, unsigned exponent);

/// The automorphism zeta -> zeta^(2^t) of Q(zeta)/Q, t in {0,1,2,3}.
class GaloisElement {
 public:
  constexpr explicit GaloisElement(int tau_power = 0) : t_(((tau_power % 4) + 4) % 4) {}

  constexpr int tau_power() const { return t_; }
  /// 2^t mod 5: the exponent k with zeta -> zeta^k.
  constexpr int zeta_exponent() const {
    constexpr int kPowers[4] = {1, 2, 4, 3};
    return kPowers[t_];
  }
  constexpr GaloisElement compose(GaloisElement other) const {
    return GaloisElement(t_ + other.t_);
  }
  friend constexpr bool operator==(GaloisElement, GaloisElement) = default;

 private:
  int t_;
};

CycInt galois_apply(GaloisElement g, const CycInt& a);

/// N_{Q(zeta)/Q}(a); always >= 0.
mpz_class norm(const CycInt& a);

struct DivMod {
  CycInt quotient;
  CycInt remainder;
};

/// a = q*b + r with norm(r) < norm(b). Throws DivisionByZero for b = 0.
DivMod euclid_divmod(const CycInt& a, const CycInt& b);

/// a / b when b divides a exactly.
std::optional<CycInt> exact_divide(const CycInt& a, const CycInt& b);
bool divides(const CycInt& b, const CycInt& a);

/// Among the ten associates +-zeta^j * a, the one minimizing
/// (sum |a_i|, then (a0, a1, a2, a3) lexicographically).
CycInt canonical_associate(const CycInt& a);

bool is_unit(const CycInt& a);
/// Inverse of a unit. Throws InvalidArgument for non-units.
CycInt unit_inverse(const CycInt& u);

/// Canonical generator of the ideal (a, b). Throws GcdUndefined for (0, 0).
CycInt gcd(const CycInt& a, const CycInt& b);

/// v_lambda(a) for a != 0. Throws ZeroInput.
int lambda_valuation(const CycInt& a);

enum class Hyperprimary { PlusOne, MinusOne, PlusSeven, MinusSeven, None };

/// The c in {1, -1, 7, -7} with a = c (mod lambda^5), if any.
Hyperprimary hyperprimary_class(const CycInt& a);

}  // namespace quintic
