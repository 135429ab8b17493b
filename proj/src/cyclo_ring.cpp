#include "quintic/cyclo_ring.hpp"

#include <array>
#include <sstream>
#include <tuple>

#include "quintic/error.hpp"

namespace quintic {

namespace {

// Reduce a length-7 coefficient vector using zeta^5 = 1 and then
// zeta^4 = -(1 + zeta + zeta^2 + zeta^3).
CycInt reduce(std::array<mpz_class, 7>& c) {
  c[0] += c[5];
  c[1] += c[6];
  return CycInt(CycInt::Coefficients{c[0] - c[4], c[1] - c[4], c[2] - c[4], c[3] - c[4]});
}

// The product of the three non-trivial conjugates; a * conj_product(a) = norm(a).
CycInt conjugate_product(const CycInt& a) {
  return galois_apply(GaloisElement(1), a) * galois_apply(GaloisElement(2), a) *
         galois_apply(GaloisElement(3), a);
}

mpz_class round_div(const mpz_class& x, const mpz_class& n) {
  // nearest integer to x / n for n > 0, halves rounded up
  mpz_class num = 2 * x + n;
  mpz_class den = 2 * n;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

const CycInt& lambda_cofactor() {
  static const CycInt cofactor = conjugate_product(CycInt::lambda());
  return cofactor;
}

bool divisible_by_lambda(const CycInt& a) {
  mpz_class s = a[0] + a[1] + a[2] + a[3];
  return mpz_divisible_ui_p(s.get_mpz_t(), 5) != 0;
}

// a / lambda; caller guarantees divisibility.
CycInt divide_by_lambda(const CycInt& a) {
  CycInt t = a * lambda_cofactor();
  CycInt::Coefficients c;
  for (std::size_t i = 0; i < 4; ++i) {
    mpz_divexact_ui(c[i].get_mpz_t(), t[i].get_mpz_t(), 5);
  }
  return CycInt(c);
}

// min(v_lambda(a), cap), with a = 0 treated as infinitely divisible.
int lambda_valuation_capped(CycInt a, int cap) {
  int v = 0;
  while (v < cap && !a.is_zero() && divisible_by_lambda(a)) {
    a = divide_by_lambda(a);
    ++v;
  }
  return a.is_zero() ? cap : v;
}

}  // namespace

bool CycInt::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool CycInt::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

CycInt& CycInt::operator+=(const CycInt& rhs) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += rhs.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= rhs.c_[i];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& rhs) { return *this = *this * rhs; }

CycInt operator*(const CycInt& a, const CycInt& b) {
  std::array<mpz_class, 7> c{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return reduce(c);
}

CycInt operator-(const CycInt& a) {
  return CycInt(CycInt::Coefficients{-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]});
}

bool operator==(const CycInt& a, const CycInt& b) { return a.c_ == b.c_; }

std::string CycInt::to_string() const {
  static constexpr const char* kBasis[4] = {"", "z", "z^2", "z^3"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    mpz_class mag = abs(c_[i]);
    if (first) {
      if (c_[i] < 0) os << "-";
    } else {
      os << (c_[i] < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << kBasis[i];
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycInt pow(const CycInt& base, unsigned exponent) {
  CycInt result(1);
  CycInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

CycInt galois_apply(GaloisElement g, const CycInt& a) {
  if (g.tau_power() == 0) return a;
  const int k = g.zeta_exponent();
  std::array<mpz_class, 7> c{};
  for (int i = 0; i < 4; ++i) c[(i * k) % 5] += a[i];
  return reduce(c);
}

mpz_class norm(const CycInt& a) {
  // a * tau^2(a) lies in the real subfield; multiply by its tau-conjugate.
  CycInt real = a * galois_apply(GaloisElement(2), a);
  CycInt n = real * galois_apply(GaloisElement(1), real);
  return n[0];
}

DivMod euclid_divmod(const CycInt& a, const CycInt& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "euclid_divmod: zero divisor");
  const CycInt conj = conjugate_product(b);
  const mpz_class nb = (b * conj)[0];
  const CycInt numerator = a * conj;
  CycInt::Coefficients rounded;
  for (std::size_t i = 0; i < 4; ++i) rounded[i] = round_div(numerator[i], nb);
  CycInt q(rounded);
  CycInt r = a - q * b;
  if (norm(r) < nb) return {q, r};
  // Coordinate rounding does not always land inside the Euclidean region;
  // fall back to the 81 neighbouring lattice points in a fixed order.
  for (int o0 = -1; o0 <= 1; ++o0)
    for (int o1 = -1; o1 <= 1; ++o1)
      for (int o2 = -1; o2 <= 1; ++o2)
        for (int o3 = -1; o3 <= 1; ++o3) {
          CycInt candidate = q + CycInt(o0, o1, o2, o3);
          CycInt rem = a - candidate * b;
          if (norm(rem) < nb) return {candidate, rem};
        }
  throw Error(ErrorCode::InternalInvariant,
              "euclid_divmod: no quotient within the offset search for " + a.to_string() +
                  " / " + b.to_string());
}

std::optional<CycInt> exact_divide(const CycInt& a, const CycInt& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "exact_divide: zero divisor");
  const CycInt conj = conjugate_product(b);
  const mpz_class nb = (b * conj)[0];
  const CycInt t = a * conj;
  CycInt::Coefficients q;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!mpz_divisible_p(t[i].get_mpz_t(), nb.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[i].get_mpz_t(), t[i].get_mpz_t(), nb.get_mpz_t());
  }
  return CycInt(q);
}

bool divides(const CycInt& b, const CycInt& a) {
  if (b.is_zero()) return a.is_zero();
  return exact_divide(a, b).has_value();
}

CycInt canonical_associate(const CycInt& a) {
  if (a.is_zero()) return a;
  auto key = [](const CycInt& x) {
    mpz_class weight = abs(x[0]) + abs(x[1]) + abs(x[2]) + abs(x[3]);
    return std::make_tuple(weight, x[0], x[1], x[2], x[3]);
  };
  CycInt best = a;
  auto best_key = key(best);
  CycInt current = a;
  for (int j = 0; j < 5; ++j) {
    for (const CycInt& candidate : {current, -current}) {
      auto k = key(candidate);
      if (k < best_key) {
        best = candidate;
        best_key = std::move(k);
      }
    }
    current *= CycInt::zeta();
  }
  return best;
}

bool is_unit(const CycInt& a) { return norm(a) == 1; }

CycInt unit_inverse(const CycInt& u) {
  if (!is_unit(u)) throw Error(ErrorCode::InvalidArgument, "unit_inverse: not a unit");
  return conjugate_product(u);
}

CycInt gcd(const CycInt& a, const CycInt& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::GcdUndefined, "gcd(0, 0)");
  CycInt x = a;
  CycInt y = b;
  while (!y.is_zero()) {
    CycInt r = euclid_divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return canonical_associate(x);
}

int lambda_valuation(const CycInt& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "lambda_valuation(0)");
  CycInt x = a;
  int v = 0;
  while (divisible_by_lambda(x)) {
    x = divide_by_lambda(x);
    ++v;
  }
  return v;
}

Hyperprimary hyperprimary_class(const CycInt& a) {
  static constexpr std::array<std::pair<long, Hyperprimary>, 4> kClasses = {{
      {1, Hyperprimary::PlusOne},
      {-1, Hyperprimary::MinusOne},
      {7, Hyperprimary::PlusSeven},
      {-7, Hyperprimary::MinusSeven},
  }};
  for (const auto& [c, label] : kClasses) {
    if (lambda_valuation_capped(a - CycInt(c), 5) >= 5) return label;
  }
  return Hyperprimary::None;
}

}  // namespace quintic
