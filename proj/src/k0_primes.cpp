#include "quintic/k0_primes.hpp"

#include "quintic/error.hpp"
#include "quintic/integer.hpp"

namespace quintic {

namespace {

void require_prime(std::uint64_t p) {
  if (!nt::is_prime(p)) {
    throw Error(ErrorCode::CompositeInput, std::to_string(p) + " is not prime");
  }
}

void check_prime_norm(const CycPrime& q) {
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), q.rational_prime,
                static_cast<unsigned long>(q.residue_degree));
  if (norm(q.element) != expected) {
    throw Error(ErrorCode::InternalInvariant,
                "prime above " + std::to_string(q.rational_prime) + " has wrong norm");
  }
}

}  // namespace

CycInt CycFactorization::product() const {
  CycInt out = unit;
  for (const auto& [prime, e] : factors) out *= pow(prime.element, static_cast<unsigned>(e));
  return out;
}

SplittingType splitting_type(std::uint64_t p) {
  require_prime(p);
  if (p == 5) return SplittingType::Ramified;
  switch (p % 5) {
    case 1: return SplittingType::SplitFour;
    case 4: return SplittingType::SplitTwo;
    default: return SplittingType::Inert;
  }
}

std::vector<CycPrime> factor_rational_prime(std::uint64_t p) {
  std::vector<CycPrime> out;
  const CycInt rational_p(mpz_class(static_cast<unsigned long>(p)));
  switch (splitting_type(p)) {
    case SplittingType::Ramified:
      out.push_back({5, CycInt::lambda(), 1, 4});
      break;
    case SplittingType::SplitFour:
      for (std::uint64_t c : nt::order_five_elements(p)) {
        CycInt linear = CycInt::zeta() - CycInt(mpz_class(static_cast<unsigned long>(c)));
        out.push_back({p, gcd(rational_p, linear), 1, 1});
      }
      break;
    case SplittingType::SplitTwo:
      for (std::uint64_t t : nt::golden_roots(p)) {
        CycInt quadratic(CycInt::Coefficients{1, -mpz_class(static_cast<unsigned long>(t)), 1, 0});
        out.push_back({p, gcd(rational_p, quadratic), 2, 1});
      }
      break;
    case SplittingType::Inert:
      out.push_back({p, rational_p, 4, 1});
      break;
  }
  for (const auto& q : out) check_prime_norm(q);
  return out;
}

CycFactorization factor_radicand(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "factor_radicand: n must be >= 2");
  CycFactorization result;
  CycInt partial(1);
  for (const auto& [p, e] : nt::factor(n)) {
    for (CycPrime& q : factor_rational_prime(p)) {
      const int exponent = e * q.ramification;
      partial *= pow(q.element, static_cast<unsigned>(exponent));
      result.factors.emplace_back(std::move(q), exponent);
    }
  }
  auto unit = exact_divide(CycInt(mpz_class(static_cast<unsigned long>(n))), partial);
  if (!unit || !is_unit(*unit)) {
    throw Error(ErrorCode::InternalInvariant,
                "factor_radicand: cofactor of " + std::to_string(n) + " is not a unit");
  }
  result.unit = *unit;
  return result;
}

CycInt fundamental_unit() { return {0, 0, -1, -1}; }

bool is_primary(const CycInt& a) {
  for (std::size_t i = 1; i < 4; ++i) {
    if (!mpz_divisible_ui_p(a[i].get_mpz_t(), 5)) return false;
  }
  return !mpz_divisible_ui_p(a[0].get_mpz_t(), 5);
}

CycPrime primary_normalize(const CycPrime& q) {
  if (q.rational_prime == 5) {
    throw Error(ErrorCode::InvalidArgument, "primary_normalize: the prime above 5");
  }
  const CycInt eps = fundamental_unit();
  const CycInt eps_inv = unit_inverse(eps);
  for (int k = 0; k <= 2 * kUnitSearchBound; ++k) {
    // m = 0, 1, -1, 2, -2, ...
    const int m = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
    CycInt scaled = q.element * (m >= 0 ? pow(eps, static_cast<unsigned>(m))
                                        : pow(eps_inv, static_cast<unsigned>(-m)));
    for (int j = 0; j < 5; ++j) {
      for (const CycInt& candidate : {scaled, -scaled}) {
        if (is_primary(candidate)) {
          CycPrime out = q;
          out.element = candidate;
          return out;
        }
      }
      scaled *= CycInt::zeta();
    }
  }
  throw Error(ErrorCode::NoPrimaryAssociate,
              "no associate of " + q.element.to_string() + " (above " +
                  std::to_string(q.rational_prime) +
                  ") is congruent to a rational integer mod 5 within |m| <= " +
                  std::to_string(kUnitSearchBound));
}

}  // namespace quintic
