#include <doctest.h>

#include <algorithm>

#include "quintic/error.hpp"
#include "quintic/integer.hpp"
#include "quintic/k0_primes.hpp"

using namespace quintic;

TEST_CASE("splitting types") {
  CHECK(splitting_type(5) == SplittingType::Ramified);
  CHECK(splitting_type(19) == SplittingType::SplitTwo);
  CHECK(splitting_type(11) == SplittingType::SplitFour);
  CHECK(splitting_type(2) == SplittingType::Inert);
  CHECK(splitting_type(3) == SplittingType::Inert);
  CHECK_THROWS_AS(splitting_type(21), Error);
  try {
    splitting_type(21);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CompositeInput);
  }
}

TEST_CASE("the prime above 5") {
  auto v = factor_rational_prime(5);
  REQUIRE(v.size() == 1);
  CHECK(v[0].element == CycInt::lambda());
  CHECK(v[0].residue_degree == 1);
  CHECK(v[0].ramification == 4);
}

TEST_CASE("primes above 19 come from x^2 - 4x + 1 and x^2 - 14x + 1") {
  auto v = factor_rational_prime(19);
  REQUIRE(v.size() == 2);
  const CycInt z = CycInt::zeta();
  const CycInt quad4 = z * z - CycInt(4L) * z + CycInt(1L);
  const CycInt quad14 = z * z - CycInt(14L) * z + CycInt(1L);
  for (const auto& q : v) {
    CHECK(norm(q.element) == 361);
    CHECK(q.residue_degree == 2);
  }
  CHECK(divides(v[0].element, quad4));
  CHECK(divides(v[1].element, quad14));
  // (x^2 - 4x + 1)(x^2 - 14x + 1) = Phi_5 (mod 19)
  const long c[5] = {1, -18, 58, -18, 1};
  for (int i = 0; i < 5; ++i) CHECK(((c[i] - 1) % 19 + 19) % 19 == 0);
}

TEST_CASE("primes above 11 include gcd(11, zeta - 3)") {
  auto v = factor_rational_prime(11);
  REQUIRE(v.size() == 4);
  const CycInt g = gcd(CycInt(11L), CycInt::zeta() - CycInt(3L));
  CHECK(std::find_if(v.begin(), v.end(), [&](const CycPrime& q) { return q.element == g; }) != v.end());
  for (const auto& q : v) CHECK(norm(q.element) == 11);
}

TEST_CASE("splitting invariants for every prime below 10^4") {
  for (std::uint64_t p : nt::primes_below(10'000)) {
    auto v = factor_rational_prime(p);
    const int g = static_cast<int>(v.size());
    CycInt product(1L);
    for (const auto& q : v) {
      CHECK(q.ramification * q.residue_degree * g == 4);
      CHECK(q.rational_prime == p);
      mpz_class pf;
      mpz_ui_pow_ui(pf.get_mpz_t(), p, static_cast<unsigned long>(q.residue_degree));
      CHECK(norm(q.element) == pf);
      CHECK((q.ramification == 4) == (p == 5));
      product *= pow(q.element, static_cast<unsigned>(q.ramification));
    }
    auto u = exact_divide(CycInt(static_cast<long>(p)), product);
    REQUIRE(u.has_value());
    CHECK(is_unit(*u));
    const int order = static_cast<int>(p == 5 ? 0 : nt::multiplicative_order(p % 5, 5));
    const int expected_g = p == 5 ? 1 : 4 / order;
    CHECK(g == expected_g);
    // Galois conjugates of each prime are associates of primes in the list.
    if (p < 500) {
      for (const auto& q : v) {
        for (int t = 0; t < 4; ++t) {
          const CycInt image = galois_apply(GaloisElement(t), q.element);
          CHECK(std::any_of(v.begin(), v.end(), [&](const CycPrime& r) {
            return divides(r.element, image) && divides(image, r.element);
          }));
        }
      }
    }
  }
}

TEST_CASE("radicand factorization") {
  auto f = factor_radicand(25);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first.element == CycInt::lambda());
  CHECK(f.factors[0].second == 8);
  CHECK(is_unit(f.unit));
  CHECK(f.product() == CycInt(25L));

  f = factor_radicand(95);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0].second == 4);
  CHECK(norm(f.factors[1].first.element) == 361);
  CHECK(norm(f.factors[2].first.element) == 361);
  CHECK(f.product() == CycInt(95L));

  f = factor_radicand(2);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first.residue_degree == 4);

  for (std::uint64_t n = 2; n < 3000; ++n) {
    f = factor_radicand(n);
    CHECK(f.product() == CycInt(static_cast<long>(n)));
    CHECK(norm(f.unit) == 1);
  }
  CHECK_THROWS_AS(factor_radicand(1), Error);
}

TEST_CASE("primary normalization") {
  CHECK(is_primary(CycInt(2L)));
  CHECK_FALSE(is_primary(CycInt::zeta()));
  auto two = factor_rational_prime(2)[0];
  CHECK(primary_normalize(two).element == CycInt(2L));
  auto three = factor_rational_prime(3)[0];
  CHECK(primary_normalize(three).element == CycInt(3L));
  for (std::uint64_t p : {19ULL, 29ULL, 59ULL, 79ULL, 89ULL, 109ULL, 139ULL, 149ULL}) {
    for (const auto& q : factor_rational_prime(p)) {
      const CycPrime n = primary_normalize(q);
      CHECK(is_primary(n.element));
      CHECK(is_unit(*exact_divide(n.element, q.element)));
    }
  }
  CHECK_THROWS_AS(primary_normalize(factor_rational_prime(5)[0]), Error);
  try {
    primary_normalize(factor_rational_prime(11)[0]);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoPrimaryAssociate);
  }
}
