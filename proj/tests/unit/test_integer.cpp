#include <doctest.h>

#include "quintic/error.hpp"
#include "quintic/integer.hpp"

using namespace quintic;
using namespace quintic::nt;

TEST_CASE("primality agrees with a sieve below 10^5") {
  const auto primes = primes_below(100'000);
  std::vector<bool> sieve(100'000, false);
  for (auto p : primes) sieve[p] = true;
  for (std::uint64_t n = 0; n < 100'000; ++n) CHECK(is_prime(n) == sieve[n]);
}

TEST_CASE("primality of large known values") {
  CHECK(is_prime(1'000'000'007ULL));
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(18446744073709551557ULL - 2));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("factorization multiplies back") {
  for (std::uint64_t n : {2ULL, 12ULL, 95ULL, 341ULL, 1'000'000ULL, 600851475143ULL,
                          999'999'000'001ULL * 7ULL}) {
    std::uint64_t product = 1;
    for (const auto& [p, e] : factor(n)) {
      CHECK(is_prime(p));
      for (int i = 0; i < e; ++i) product *= p;
    }
    CHECK(product == n);
  }
  CHECK_THROWS_AS(factor(0), Error);
}

TEST_CASE("square roots and order-5 elements") {
  for (std::uint64_t p : primes_below(2000)) {
    if (p == 2) continue;
    for (std::uint64_t a = 1; a < std::min<std::uint64_t>(p, 60); ++a) {
      auto r = sqrt_mod(a, p);
      if (r) {
        CHECK(mul_mod(*r, *r, p) == a % p);
        CHECK(*r <= p - *r);
      }
    }
    if (p % 5 == 1) {
      auto c = order_five_elements(p);
      REQUIRE(c.size() == 4);
      for (auto x : c) CHECK(pow_mod(x, 5, p) == 1);
      CHECK(std::is_sorted(c.begin(), c.end()));
    }
    if (p % 5 == 4) {
      auto t = golden_roots(p);
      REQUIRE(t.size() == 2);
      for (auto x : t) CHECK((mul_mod(x, x, p) + x + p - 1) % p == 0);
    }
  }
  CHECK(golden_roots(19) == std::vector<std::uint64_t>{4, 14});
  CHECK(order_five_elements(11) == std::vector<std::uint64_t>{3, 4, 5, 9});
}

TEST_CASE("primitive roots") {
  CHECK(primitive_root(11) == 2);
  CHECK(primitive_root(31) == 3);
  for (std::uint64_t p : primes_below(500)) {
    if (p == 2) continue;
    CHECK(multiplicative_order(primitive_root(p), p) == p - 1);
  }
}
