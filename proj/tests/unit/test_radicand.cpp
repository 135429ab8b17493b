#include <doctest.h>

#include "oracles.hpp"
#include "quintic/error.hpp"
#include "quintic/integer.hpp"
#include "quintic/radicand.hpp"

using namespace quintic;

TEST_CASE("fifth-power-free") {
  CHECK_FALSE(is_fifth_power_free(32));
  CHECK(is_fifth_power_free(95));
  CHECK(is_fifth_power_free(16));
  CHECK_FALSE(is_fifth_power_free(3 * 243));
  CHECK(is_fifth_power_free(81 * 16));
}

TEST_CASE("verdict examples") {
  RadicandForm f = classify(95);
  CHECK(f.verdict == Verdict::FormI);
  CHECK(f.e == 1);
  CHECK(f.p == 19u);
  CHECK_FALSE(f.q.has_value());

  f = classify(57);
  CHECK(f.verdict == Verdict::FormII);
  CHECK(f.p == 19u);
  CHECK(f.q == 3u);
  CHECK(f.e == 1);

  f = classify(149);
  CHECK(f.verdict == Verdict::FormIII);
  CHECK(f.p == 149u);
  CHECK(f.e == 1);

  f = classify(2);
  CHECK(f.verdict == Verdict::None);
  CHECK_FALSE(f.e.has_value());
  CHECK_FALSE(f.checks.empty());
  for (const auto& c : f.checks) {
    if (c.name.rfind("I.", 0) == 0 || c.name.rfind("II.", 0) == 0 || c.name.rfind("III.", 0) == 0) {
      CHECK_FALSE(c.witness.empty());
    }
  }

  // 5^e * p with e > 1, and p^e * q
  CHECK(classify(25 * 19).verdict == Verdict::FormI);
  CHECK(classify(19 * 19 * 2).verdict == Verdict::None);
  CHECK(classify(149 * 149).verdict == Verdict::FormIII);
}

TEST_CASE("not fifth-power-free is an error") {
  try {
    classify(32);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFifthPowerFree);
  }
}

TEST_CASE("checks have a fixed shape") {
  const auto names = [](std::uint64_t n) {
    std::vector<std::string> out;
    for (const auto& c : classify(n).checks) out.push_back(c.name);
    return out;
  };
  const auto reference = names(95);
  for (std::uint64_t n : {2ULL, 57ULL, 149ULL, 11ULL, 1000ULL, 4ULL}) CHECK(names(n) == reference);
}

TEST_CASE("oracle agreement, exclusivity and the p = 1 (mod 5) rule up to 10^5") {
  for (std::uint64_t n = 2; n <= 100'000; ++n) {
    const auto expected = oracle::classify(n);
    CHECK(expected.has_value() == is_fifth_power_free(n));
    if (!expected) continue;
    const RadicandForm f = classify(n);
    CHECK(f.verdict == *expected);
    bool has_split_prime = false;
    for (const auto& [p, e] : nt::factor(n)) has_split_prime |= p % 5 == 1;
    if (has_split_prime) CHECK(f.verdict == Verdict::None);
    if (f.verdict == Verdict::FormI) CHECK(n % 5 == 0);
    if (f.verdict == Verdict::FormII || f.verdict == Verdict::FormIII) CHECK(is_hyperprimary_mod25(n));
  }
}

TEST_CASE("field invariants of each form") {
  for (std::uint64_t n = 2; n <= 20'000; ++n) {
    if (!is_fifth_power_free(n)) continue;
    const RadicandForm f = classify(n);
    std::uint64_t pe = 1;
    switch (f.verdict) {
      case Verdict::FormI:
        for (int i = 0; i < *f.e; ++i) pe *= 5;
        CHECK(pe * *f.p == n);
        CHECK(*f.p % 5 == 4);
        CHECK(*f.p % 25 != 24);
        break;
      case Verdict::FormII:
        for (int i = 0; i < *f.e; ++i) pe *= *f.p;
        CHECK(pe * *f.q == n);
        CHECK(*f.p % 5 == 4);
        CHECK((*f.q % 5 == 2 || *f.q % 5 == 3));
        CHECK(*f.q % 25 != 7);
        CHECK(*f.q % 25 != 18);
        break;
      case Verdict::FormIII:
        for (int i = 0; i < *f.e; ++i) pe *= *f.p;
        CHECK(pe == n);
        CHECK(*f.p % 25 == 24);
        break;
      case Verdict::None:
        break;
    }
  }
}

TEST_CASE("enumerate") {
  const auto form_one = enumerate_serial(2, 100, Verdict::FormI);
  CHECK(std::any_of(form_one.begin(), form_one.end(), [](const Classified& c) { return c.first == 95; }));
  const auto form_two = enumerate_serial(2, 60, Verdict::FormII);
  CHECK(std::any_of(form_two.begin(), form_two.end(), [](const Classified& c) { return c.first == 57; }));
  for (const auto& [n, f] : enumerate_serial(2, 10)) CHECK(f.verdict == Verdict::None);

  const auto all = enumerate_serial(2, 5000);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].first < all[i].first);
  CHECK(std::none_of(all.begin(), all.end(), [](const Classified& c) { return c.first == 32; }));

  for (int workers : {1, 2, 3, 8}) {
    CHECK(enumerate_parallel(2, 30'000, std::nullopt, workers) == enumerate_serial(2, 30'000));
    CHECK(enumerate_parallel(9000, 9100, Verdict::FormII, workers) ==
          enumerate_serial(9000, 9100, Verdict::FormII));
  }
  CHECK_THROWS_AS(enumerate_serial(100, 2), Error);
  CHECK_THROWS_AS(enumerate_parallel(1, 10, std::nullopt, 2), Error);
}

TEST_CASE("verdict names parse back") {
  for (Verdict v : {Verdict::FormI, Verdict::FormII, Verdict::FormIII, Verdict::None}) {
    CHECK(parse_verdict(verdict_name(v)) == v);
  }
  CHECK(parse_verdict("II") == Verdict::FormII);
  CHECK_FALSE(parse_verdict("IV").has_value());
}
