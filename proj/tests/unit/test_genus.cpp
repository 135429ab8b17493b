#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "quintic/error.hpp"
#include "quintic/genus.hpp"
#include "quintic/integer.hpp"

using namespace quintic;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInvariant;
}

using Coeffs = std::array<mpz_class, 6>;

Coeffs coeffs(std::initializer_list<long> low_first) {
  Coeffs c;
  std::size_t i = 0;
  for (long v : low_first) c[i++] = v;
  return c;
}

CycInt realize(const KummerGenerator& g) {
  CycInt w = pow(CycInt::lambda(), static_cast<unsigned>(g.lambda_exp));
  for (const auto& [q, e] : g.prime_exps) w *= pow(q.element, static_cast<unsigned>(e));
  return w;
}

// Exponent vectors up to scaling by j in {1..4} mod 5.
std::pair<std::vector<std::string>, std::vector<int>> kummer_class(const KummerGenerator& g) {
  std::vector<std::string> primes;
  std::vector<int> v = {g.lambda_exp};
  for (const auto& pe : g.prime_exps) {
    primes.push_back(pe.first.element.to_string());
    v.push_back(pe.second);
  }
  std::vector<int> best;
  for (int j = 1; j < 5; ++j) {
    std::vector<int> s;
    for (int x : v) s.push_back(x * j % 5);
    if (best.empty() || s < best) best = s;
  }
  return {primes, best};
}

}  // namespace

TEST_CASE("period polynomial of 11") {
  const PeriodPolynomial f = period_polynomial(11);
  CHECK(f.p == 11);
  CHECK(f.coefficients == coeffs({1, 3, -3, -4, 1, 1}));
  CHECK(quintic_discriminant(f.coefficients) == 14641);
  CHECK(f.coefficients == oracle::period_polynomial(11, 2));
}

TEST_CASE("period polynomials against the length-p oracle") {
  for (std::uint64_t p : nt::primes_below(1200)) {
    if (p % 5 != 1) continue;
    const PeriodPolynomial f = period_polynomial(p);
    CHECK(f.coefficients == oracle::period_polynomial(p, nt::primitive_root(p)));
    CHECK(f.coefficients[5] == 1);
    CHECK(f.coefficients[4] == 1);
    // A different primitive root gives the same polynomial.
    for (std::uint64_t g = 2; g < p; ++g) {
      if (g != nt::primitive_root(p) && nt::multiplicative_order(g, p) == p - 1) {
        CHECK(period_polynomial(p, g) == f);
        break;
      }
    }
  }
}

TEST_CASE("discriminant is p^4 times a square") {
  for (std::uint64_t p : nt::primes_below(2000)) {
    if (p % 5 != 1) continue;
    const mpz_class d = quintic_discriminant(period_polynomial(p).coefficients);
    mpz_class p4;
    mpz_ui_pow_ui(p4.get_mpz_t(), p, 4);
    REQUIRE(d % p4 == 0);
    const mpz_class index2 = d / p4;
    CHECK(mpz_perfect_square_p(index2.get_mpz_t()));
  }
  // The index is not always 1.
  CHECK(quintic_discriminant(period_polynomial(31).coefficients) == mpz_class(25) * 31 * 31 * 31 * 31);
}

TEST_CASE("discriminant of known quintics") {
  // x^5 - 1 has discriminant 5^5
  CHECK(quintic_discriminant(coeffs({-1, 0, 0, 0, 0, 1})) == 3125);
  // x^5 - x - 1 has discriminant 2869 = 19 * 151
  CHECK(quintic_discriminant(coeffs({-1, -1, 0, 0, 0, 1})) == 2869);
}

TEST_CASE("irreducibility witness") {
  for (std::uint64_t p : nt::primes_below(200)) {
    if (p % 5 == 1) CHECK(irreducibility_witness(period_polynomial(p).coefficients).has_value());
  }
  CHECK(irreducibility_witness(coeffs({-1, -1, 0, 0, 0, 1})).has_value());
  // (x - 1)(x^4 + x^3 + x^2 + x + 1) and (x^2 + 1)(x^3 + 2) are reducible.
  CHECK_FALSE(irreducibility_witness(coeffs({-1, 0, 0, 0, 0, 1})).has_value());
  CHECK_FALSE(irreducibility_witness(coeffs({2, 0, 2, 1, 0, 1})).has_value());
}

TEST_CASE("period polynomial errors") {
  CHECK(code_of([] { period_polynomial(19); }) == ErrorCode::WrongCongruenceClass);
  CHECK(code_of([] { period_polynomial(100'151); }) == ErrorCode::BoundExceeded);
  CHECK(code_of([] { period_polynomial(21); }) == ErrorCode::CompositeInput);
  CHECK(code_of([] { period_polynomial(11, 3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("absolute genus") {
  AbsoluteGenus g = absolute_genus(95);
  CHECK(g.r == 0);
  CHECK(g.genus_number == 1);
  g = absolute_genus(11);
  CHECK(g.r == 1);
  REQUIRE(g.components.size() == 1);
  CHECK(g.components[0] == period_polynomial(11));
  g = absolute_genus(341);
  CHECK(g.r == 2);
  CHECK(g.genus_number == 25);
}

TEST_CASE("ramified primes and q*") {
  CHECK(count_ramified_d(95) == 3);
  CHECK(count_ramified_d(57) == 3);
  CHECK(count_ramified_d(149) == 2);
  CHECK(infer_qstar(95) == 1);
  CHECK(infer_qstar(57) == 1);
  CHECK(infer_qstar(149) == 2);
  CHECK(code_of([] { infer_qstar(2); }) == ErrorCode::NotClassified);
  CHECK(code_of([] { infer_qstar(95, 3); }) == ErrorCode::QstarOutOfRange);
}

TEST_CASE("rank formula over all classified n up to 10^5") {
  for (const auto& [n, form] : enumerate_serial(2, 100'000)) {
    if (form.verdict == Verdict::None) continue;
    const int d = count_ramified_d(n);
    const int expected_d = form.verdict == Verdict::FormIII ? 2 : 3;
    CHECK(d == expected_d);
    CHECK(infer_qstar(n) == 4 - expected_d);
  }
}

TEST_CASE("relative genus generators") {
  for (std::uint64_t n : {95ULL, 57ULL, 149ULL, 25ULL * 29ULL, 29ULL * 17ULL, 449ULL}) {
    INFO("n = " << n);
    const RelativeGenus rel = relative_genus(n);
    REQUIRE_FALSE(rel.generators.empty());
    std::set<std::pair<std::vector<std::string>, std::vector<int>>> classes;
    for (const auto& g : rel.generators) {
      CHECK(realize(g) == g.realization);
      for (const auto& pe : g.prime_exps) CHECK((pe.second >= 1 && pe.second <= 4));
      if (rel.form == Verdict::FormI) {
        CHECK((g.lambda_exp >= 1 && g.lambda_exp <= 4));
      } else {
        CHECK(g.lambda_exp == 0);
        CHECK(hyperprimary_class(g.realization) != Hyperprimary::None);
      }
      CHECK(classes.insert(kummer_class(g)).second);
    }
  }
  CHECK(relative_genus(95).shape == "lambda^a pi1^a1 pi2^a2");
  CHECK(relative_genus(57).shape == "q pi_i^a");
  CHECK(relative_genus(149).shape == "pi1^a1 pi2^a2");
  CHECK(relative_genus(95).generators.size() == 16);
  CHECK(relative_genus(149).generators.size() == 4);
  for (const auto& g : relative_genus(57).generators) {
    REQUIRE(g.prime_exps.size() == 2);
    CHECK(g.prime_exps[0].first.rational_prime == 3);
    CHECK(g.prime_exps[1].first.rational_prime == 19);
  }
  CHECK(code_of([] { relative_genus(2); }) == ErrorCode::NotClassified);
}

TEST_CASE("corollary report") {
  CorollaryReport r = corollary_report(95, mpz_class(5));
  CHECK(r.r == 0);
  CHECK(r.outcome == CorollaryOutcome::DistinctComposita);
  r = corollary_report(11, mpz_class(5));
  CHECK(r.outcome == CorollaryOutcome::SingleSplitPrime);
  CHECK(code_of([] { corollary_report(341, mpz_class(5)); }) == ErrorCode::ContradictionWitness);
  CHECK(corollary_report(341, mpz_class(25)).outcome == CorollaryOutcome::NoHypothesis);
  CHECK(corollary_report(341, std::nullopt).outcome == CorollaryOutcome::NoHypothesis);
}

TEST_CASE("genus report") {
  GenusReport g = genus_report(149);
  CHECK(g.d == 2);
  CHECK(g.qstar_inferred == 2);
  CHECK(g.rank_value == 1);
  CHECK(g.genus_number == 1);
  g = genus_report(95);
  CHECK(g.d == 3);
  CHECK(g.qstar_inferred == 1);
  CHECK(g.rank_value == g.d - 3 + *g.qstar_inferred);
  g = genus_report(11);
  CHECK(g.r == 1);
  CHECK(g.genus_number == 5);
  CHECK_FALSE(g.qstar_inferred.has_value());
  // The pairing warning appears only with three or more non-hyperprimary primes.
  auto has_pairing_warning = [](const GenusReport& rep) {
    return std::any_of(rep.warnings.begin(), rep.warnings.end(),
                       [](const std::string& w) { return w.find("h_i") != std::string::npos; });
  };
  CHECK(has_pairing_warning(genus_report(2 * 3 * 13)));
  CHECK_FALSE(has_pairing_warning(genus_report(57)));
  CHECK_FALSE(has_pairing_warning(genus_report(95)));
}
