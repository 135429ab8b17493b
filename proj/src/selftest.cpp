#include "quintic/selftest.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "quintic/classgroup.hpp"
#include "quintic/cyclo_ring.hpp"
#include "quintic/error.hpp"
#include "quintic/genus.hpp"
#include "quintic/integer.hpp"
#include "quintic/k0_primes.hpp"
#include "quintic/radicand.hpp"
#include "quintic/residue_symbols.hpp"

namespace quintic {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) {
      ++result_.failures;
      // Only the first few failures are spelled out.
      if (result_.failures <= 5) result_.notes.push_back("FAILED: " + what);
    }
  }
  void note(std::string text) { result_.notes.push_back(std::move(text)); }
  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

mpz_class random_coefficient(std::mt19937_64& rng, int words) {
  mpz_class v = 0;
  for (int i = 0; i < words; ++i) {
    v <<= 64;
    v += mpz_class(std::to_string(rng()));
  }
  return (rng() & 1) ? mpz_class(-v) : v;
}

CycInt random_cycint(std::mt19937_64& rng, int words) {
  CycInt::Coefficients c;
  for (auto& x : c) x = random_coefficient(rng, words);
  return CycInt(c);
}

// Residue field element with basis 1, zeta (f <= 2) back to Z[zeta].
CycInt lift(const ResidueField::Element& x) {
  CycInt out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out += CycInt(static_cast<long>(x[i])) * pow(CycInt::zeta(), static_cast<unsigned>(i));
  }
  return out;
}

SuiteResult ring_suite(bool fault) {
  Tally t("ring");
  std::mt19937_64 rng(20250101);
  for (int i = 0; i < 2000; ++i) {
    CycInt a = random_cycint(rng, 1);
    CycInt b = random_cycint(rng, 1);
    if (b.is_zero()) continue;
    mpz_class na = norm(a);
    if (fault) na += 1;
    t.expect(na * norm(b) == norm(a * b), "norm multiplicativity");
    t.expect(norm(a) == oracle::norm_by_resultant(a), "norm versus resultant");
    DivMod dm = euclid_divmod(a, b);
    t.expect(dm.quotient * b + dm.remainder == a, "a = q b + r");
    t.expect(norm(dm.remainder) < norm(b), "norm(r) < norm(b)");
    auto digit = [&rng] { return static_cast<long>(rng() % 41) - 20; };
    CycInt small(digit(), digit(), digit(), digit());
    CycInt x = small * pow(CycInt::lambda(), static_cast<unsigned>(rng() % 6));
    if (!x.is_zero()) {
      t.expect(lambda_valuation(x) == oracle::lambda_valuation_naive(x), "lambda valuation");
    }
  }
  return t.take();
}

SuiteResult primes_suite(bool fault) {
  Tally t("primes");
  for (std::uint64_t p : nt::primes_below(2000)) {
    auto primes = factor_rational_prime(p);
    const int g = static_cast<int>(primes.size());
    CycInt product(1L);
    for (const auto& q : primes) {
      t.expect(q.ramification * q.residue_degree * g == 4, "e f g = 4 at " + std::to_string(p));
      mpz_class expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), p, static_cast<unsigned long>(q.residue_degree));
      t.expect(norm(q.element) == expected, "norm(pi) = p^f at " + std::to_string(p));
      product *= pow(q.element, static_cast<unsigned>(q.ramification));
    }
    if (fault) product += CycInt(1L);
    auto quotient = exact_divide(CycInt(static_cast<long>(p)), product);
    t.expect(quotient && is_unit(*quotient), "unit * product = p at " + std::to_string(p));
    const std::uint64_t r = p % 5;
    const int expected_g = p == 5 ? 1 : r == 1 ? 4 : r == 4 ? 2 : 1;
    t.expect(g == expected_g, "splitting pattern at " + std::to_string(p));
  }
  return t.take();
}

SuiteResult symbols_suite(bool fault) {
  Tally t("symbols");
  for (std::uint64_t p : nt::primes_below(60)) {
    if (p == 5 || p % 5 == 2 || p % 5 == 3) continue;
    for (const auto& q : factor_rational_prime(p)) {
      const ResidueField field(q);
      const FifthPowerTable table(field);
      const std::uint64_t size = mpz_class(field.order()).get_ui();
      for (std::uint64_t idx = 1; idx < size; ++idx) {
        CycInt a = lift(field.from_index(idx));
        int fast = quintic_symbol(a, field);
        if (fault) fast = (fast + 1) % 5;
        t.expect(fast == table.symbol(a), "symbol of " + a.to_string() + " at " + q.element.to_string());
      }
    }
  }
  t.expect(is_quintic_residue_mod_p(32, 11), "32 is a fifth power mod 11");
  t.expect(!is_quintic_residue_mod_p(3, 11), "3 is not a fifth power mod 11");
  return t.take();
}

SuiteResult classifier_suite(bool fault) {
  Tally t("classifier");
  constexpr std::uint64_t kLimit = 20'000;
  long agreeing = 0;
  for (std::uint64_t n = 2; n <= kLimit; ++n) {
    auto expected = oracle::classify(n);
    if (!expected) {
      t.expect(!is_fifth_power_free(n), "fifth-power detection at " + std::to_string(n));
      continue;
    }
    Verdict got = classify(n).verdict;
    if (fault && n == 95) got = Verdict::None;
    const bool ok = got == *expected;
    agreeing += ok;
    t.expect(ok, "verdict of " + std::to_string(n));
  }
  t.note(std::to_string(agreeing) + " radicands up to " + std::to_string(kLimit) + " agree with the oracle");
  t.expect(classify(95).verdict == Verdict::FormI, "95 is Form I");
  t.expect(classify(57).verdict == Verdict::FormII, "57 is Form II");
  t.expect(classify(149).verdict == Verdict::FormIII, "149 is Form III");
  t.expect(classify(2).verdict == Verdict::None, "2 has no form");
  return t.take();
}

// disc(f) = [O : Z[eta]]^2 * disc(M(p)) and disc(M(p)) = p^4.
bool is_p4_times_square(const mpz_class& disc, std::uint64_t p) {
  mpz_class p4;
  mpz_ui_pow_ui(p4.get_mpz_t(), p, 4);
  if (disc <= 0 || disc % p4 != 0) return false;
  const mpz_class index2 = disc / p4;
  return mpz_perfect_square_p(index2.get_mpz_t()) != 0;
}

SuiteResult periods_suite(bool fault) {
  Tally t("periods");
  for (std::uint64_t p : nt::primes_below(200)) {
    if (p % 5 != 1) continue;
    const std::string at = " at " + std::to_string(p);
    PeriodPolynomial poly = period_polynomial(p);
    if (fault) poly.coefficients[0] += 1;
    const std::uint64_t g = nt::primitive_root(p);
    t.expect(poly.coefficients == oracle::period_polynomial(p, g), "length-p oracle" + at);
    t.expect(poly.coefficients[4] == 1 && poly.coefficients[5] == 1, "x^4 coefficient is 1" + at);
    t.expect(irreducibility_witness(poly.coefficients).has_value(), "irreducible" + at);
    t.expect(is_p4_times_square(quintic_discriminant(poly.coefficients), p), "discriminant is p^4 times a square" + at);
    // Another primitive root: g^7 when gcd(7, p - 1) = 1, else g^11 etc.
    for (std::uint64_t k = 7; k < p; k += 2) {
      if (std::gcd(k, p - 1) != 1) continue;
      const std::uint64_t h = nt::pow_mod(g, k, p);
      t.expect(period_polynomial(p, h) == poly, "independent of the primitive root" + at);
      break;
    }
  }
  return t.take();
}

SuiteResult capitulation_suite(bool fault) {
  Tally t("capitulation");
  RankCheck rank = brute_force_rank_check();
  t.expect(rank.pass, "order-5 matrices have a one-dimensional fixed space");

  ModelSurvey s = exhaustive_model_survey();
  t.expect(s.valid_models > 0, "valid models exist");
  t.expect(s.ambiguous_rank_one == s.valid_models, "rank of the ambiguous subgroup is 1");
  t.expect(s.kernel_equals_image == s.valid_models, "ker(S - I) = im(S - I)");
  t.expect(s.triple_given_tau_fixes == s.tau_fixes_ambiguous,
           "fixed line of T^2 is the principal genus when T fixes it pointwise");
  t.note(std::to_string(s.valid_models) + " valid models, " + std::to_string(s.triple_equality) +
         " with fixed line of T^2 equal to the principal genus, " +
         std::to_string(s.tau_fixes_ambiguous) + " with T trivial on ker(S - I)");

  IdentityCheck id = ambiguity_identity_check();
  t.expect(id.failures == 0, "S^3 + 3S^2 + 2S - I maps into the ambiguous subgroup");

  auto types = enumerate_capitulation_types();
  std::vector<CapitulationType> expected = {
      {0, 0, 0, 0, 0, 0}, {0, 1, 1, 1, 1, 1}, {1, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1}};
  if (fault) types.pop_back();
  t.expect(types == expected, "four admissible capitulation types");
  CapitulationConstraints loose;
  loose.uniform_tail = false;
  t.expect(enumerate_capitulation_types(loose).size() > types.size(), "dropping uniformity enlarges the set");

  const ClassGroupModel m = canonical_model();
  const auto lattice = subgroup_lattice(m);
  const auto perm = tau2_permutation(m, lattice);
  t.expect(perm[0] == 1 && perm[1] == 2, "tau^2 fixes H1 and H2");
  auto cycles = cycle_type(perm);
  std::sort(cycles.begin(), cycles.end());
  t.expect(cycles == std::vector<int>{1, 1, 2, 2}, "tau^2 is two transpositions");
  return t.take();
}

}  // namespace

const std::vector<std::string>& selftest_suite_names() {
  static const std::vector<std::string> kNames = {"ring",       "primes",  "symbols",
                                                  "classifier", "periods", "capitulation"};
  return kNames;
}

SuiteResult run_selftest_suite(const std::string& name, const SelftestOptions& options) {
  const bool fault = options.inject_fault && *options.inject_fault == name;
  if (name == "ring") return ring_suite(fault);
  if (name == "primes") return primes_suite(fault);
  if (name == "symbols") return symbols_suite(fault);
  if (name == "classifier") return classifier_suite(fault);
  if (name == "periods") return periods_suite(fault);
  if (name == "capitulation") return capitulation_suite(fault);
  throw Error(ErrorCode::InvalidArgument, "unknown selftest suite '" + name + "'");
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
  const auto& names = selftest_suite_names();
  if (options.inject_fault &&
      std::find(names.begin(), names.end(), *options.inject_fault) == names.end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown fault target '" + *options.inject_fault + "'");
  }
  std::vector<SuiteResult> out;
  if (options.suite) {
    out.push_back(run_selftest_suite(*options.suite, options));
    return out;
  }
  for (const auto& name : names) out.push_back(run_selftest_suite(name, options));
  return out;
}

}  // namespace quintic
