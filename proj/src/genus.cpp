#include "quintic/genus.hpp"

#include <algorithm>
#include <sstream>

#include "quintic/error.hpp"
#include "quintic/integer.hpp"

namespace quintic {

namespace {

using PeriodElement = std::array<mpz_class, 5>;  // coordinates on eta_0 .. eta_4

// Multiplication table of the periods: eta_0 * eta_d in the period basis.
struct PeriodTable {
  std::array<PeriodElement, 5> products;

  PeriodElement times_eta(const PeriodElement& a, int j) const {
    PeriodElement out{};
    for (int i = 0; i < 5; ++i) {
      if (a[i] == 0) continue;
      // eta_i * eta_j is the shift by i of eta_0 * eta_{j - i}.
      const PeriodElement& row = products[((j - i) % 5 + 5) % 5];
      for (int k = 0; k < 5; ++k) out[(k + i) % 5] += a[i] * row[k];
    }
    return out;
  }
};

PeriodTable build_period_table(std::uint64_t p, std::uint64_t g) {
  // index[x] = discrete log of x to base g, reduced mod 5
  std::vector<int> index(p, -1);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k + 1 < p; ++k) {
    index[x] = static_cast<int>(k % 5);
    x = nt::mul_mod(x, g, p);
  }
  const std::uint64_t f = (p - 1) / 5;
  const std::uint64_t g5 = nt::pow_mod(g, 5, p);
  PeriodTable table;
  std::uint64_t gd = 1;
  for (int d = 0; d < 5; ++d) {
    std::array<long, 5> counts{};
    long constant = 0;
    std::uint64_t h = 1;
    for (std::uint64_t k = 0; k < f; ++k) {
      const std::uint64_t y = (1 + nt::mul_mod(gd, h, p)) % p;
      if (y == 0) {
        constant += static_cast<long>(f);
      } else {
        ++counts[index[y]];
      }
      h = nt::mul_mod(h, g5, p);
    }
    // 1 = -(eta_0 + ... + eta_4)
    for (int k = 0; k < 5; ++k) table.products[d][k] = counts[k] - constant;
    gd = nt::mul_mod(gd, g, p);
  }
  return table;
}

// Polynomial of degree 5 over the integers given by coefficients; helpers for
// the irreducibility test over F_l.
using PolyModL = std::vector<std::uint64_t>;

void trim(PolyModL& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyModL poly_mod(PolyModL a, const PolyModL& m, std::uint64_t l) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = nt::inv_mod(m.back(), l);
  while (a.size() > dm) {
    const std::uint64_t c = nt::mul_mod(a.back(), lead_inv, l);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + l - nt::mul_mod(c, m[i], l)) % l;
    }
    trim(a);
  }
  return a;
}

PolyModL poly_mul_mod(const PolyModL& a, const PolyModL& b, const PolyModL& m, std::uint64_t l) {
  if (a.empty() || b.empty()) return {};
  PolyModL prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + nt::mul_mod(a[i], b[j], l)) % l;
  return poly_mod(std::move(prod), m, l);
}

PolyModL poly_pow_mod(PolyModL base, std::uint64_t e, const PolyModL& m, std::uint64_t l) {
  PolyModL result{1};
  base = poly_mod(std::move(base), m, l);
  while (e > 0) {
    if (e & 1) result = poly_mul_mod(result, base, m, l);
    base = poly_mul_mod(base, base, m, l);
    e >>= 1;
  }
  return result;
}

PolyModL poly_gcd(PolyModL a, PolyModL b, std::uint64_t l) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyModL r = poly_mod(a, b, l);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::string exponent_label(const std::vector<std::pair<std::string, int>>& parts) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, e] : parts) {
    if (!first) os << " ";
    os << name << "^" << e;
    first = false;
  }
  return os.str();
}

int inverse_mod5(int a) {
  for (int x = 1; x < 5; ++x) {
    if ((a * x) % 5 == 1) return x;
  }
  return 0;
}

struct NamedPrime {
  std::string name;
  CycPrime prime;
};

// Enumerate every exponent vector in {1..4}^k; the canonical representative
// of a Kummer class has leading exponent 1.
void search_generators(const std::vector<NamedPrime>& factors, bool leading_is_lambda,
                       bool hyperprimary_filter, RelativeGenus& out) {
  const std::size_t k = factors.size() + (leading_is_lambda ? 1 : 0);
  std::vector<int> exps(k, 1);
  auto names = [&](std::size_t i) {
    return leading_is_lambda ? (i == 0 ? std::string("lambda") : factors[i - 1].name) : factors[i].name;
  };
  while (true) {
    std::vector<std::pair<std::string, int>> label;
    for (std::size_t i = 0; i < k; ++i) label.emplace_back(names(i), exps[i]);
    const std::string text = exponent_label(label);
    if (exps[0] != 1) {
      const int scale = inverse_mod5(exps[0]);
      std::vector<std::pair<std::string, int>> canon;
      for (std::size_t i = 0; i < k; ++i) canon.emplace_back(names(i), exps[i] * scale % 5);
      out.rejections.push_back({text, "Kummer-equivalent to " + exponent_label(canon)});
    } else {
      KummerGenerator gen;
      gen.realization = CycInt(1);
      std::size_t offset = 0;
      if (leading_is_lambda) {
        gen.lambda_exp = exps[0];
        gen.realization *= pow(CycInt::lambda(), static_cast<unsigned>(exps[0]));
        offset = 1;
      }
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const int e = exps[i + offset];
        gen.prime_exps.emplace_back(factors[i].prime, e);
        gen.realization *= pow(factors[i].prime.element, static_cast<unsigned>(e));
      }
      if (hyperprimary_filter && hyperprimary_class(gen.realization) == Hyperprimary::None) {
        out.rejections.push_back({text, "not congruent to +-1, +-7 mod lambda^5"});
      } else {
        out.generators.push_back(std::move(gen));
      }
    }
    std::size_t i = k;
    while (i > 0 && exps[i - 1] == 4) exps[--i] = 1;
    if (i == 0) break;
    ++exps[i - 1];
  }
}

// Prime-to-5 primes of Q(zeta) above p, normalized where possible.
std::vector<CycPrime> normalized_primes_above(std::uint64_t p, std::vector<std::string>& warnings) {
  std::vector<CycPrime> out;
  for (const CycPrime& q : factor_rational_prime(p)) {
    try {
      out.push_back(primary_normalize(q));
    } catch (const Error& e) {
      warnings.push_back(std::string(error_code_name(e.code())) + ": " + e.what());
      out.push_back(q);
    }
  }
  return out;
}

CycInt rational(std::uint64_t v) { return CycInt(mpz_class(static_cast<unsigned long>(v))); }

}  // namespace

PeriodPolynomial period_polynomial(std::uint64_t p, std::optional<std::uint64_t> primitive_root) {
  if (p % 5 != 1) {
    throw Error(ErrorCode::WrongCongruenceClass, std::to_string(p) + " is not 1 mod 5");
  }
  if (p > kPeriodPrimeBound) {
    throw Error(ErrorCode::BoundExceeded,
                std::to_string(p) + " exceeds the period bound " + std::to_string(kPeriodPrimeBound));
  }
  if (!nt::is_prime(p)) throw Error(ErrorCode::CompositeInput, std::to_string(p) + " is not prime");
  const std::uint64_t g = primitive_root.value_or(nt::primitive_root(p));
  if (g % p == 0 || nt::multiplicative_order(g, p) != p - 1) {
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(g) + " is not a primitive root mod " + std::to_string(p));
  }
  const PeriodTable table = build_period_table(p, g);

  // prod_j (x - eta_j), coefficients in the period basis; 1 = (-1, ..., -1).
  std::vector<PeriodElement> poly(1);
  poly[0].fill(-1);
  for (int j = 0; j < 5; ++j) {
    std::vector<PeriodElement> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const PeriodElement scaled = table.times_eta(poly[k], j);
      for (int i = 0; i < 5; ++i) {
        next[k + 1][i] += poly[k][i];
        next[k][i] -= scaled[i];
      }
    }
    poly = std::move(next);
  }

  PeriodPolynomial out;
  out.p = p;
  for (std::size_t k = 0; k < 6; ++k) {
    const PeriodElement& c = poly[k];
    if (!std::all_of(c.begin(), c.end(), [&](const mpz_class& v) { return v == c[0]; })) {
      throw Error(ErrorCode::InternalInvariant, "period polynomial coefficient is not rational");
    }
    out.coefficients[k] = -c[0];
  }
  return out;
}

mpz_class quintic_discriminant(const std::array<mpz_class, 6>& c) {
  // Monic degree 5: disc = (-1)^10 Res(f, f') / 1 = Res(f, f').
  std::array<mpz_class, 5> d;
  for (int i = 1; i <= 5; ++i) d[i - 1] = c[i] * i;
  std::vector<std::vector<mpz_class>> syl(9, std::vector<mpz_class>(9, 0));
  for (int r = 0; r < 4; ++r)
    for (int i = 0; i <= 5; ++i) syl[r][r + i] = c[5 - i];
  for (int r = 0; r < 5; ++r)
    for (int i = 0; i <= 4; ++i) syl[4 + r][r + i] = d[4 - i];
  return bareiss_determinant(std::move(syl));
}

std::optional<std::uint64_t> irreducibility_witness(const std::array<mpz_class, 6>& coefficients,
                                                    std::uint64_t bound) {
  for (std::uint64_t l : nt::primes_below(bound)) {
    PolyModL f(6);
    for (int i = 0; i < 6; ++i) f[i] = mpz_fdiv_ui(coefficients[i].get_mpz_t(), l);
    if (f[5] == 0) continue;
    // Degree 5 is prime: irreducible iff x^(l^5) = x and gcd(x^l - x, f) = 1.
    PolyModL frob = poly_pow_mod({0, 1}, l, f, l);
    PolyModL diff = frob;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + l - 1) % l;
    if (poly_gcd(f, diff, l).size() != 1) continue;
    PolyModL x = frob;
    for (int i = 1; i < 5; ++i) x = poly_pow_mod(x, l, f, l);
    if (x == PolyModL{0, 1}) return l;
  }
  return std::nullopt;
}

AbsoluteGenus absolute_genus(std::uint64_t n) {
  AbsoluteGenus out;
  for (const auto& [p, e] : nt::factor(n)) {
    if (p % 5 != 1) continue;
    ++out.r;
    out.components.push_back(period_polynomial(p));
  }
  mpz_ui_pow_ui(out.genus_number.get_mpz_t(), 5, static_cast<unsigned long>(out.r));
  return out;
}

int count_ramified_d(std::uint64_t n) {
  int d = 0;
  for (const auto& [p, e] : nt::factor(n)) {
    if (p == 5) continue;
    d += p % 5 == 1 ? 4 : (p % 5 == 4 ? 2 : 1);
  }
  if (hyperprimary_class(rational(n)) == Hyperprimary::None) ++d;
  return d;
}

int infer_qstar(std::uint64_t n, int assumed_rank) {
  const RadicandForm form = classify(n);
  if (form.verdict == Verdict::None) {
    throw Error(ErrorCode::NotClassified, std::to_string(n) + " matches none of the three forms");
  }
  const int d = count_ramified_d(n);
  const int q = assumed_rank + 3 - d;
  if (q < 0 || q > 2) {
    throw Error(ErrorCode::QstarOutOfRange,
                "q* = " + std::to_string(q) + " for n = " + std::to_string(n) + ", d = " + std::to_string(d));
  }
  return q;
}

RelativeGenus relative_genus(std::uint64_t n) {
  const RadicandForm form = classify(n);
  RelativeGenus out;
  out.form = form.verdict;
  if (form.verdict == Verdict::None) {
    throw Error(ErrorCode::NotClassified, std::to_string(n) + " matches none of the three forms");
  }
  const auto pis = normalized_primes_above(*form.p, out.warnings);
  const std::vector<NamedPrime> both = {{"pi1", pis.at(0)}, {"pi2", pis.at(1)}};
  switch (form.verdict) {
    case Verdict::FormI:
      out.shape = "lambda^a pi1^a1 pi2^a2";
      search_generators(both, true, false, out);
      break;
    case Verdict::FormII: {
      out.shape = "q pi_i^a";
      const CycPrime q = factor_rational_prime(*form.q).front();
      for (std::size_t i = 0; i < 2; ++i) {
        search_generators({{"q", q}, both[i]}, false, true, out);
      }
      break;
    }
    case Verdict::FormIII:
      out.shape = "pi1^a1 pi2^a2";
      search_generators(both, false, true, out);
      break;
    case Verdict::None:
      break;
  }
  if (out.generators.empty()) {
    std::ostringstream os;
    os << "no admissible generator of shape " << out.shape << " for n = " << n << ":";
    for (const auto& r : out.rejections) os << " [" << r.exponents << ": " << r.reason << "]";
    throw Error(ErrorCode::NoAdmissibleGenerator, os.str());
  }
  return out;
}

CorollaryReport corollary_report(std::uint64_t n, std::optional<mpz_class> h_gamma) {
  CorollaryReport out;
  out.n = n;
  out.h_gamma = h_gamma;
  for (const auto& [p, e] : nt::factor(n)) {
    if (p % 5 == 1) ++out.r;
  }
  if (!h_gamma) {
    out.statements.push_back("no class number supplied; no conclusion");
    return out;
  }
  if (*h_gamma <= 0) throw Error(ErrorCode::InvalidArgument, "class number must be positive");
  const bool exactly_five = mpz_divisible_ui_p(h_gamma->get_mpz_t(), 5) &&
                            !mpz_divisible_ui_p(h_gamma->get_mpz_t(), 25);
  if (!exactly_five) {
    out.statements.push_back("5 does not divide h_gamma exactly; no conclusion");
    return out;
  }
  if (out.r >= 2) {
    throw Error(ErrorCode::ContradictionWitness,
                "h_gamma = " + h_gamma->get_str() + " is exactly divisible by 5 but " +
                    std::to_string(out.r) + " primes = 1 (mod 5) divide n = " + std::to_string(n) +
                    " (genus number 5^r divides h_gamma)");
  }
  if (out.r == 1) {
    out.outcome = CorollaryOutcome::SingleSplitPrime;
    out.statements = {
        "r = 1: Gamma* = Gamma_5^(1) = Gamma.M(p)",
        "each conjugate field Gamma', ..., Gamma'''' equals its genus field",
        "k.Gamma_5^(1) = k.Gamma'_5^(1) = k.Gamma''_5^(1) = k.Gamma'''_5^(1) = k.Gamma''''_5^(1) = k.M(p)",
    };
  } else {
    out.outcome = CorollaryOutcome::DistinctComposita;
    out.statements = {
        "r = 0: Gamma* = Gamma",
        "the five composita k.Gamma_5^(1), ..., k.Gamma''''_5^(1) are distinct",
    };
  }
  return out;
}

GenusReport genus_report(std::uint64_t n, int assumed_rank) {
  GenusReport out;
  out.n = n;
  for (const auto& [p, e] : nt::factor(n)) {
    if (p % 5 != 1) continue;
    ++out.r;
    try {
      out.absolute_components.push_back(period_polynomial(p));
    } catch (const Error& e) {
      out.warnings.push_back(std::string(error_code_name(e.code())) + ": " + e.what());
    }
  }
  mpz_ui_pow_ui(out.genus_number.get_mpz_t(), 5, static_cast<unsigned long>(out.r));
  out.d = count_ramified_d(n);

  // With at most two such primes the pairing h_i is forced; with three or
  // more the generator choice is not determined and is not attempted.
  std::vector<std::string> unpaired;
  for (const auto& [p, e] : nt::factor(n)) {
    if (p != 5 && !is_hyperprimary_mod25(p)) unpaired.push_back(std::to_string(p));
  }
  if (unpaired.size() >= 3) {
    std::string list;
    for (const auto& s : unpaired) list += (list.empty() ? "" : ", ") + s;
    out.warnings.push_back("primes " + list +
                           " are not hyperprimary; combining them into hyperprimary products needs "
                           "exponents h_i in {1..4} that are not determined here");
  }

  const RadicandForm form = classify(n);
  if (form.verdict == Verdict::None) {
    out.warnings.push_back("NotClassified: q* and (k/k0)* are only defined for the three forms");
    return out;
  }
  try {
    out.qstar_inferred = infer_qstar(n, assumed_rank);
    out.rank_value = out.d - 3 + *out.qstar_inferred;
  } catch (const Error& e) {
    out.warnings.push_back(std::string(error_code_name(e.code())) + ": " + e.what());
  }
  try {
    RelativeGenus rel = relative_genus(n);
    out.relative_candidates = std::move(rel.generators);
    for (auto& w : rel.warnings) out.warnings.push_back(std::move(w));
  } catch (const Error& e) {
    out.warnings.push_back(std::string(error_code_name(e.code())) + ": " + e.what());
  }
  return out;
}

}  // namespace quintic
