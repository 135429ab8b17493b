#include "quintic/radicand.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>

#include "quintic/error.hpp"
#include "quintic/integer.hpp"

namespace quintic {

namespace {

std::string mod_witness(const char* label, std::uint64_t value, std::uint64_t m) {
  return std::string(label) + " mod " + std::to_string(m) + " = " + std::to_string(value % m);
}

bool minus_one_mod5(std::uint64_t p) { return p % 5 == 4; }
bool minus_one_mod25(std::uint64_t p) { return p % 25 == 24; }
bool plus_minus_two_mod5(std::uint64_t q) { return q % 5 == 2 || q % 5 == 3; }
bool plus_minus_seven_mod25(std::uint64_t q) { return q % 25 == 7 || q % 25 == 18; }

constexpr const char* kNotApplicable = "n/a (shape mismatch)";

struct Builder {
  std::vector<Check>& checks;
  bool all = true;

  bool add(std::string name, bool shape_ok, bool pass, std::string witness) {
    const bool ok = shape_ok && pass;
    checks.push_back({std::move(name), ok, shape_ok ? std::move(witness) : kNotApplicable});
    all = all && ok;
    return ok;
  }
};

// n = 5^e p
bool test_form_one(std::uint64_t n, const std::vector<nt::PrimePower>& fs,
                   std::vector<Check>& checks, RadicandForm& out) {
  const bool shape = fs.size() == 2 && fs[0].prime == 5 && fs[1].exponent == 1;
  const std::uint64_t p = shape ? fs[1].prime : 0;
  const int e = shape ? fs[0].exponent : 0;
  Builder b{checks};
  b.add("I.shape n = 5^e p", fs.size() == 2 && fs[0].prime == 5, shape,
        shape ? "e = " + std::to_string(e) + ", p = " + std::to_string(p)
              : "second prime exponent " + (fs.size() == 2 ? std::to_string(fs[1].exponent) : "?"));
  b.add("I.p = -1 (mod 5)", shape, minus_one_mod5(p), mod_witness("p", p, 5));
  b.add("I.p != -1 (mod 25)", shape, !minus_one_mod25(p), mod_witness("p", p, 25));
  b.add("I.n != +-1,+-7 (mod 25)", shape, !is_hyperprimary_mod25(n), mod_witness("n", n, 25));
  const bool bullets = shape && !minus_one_mod25(p) && !is_hyperprimary_mod25(n);
  checks.push_back({"I.introduction conditions only (no p = -1 mod 5)", bullets,
                    shape ? "p = " + std::to_string(p) : kNotApplicable});
  if (b.all) {
    out.e = e;
    out.p = p;
  }
  return b.all;
}

// n = p^e q
bool test_form_two(std::uint64_t n, const std::vector<nt::PrimePower>& fs,
                   std::vector<Check>& checks, RadicandForm& out) {
  bool shape = false;
  std::uint64_t p = 0, q = 0;
  int e = 0;
  if (fs.size() == 2) {
    // q must have exponent 1; when both do, take p = 4 (mod 5) if possible.
    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (std::size_t i = 0; i < 2; ++i) {
      if (fs[1 - i].exponent == 1) options.emplace_back(i, 1 - i);
    }
    if (!options.empty()) {
      shape = true;
      auto pick = options.front();
      for (const auto& opt : options) {
        if (minus_one_mod5(fs[opt.first].prime)) {
          pick = opt;
          break;
        }
      }
      p = fs[pick.first].prime;
      e = fs[pick.first].exponent;
      q = fs[pick.second].prime;
    }
  }
  Builder b{checks};
  b.add("II.shape n = p^e q", fs.size() == 2, shape,
        shape ? "p = " + std::to_string(p) + ", e = " + std::to_string(e) + ", q = " + std::to_string(q)
              : "no prime with exponent 1 to serve as q");
  b.add("II.p = -1 (mod 5)", shape, minus_one_mod5(p), mod_witness("p", p, 5));
  b.add("II.p != -1 (mod 25)", shape, !minus_one_mod25(p), mod_witness("p", p, 25));
  b.add("II.q = +-2 (mod 5)", shape, plus_minus_two_mod5(q), mod_witness("q", q, 5));
  b.add("II.q != +-7 (mod 25)", shape, !plus_minus_seven_mod25(q), mod_witness("q", q, 25));
  b.add("II.n = +-1,+-7 (mod 25)", shape, is_hyperprimary_mod25(n), mod_witness("n", n, 25));
  const bool bullets = shape && !minus_one_mod25(p) && !plus_minus_seven_mod25(q) &&
                       is_hyperprimary_mod25(n);
  checks.push_back({"II.introduction conditions only (no p = -1 mod 5, q = +-2 mod 5)", bullets,
                    shape ? "p = " + std::to_string(p) + ", q = " + std::to_string(q) : kNotApplicable});
  if (b.all) {
    out.e = e;
    out.p = p;
    out.q = q;
  }
  return b.all;
}

// n = p^e
bool test_form_three(std::uint64_t n, const std::vector<nt::PrimePower>& fs,
                     std::vector<Check>& checks, RadicandForm& out) {
  const bool shape = fs.size() == 1;
  const std::uint64_t p = shape ? fs[0].prime : 0;
  const int e = shape ? fs[0].exponent : 0;
  Builder b{checks};
  b.add("III.shape n = p^e", true, shape,
        shape ? "p = " + std::to_string(p) + ", e = " + std::to_string(e)
              : std::to_string(fs.size()) + " distinct primes");
  b.add("III.p = -1 (mod 25)", shape, minus_one_mod25(p), mod_witness("p", p, 25));
  b.add("III.n = +-1,+-7 (mod 25)", shape, is_hyperprimary_mod25(n), mod_witness("n", n, 25));
  checks.push_back({"III.introduction conditions only", b.all,
                    shape ? "p = " + std::to_string(p) : kNotApplicable});
  if (b.all) {
    out.e = e;
    out.p = p;
  }
  return b.all;
}

}  // namespace

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::FormI: return "FormI";
    case Verdict::FormII: return "FormII";
    case Verdict::FormIII: return "FormIII";
    case Verdict::None: return "None";
  }
  return "None";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  if (text == "I" || text == "FormI") return Verdict::FormI;
  if (text == "II" || text == "FormII") return Verdict::FormII;
  if (text == "III" || text == "FormIII") return Verdict::FormIII;
  if (text == "None") return Verdict::None;
  return std::nullopt;
}

bool is_hyperprimary_mod25(std::uint64_t n) {
  const auto r = n % 25;
  return r == 1 || r == 7 || r == 18 || r == 24;
}

bool is_fifth_power_free(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "is_fifth_power_free: n must be >= 2");
  const auto fs = nt::factor(n);
  return std::all_of(fs.begin(), fs.end(), [](const nt::PrimePower& f) { return f.exponent < 5; });
}

RadicandForm classify(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "classify: n must be >= 2");
  const auto fs = nt::factor(n);
  for (const auto& f : fs) {
    if (f.exponent >= 5) {
      throw Error(ErrorCode::NotFifthPowerFree,
                  std::to_string(f.prime) + "^5 divides " + std::to_string(n));
    }
  }
  RadicandForm out;
  out.n = n;
  // Each test fills e, p, q only when it passes.
  const bool one = test_form_one(n, fs, out.checks, out);
  const bool two = test_form_two(n, fs, out.checks, out);
  const bool three = test_form_three(n, fs, out.checks, out);
  if (one) out.verdict = Verdict::FormI;
  if (two) out.verdict = Verdict::FormII;
  if (three) out.verdict = Verdict::FormIII;
  if (static_cast<int>(one) + static_cast<int>(two) + static_cast<int>(three) > 1) {
    throw Error(ErrorCode::InternalInvariant, "radicand " + std::to_string(n) + " matches two forms");
  }
  const bool split_prime = std::any_of(fs.begin(), fs.end(),
                                       [](const nt::PrimePower& f) { return f.prime % 5 == 1; });
  out.checks.push_back({"no prime = 1 (mod 5) divides n", !split_prime,
                        split_prime ? "split prime present" : "none"});
  return out;
}

namespace {

void classify_range(std::uint64_t lo, std::uint64_t hi, std::optional<Verdict> filter,
                    std::vector<Classified>& sink) {
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (!is_fifth_power_free(n)) continue;
    RadicandForm form = classify(n);
    if (filter && form.verdict != *filter) continue;
    sink.emplace_back(n, std::move(form));
    if (n == hi) break;  // hi may be UINT64_MAX
  }
}

void check_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 2 || lo > hi) {
    throw Error(ErrorCode::RangeInvalid,
                "invalid range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

}  // namespace

std::vector<Classified> enumerate_serial(std::uint64_t lo, std::uint64_t hi,
                                         std::optional<Verdict> filter) {
  check_range(lo, hi);
  std::vector<Classified> out;
  classify_range(lo, hi, filter, out);
  return out;
}

std::vector<Classified> enumerate_parallel(std::uint64_t lo, std::uint64_t hi,
                                           std::optional<Verdict> filter, int workers) {
  check_range(lo, hi);
  constexpr std::uint64_t kBlock = 4096;
  const std::uint64_t blocks = (hi - lo) / kBlock + 1;
  std::vector<std::vector<Classified>> parts(blocks);
  std::vector<std::exception_ptr> failures(blocks);
  const int threads = std::max(1, workers);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    const std::uint64_t start = lo + static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t stop = std::min(hi, start + kBlock - 1);
    try {
      classify_range(start, stop, filter, parts[b]);
    } catch (...) {
      failures[b] = std::current_exception();
    }
  }

  for (std::uint64_t b = 0; b < blocks; ++b) {
    if (failures[b]) std::rethrow_exception(failures[b]);
  }
  std::vector<Classified> out;
  for (auto& part : parts) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace quintic
