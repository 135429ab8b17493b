#pragma once

// Classification of radicands n into the three families for which the
// 5-class group of Q(n^(1/5), zeta) can be of type (5,5) with an ambiguous
// class group of rank 1. Verdicts are necessary-condition candidates only.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quintic {

enum class Verdict { FormI, FormII, FormIII, None };

std::string_view verdict_name(Verdict v) noexcept;
/// Accepts "I", "II", "III", "None" and the verdict names.
std::optional<Verdict> parse_verdict(std::string_view text);

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;

  friend bool operator==(const Check&, const Check&) = default;
};

struct RadicandForm {
  std::uint64_t n = 0;
  Verdict verdict = Verdict::None;
  std::optional<int> e;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> q;
  /// Same condition names, in the same order, for every n.
  std::vector<Check> checks;

  friend bool operator==(const RadicandForm&, const RadicandForm&) = default;
};

/// n mod 25 in {1, 7, 18, 24}.
bool is_hyperprimary_mod25(std::uint64_t n);

bool is_fifth_power_free(std::uint64_t n);

/// Throws NotFifthPowerFree, or InvalidArgument for n < 2.
RadicandForm classify(std::uint64_t n);

using Classified = std::pair<std::uint64_t, RadicandForm>;

/// Ascending n in [lo, hi], skipping n that are not fifth-power-free; with a
/// filter only matching verdicts are kept. Throws RangeInvalid unless
/// 2 <= lo <= hi.
std::vector<Classified> enumerate_serial(std::uint64_t lo, std::uint64_t hi,
                                         std::optional<Verdict> filter = {});

/// Same output as enumerate_serial, computed on `workers` OpenMP threads over
/// fixed-size blocks that are concatenated in block order.
std::vector<Classified> enumerate_parallel(std::uint64_t lo, std::uint64_t hi,
                                           std::optional<Verdict> filter,
                                           int workers);

}  // namespace quintic
