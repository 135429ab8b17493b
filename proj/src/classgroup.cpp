#include "quintic/classgroup.hpp"

#include <algorithm>
#include <functional>

#include "quintic/cyclo_ring.hpp"
#include "quintic/error.hpp"
#include "quintic/integer.hpp"
#include "quintic/k0_primes.hpp"
#include "quintic/residue_symbols.hpp"

namespace quintic {

const char* const kTau2CycleWarning =
    "tau^2 has order 2, so it induces an involution on K_2..K_6; a 5-cycle "
    "K2 -> K4 -> K6 -> K3 -> K5 -> K2 is not realizable. The computed permutation "
    "fixes H_1 and H_2 and swaps the remaining four lines in two transpositions.";

namespace {

int md(int x) { return ((x % kField) + kField) % kField; }

int inv5(int a) {
  for (int x = 1; x < kField; ++x) {
    if (md(a * x) == 1) return x;
  }
  throw Error(ErrorCode::InvalidArgument, "zero has no inverse in F_5");
}

std::vector<Vec2> nonzero_vectors() {
  std::vector<Vec2> out;
  for (int a = 0; a < kField; ++a)
    for (int b = 0; b < kField; ++b)
      if (a != 0 || b != 0) out.push_back({{a, b}});
  return out;
}

bool is_zero(const Vec2& v) { return v.v[0] == 0 && v.v[1] == 0; }

Vec2 add(const Vec2& a, const Vec2& b) { return {{md(a.v[0] + b.v[0]), md(a.v[1] + b.v[1])}}; }
Vec2 scale(int s, const Vec2& a) { return {{md(s * a.v[0]), md(s * a.v[1])}}; }

// Line ker(M) for a rank-one M.
std::optional<Line> kernel_line(const Mat2& m) {
  if (m.kernel_dimension() != 1) return std::nullopt;
  for (const Vec2& v : nonzero_vectors()) {
    if (is_zero(m * v)) return Line::spanned_by(v);
  }
  return std::nullopt;
}

Line require_line(std::optional<Line> l, const char* what) {
  if (!l) throw Error(ErrorCode::InvalidModel, std::string(what) + " is not a line");
  return *l;
}

std::optional<Line> image_line(const Mat2& m) {
  if (m.kernel_dimension() != 1) return std::nullopt;
  for (int c = 0; c < 2; ++c) {
    Vec2 col{{m.m[0][c], m.m[1][c]}};
    if (!is_zero(col)) return Line::spanned_by(col);
  }
  return std::nullopt;
}

bool is_order_five(const Mat2& m) { return m != Mat2::identity() && m.pow(5) == Mat2::identity(); }

}  // namespace

int Mat2::det() const { return md(m[0][0] * m[1][1] - m[0][1] * m[1][0]); }

Mat2 Mat2::inverse() const {
  const int d = det();
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "singular matrix");
  const int di = inv5(d);
  return {{{{md(di * m[1][1]), md(-di * m[0][1])}, {md(-di * m[1][0]), md(di * m[0][0])}}}};
}

Mat2 Mat2::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Mat2 result = identity();
  for (int i = 0; i < e; ++i) result = result * *this;
  return result;
}

int Mat2::kernel_dimension() const {
  if (det() != 0) return 0;
  for (const auto& row : m)
    for (int v : row)
      if (v != 0) return 1;
  return 2;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.m[i][j] = md(a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j]);
  return out;
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.m[i][j] = md(a.m[i][j] + b.m[i][j]);
  return out;
}

Mat2 operator-(const Mat2& a, const Mat2& b) { return a + (-1) * b; }

Mat2 operator*(int s, const Mat2& a) {
  Mat2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.m[i][j] = md(s * a.m[i][j]);
  return out;
}

Vec2 operator*(const Mat2& a, const Vec2& x) {
  return {{md(a.m[0][0] * x.v[0] + a.m[0][1] * x.v[1]), md(a.m[1][0] * x.v[0] + a.m[1][1] * x.v[1])}};
}

Line Line::spanned_by(Vec2 v) {
  if (v.v[0] != 0) return {scale(inv5(v.v[0]), v)};
  if (v.v[1] != 0) return {scale(inv5(v.v[1]), v)};
  throw Error(ErrorCode::InvalidArgument, "the zero vector spans no line");
}

bool Line::contains(Vec2 v) const { return is_zero(v) || spanned_by(v) == *this; }

std::string Line::to_string() const {
  return "span(" + std::to_string(generator.v[0]) + "," + std::to_string(generator.v[1]) + ")";
}

std::array<Line, 6> all_lines() {
  std::array<Line, 6> out;
  out[0] = {{{1, 0}}};
  out[1] = {{{0, 1}}};
  for (int c = 1; c <= 4; ++c) out[1 + c] = {{{1, c}}};
  return out;
}

std::vector<Mat2> general_linear_group() {
  std::vector<Mat2> out;
  for (int a = 0; a < kField; ++a)
    for (int b = 0; b < kField; ++b)
      for (int c = 0; c < kField; ++c)
        for (int d = 0; d < kField; ++d) {
          Mat2 m{{{{a, b}, {c, d}}}};
          if (m.invertible()) out.push_back(m);
        }
  return out;
}

std::optional<std::string> model_violation(const Mat2& sigma, const Mat2& tau) {
  const Mat2 id = Mat2::identity();
  if (!sigma.invertible() || !tau.invertible()) return "singular matrix";
  if (sigma.pow(5) != id) return "S^5 != I";
  if (sigma == id) return "S = I (ambiguous rank 2)";
  if (tau.pow(4) != id) return "T^4 != I";
  if (tau * sigma * tau.inverse() != sigma * sigma) return "T S T^-1 != S^2";
  const Mat2 t2 = tau * tau;
  if ((t2 - id).kernel_dimension() != 1 || (t2 + id).kernel_dimension() != 1) {
    return "T^2 lacks distinct eigenvalues +1 and -1";
  }
  return std::nullopt;
}

ClassGroupModel ClassGroupModel::make(const Mat2& sigma, const Mat2& tau) {
  if (auto why = model_violation(sigma, tau)) throw Error(ErrorCode::InvalidModel, *why);
  return {sigma, tau};
}

ClassGroupModel canonical_model() {
  return ClassGroupModel::make({{{{1, 1}, {0, 1}}}}, Mat2::diagonal(1, 3));
}

Line ambiguous_subgroup(const ClassGroupModel& m) {
  return require_line(kernel_line(m.sigma - Mat2::identity()), "ker(S - I)");
}

Line principal_genus(const ClassGroupModel& m) {
  return require_line(image_line(m.sigma - Mat2::identity()), "im(S - I)");
}

Line plus_line(const ClassGroupModel& m) {
  return require_line(kernel_line(m.tau * m.tau - Mat2::identity()), "ker(T^2 - I)");
}

Line minus_line(const ClassGroupModel& m) {
  return require_line(kernel_line(m.tau * m.tau + Mat2::identity()), "ker(T^2 + I)");
}

SubgroupLattice subgroup_lattice(const ClassGroupModel& m) {
  const Line h1 = ambiguous_subgroup(m);
  const Line h2 = minus_line(m);
  if (h1 == h2) throw Error(ErrorCode::InvalidModel, "ambiguous line equals the (-1)-eigenline of T^2");
  SubgroupLattice out;
  out.subgroups[0] = h1;
  out.subgroups[1] = h2;
  for (int c = 1; c <= 4; ++c) {
    out.subgroups[1 + c] = Line::spanned_by(add(h1.generator, scale(c, h2.generator)));
  }
  return out;
}

std::array<int, 6> tau2_permutation(const ClassGroupModel& m, const SubgroupLattice& lattice) {
  const Mat2 t2 = m.tau * m.tau;
  std::array<int, 6> perm{};
  for (std::size_t i = 0; i < 6; ++i) {
    const Line image = Line::spanned_by(t2 * lattice.subgroups[i].generator);
    const auto it = std::find(lattice.subgroups.begin(), lattice.subgroups.end(), image);
    if (it == lattice.subgroups.end()) throw Error(ErrorCode::InternalInvariant, "image line missing");
    perm[i] = static_cast<int>(it - lattice.subgroups.begin()) + 1;
  }
  return perm;
}

std::vector<int> cycle_type(const std::array<int, 6>& perm) {
  std::array<bool, 6> seen{};
  std::vector<int> out;
  for (int i = 0; i < 6; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j] - 1) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

RankCheck brute_force_rank_check() {
  RankCheck out;
  for (const Mat2& m : general_linear_group()) {
    if (!is_order_five(m)) continue;
    ++out.order_five_count;
    if ((m - Mat2::identity()).kernel_dimension() == 1) ++out.rank_one_count;
  }
  out.identity_has_rank_two = (Mat2::identity() - Mat2::identity()).kernel_dimension() == 2;
  out.pass = out.order_five_count == 24 && out.rank_one_count == 24 && out.identity_has_rank_two;
  return out;
}

ModelSurvey exhaustive_model_survey() {
  ModelSurvey out;
  const auto group = general_linear_group();
  for (const Mat2& s : group) {
    for (const Mat2& t : group) {
      ++out.pairs_examined;
      if (model_violation(s, t)) continue;
      ++out.valid_models;
      const ClassGroupModel model{s, t};
      const Mat2 n = s - Mat2::identity();
      if (n.kernel_dimension() != 1) continue;
      ++out.ambiguous_rank_one;
      const Line ker = ambiguous_subgroup(model);
      const Line img = principal_genus(model);
      const Line plus = plus_line(model);
      const bool ker_img = ker == img;
      const bool triple = ker_img && ker == plus;
      if (ker_img) ++out.kernel_equals_image;
      if (triple) ++out.triple_equality;
      if (t * ker.generator == ker.generator) {
        ++out.tau_fixes_ambiguous;
        if (triple) ++out.triple_given_tau_fixes;
      }
      if (!triple && !out.counterexample) out.counterexample = model;
    }
  }
  return out;
}

IdentityCheck ambiguity_identity_check() {
  IdentityCheck out;
  const Mat2 id = Mat2::identity();
  for (const Mat2& s : general_linear_group()) {
    if (!is_order_five(s)) continue;
    const Mat2 op = s.pow(3) + 3 * s.pow(2) + 2 * s - id;
    for (int a = 0; a < kField; ++a)
      for (int b = 0; b < kField; ++b) {
        ++out.cases;
        const Vec2 w = op * Vec2{{a, b}};
        if (!is_zero((s - id) * w)) ++out.failures;
      }
  }
  return out;
}

std::vector<CapitulationType> enumerate_capitulation_types(const CapitulationConstraints& c) {
  // An entry in {0..6} always names a nontrivial kernel: the whole group (0)
  // or a single subgroup H_i.
  auto kernel_nontrivial = [](int entry) { return entry >= 0 && entry <= 6; };
  std::vector<CapitulationType> out;
  CapitulationType t{};
  std::function<void(int)> rec = [&](int pos) {
    if (pos == 6) {
      if (c.hilbert94 && !std::all_of(t.begin(), t.end(), kernel_nontrivial)) return;
      if (c.ambiguous_capitulates &&
          !std::all_of(t.begin(), t.end(), [](int e) { return e == 0 || e == 1; })) {
        return;
      }
      if (c.uniform_tail && !std::all_of(t.begin() + 2, t.end(), [&](int e) { return e == t[1]; })) return;
      out.push_back(t);
      return;
    }
    for (int v = 0; v <= 6; ++v) {
      t[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

std::string_view certificate_status_name(CertificateStatus s) noexcept {
  switch (s) {
    case CertificateStatus::Applicable: return "Applicable";
    case CertificateStatus::ConditionFailed: return "ConditionFailed";
    case CertificateStatus::NoWitnessFound: return "NoWitnessFound";
  }
  return "ConditionFailed";
}

namespace {

ResidueCondition non_residue_condition(long long a, std::uint64_t p) {
  ResidueCondition out;
  out.condition = std::to_string(a) + " is not a quintic residue modulo " + std::to_string(p);
  try {
    const bool residue = is_quintic_residue_mod_p(a, p);
    const CycPrime q = factor_rational_prime(p).front();
    out.symbol = quintic_symbol(CycInt(a), q);
    out.pass = !residue;
  } catch (const Error& e) {
    out.condition += " (" + std::string(error_code_name(e.code())) + ")";
    out.pass = false;
  }
  return out;
}

}  // namespace

GeneratorCertificate generator_certificate(std::uint64_t n, const RadicandForm& form) {
  if (form.verdict == Verdict::None) {
    throw Error(ErrorCode::NotClassified, std::to_string(n) + " matches none of the three forms");
  }
  GeneratorCertificate out;
  out.n = n;
  out.form = form.verdict;
  const std::uint64_t p = *form.p;
  const std::string ps = std::to_string(p);

  long long fixed = 5;
  std::vector<std::uint64_t> excluded = {5, p};
  if (form.verdict == Verdict::FormII) {
    fixed = static_cast<long long>(*form.q);
    excluded = {p, *form.q};
  }
  out.residue_conditions.push_back(non_residue_condition(fixed, p));
  const bool fixed_ok = out.residue_conditions.back().pass;

  bool witness_ok = true;
  if (form.verdict == Verdict::FormIII) {
    out.generators = {"[B_i]", "[B_j], i != j in {1..5}"};
    out.splitting = "5 O_k = B_1^4 B_2^4 B_3^4 B_4^4 B_5^4";
  } else {
    out.generators = {"[P_1]", "[L]^(1 - tau^2), L a prime of k above l"};
    out.splitting = ps + " O_k = P_1^5 P_2^5";
    witness_ok = false;
    for (std::uint64_t l : nt::primes_below(kWitnessSearchBound + 1)) {
      if (std::find(excluded.begin(), excluded.end(), l) != excluded.end()) continue;
      if (!is_quintic_residue_mod_p(static_cast<long long>(l), p)) {
        out.auxiliary_prime = l;
        witness_ok = true;
        break;
      }
    }
    if (witness_ok) {
      out.residue_conditions.push_back(non_residue_condition(static_cast<long long>(*out.auxiliary_prime), p));
    } else {
      out.residue_conditions.push_back({"some prime l <= " + std::to_string(kWitnessSearchBound) +
                                            " is not a quintic residue modulo " + ps,
                                        std::nullopt, false});
    }
  }

  if (p % 5 == 4) {
    out.warnings.push_back(
        "for p = -1 (mod 5) every rational integer prime to p is a fifth power in F_p and in "
        "F_{p^2}; symbols are taken at a prime of Q(zeta) above p, where they are identically 0");
  }
  if (!fixed_ok) {
    out.status = CertificateStatus::ConditionFailed;
  } else if (!witness_ok) {
    out.status = CertificateStatus::NoWitnessFound;
  } else {
    out.status = CertificateStatus::Applicable;
  }
  return out;
}

}  // namespace quintic
