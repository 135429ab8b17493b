#pragma once

// F_5-linear model of a 5-class group of type (5,5) with the actions of
// sigma (generator of Gal(k/k0)) and tau (generator of Gal(k/Gamma)).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quintic/radicand.hpp"

namespace quintic {

inline constexpr int kField = 5;

struct Vec2 {
  std::array<int, 2> v{};

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct Mat2 {
  std::array<std::array<int, 2>, 2> m{};

  static Mat2 identity() { return {{{{1, 0}, {0, 1}}}}; }
  static Mat2 diagonal(int a, int b) { return {{{{a, 0}, {0, b}}}}; }

  int det() const;
  bool invertible() const { return det() != 0; }
  Mat2 inverse() const;
  Mat2 pow(int e) const;
  /// Dimension of ker(M) over F_5: 0, 1 or 2.
  int kernel_dimension() const;

  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend Mat2 operator+(const Mat2& a, const Mat2& b);
  friend Mat2 operator-(const Mat2& a, const Mat2& b);
  friend Mat2 operator*(int s, const Mat2& a);
  friend Vec2 operator*(const Mat2& a, const Vec2& x);
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// A one-dimensional subspace, stored by its normalized generator
/// ((1, c) or (0, 1)).
struct Line {
  Vec2 generator;

  static Line spanned_by(Vec2 v);  // v != 0
  bool contains(Vec2 v) const;
  std::string to_string() const;

  friend bool operator==(const Line&, const Line&) = default;
};

/// The six lines of F_5^2: span(1,0), span(0,1), span(1,c) for c = 1..4.
std::array<Line, 6> all_lines();

/// Every matrix in GL_2(F_5) (480 of them).
std::vector<Mat2> general_linear_group();

/// Reason the pair violates the model invariants, or nullopt if it satisfies
/// S^5 = I, S != I, T^4 = I, T S T^-1 = S^2, T^2 with eigenvalues +1 and -1.
std::optional<std::string> model_violation(const Mat2& sigma, const Mat2& tau);

struct ClassGroupModel {
  Mat2 sigma;
  Mat2 tau;

  /// Throws InvalidModel on any violated invariant.
  static ClassGroupModel make(const Mat2& sigma, const Mat2& tau);
};

/// S = [[1,1],[0,1]], T = diag(1,3).
ClassGroupModel canonical_model();

/// ker(S - I).
Line ambiguous_subgroup(const ClassGroupModel& m);
/// im(S - I), the principal genus.
Line principal_genus(const ClassGroupModel& m);
/// Eigenlines of T^2.
Line plus_line(const ClassGroupModel& m);
Line minus_line(const ClassGroupModel& m);

/// H_1 = ker(S - I), H_2 = (-1)-eigenline of T^2, H_{2+c} = span(v1 + c v2)
/// for normalized generators v1 of H_1 and v2 of H_2, c = 1..4. The order of
/// H_3..H_6 is a labeling convention; any relabeling is a model symmetry.
struct SubgroupLattice {
  std::array<Line, 6> subgroups;
  static constexpr std::array<const char*, 6> kFieldNames = {
      "K1 = (k/k0)*", "K2 = k.Gamma_5^(1)", "K3 = k.Gamma'_5^(1)",
      "K4 = k.Gamma''_5^(1)", "K5 = k.Gamma'''_5^(1)", "K6 = k.Gamma''''_5^(1)"};
};

/// Throws InvalidModel when H_1 and H_2 coincide.
SubgroupLattice subgroup_lattice(const ClassGroupModel& m);

/// perm[i] = j (1-based) when T^2 maps H_{i+1} onto H_j.
std::array<int, 6> tau2_permutation(const ClassGroupModel& m, const SubgroupLattice& lattice);

/// Cycle type of a permutation of {1..6}, cycle lengths descending.
std::vector<int> cycle_type(const std::array<int, 6>& perm);

struct RankCheck {
  int order_five_count = 0;
  int rank_one_count = 0;
  bool identity_has_rank_two = false;
  bool pass = false;
};

/// Enumerates GL_2(F_5) and checks every order-5 element fixes exactly a line.
RankCheck brute_force_rank_check();

/// Result of the exhaustive search over all (S, T) in GL_2(F_5)^2 satisfying
/// the model invariants.
struct ModelSurvey {
  long pairs_examined = 0;
  long valid_models = 0;
  long ambiguous_rank_one = 0;       // dim ker(S - I) = 1
  long kernel_equals_image = 0;      // ker(S - I) = im(S - I)
  long triple_equality = 0;          // ... = fixed line of T^2
  long tau_fixes_ambiguous = 0;      // T acts trivially on ker(S - I)
  long triple_given_tau_fixes = 0;   // triple equality among those
  std::optional<ClassGroupModel> counterexample;  // first valid model failing
};

ModelSurvey exhaustive_model_survey();

/// (S^3 + 3S^2 + 2S - I) v lies in ker(S - I) (or is zero) for every order-5
/// S and every v. Returns the number of (S, v) pairs checked and failures.
struct IdentityCheck {
  long cases = 0;
  long failures = 0;
};
IdentityCheck ambiguity_identity_check();

using CapitulationType = std::array<int, 6>;

struct CapitulationConstraints {
  bool hilbert94 = true;               // (a) nontrivial kernel in each K_j
  bool ambiguous_capitulates = true;   // (b) H_1 dies everywhere: i_j in {0,1}
  bool uniform_tail = true;            // (c) i_2 = ... = i_6
};

/// Every 6-tuple over {0..6} that passes the enabled constraints, ascending
/// lexicographically. With all constraints on this is exactly
/// (0,0,0,0,0,0), (0,1,1,1,1,1), (1,0,0,0,0,0), (1,1,1,1,1,1).
std::vector<CapitulationType> enumerate_capitulation_types(
    const CapitulationConstraints& constraints = {});

enum class CertificateStatus { Applicable, ConditionFailed, NoWitnessFound };

struct ResidueCondition {
  std::string condition;
  // Symbol at the first prime of Z[zeta] above p, or nullopt when the
  // residue test itself is not defined.
  std::optional<int> symbol;
  bool pass = false;
};

struct GeneratorCertificate {
  std::uint64_t n = 0;
  Verdict form = Verdict::None;
  CertificateStatus status = CertificateStatus::ConditionFailed;
  std::array<std::string, 2> generators;
  std::string splitting;
  std::optional<std::uint64_t> auxiliary_prime;  // l
  std::vector<ResidueCondition> residue_conditions;
  std::vector<std::string> warnings;
};

inline constexpr std::uint64_t kWitnessSearchBound = 10'000;

/// Residue conditions and symbolic generators of C_{k,5} for a classified
/// radicand. Status ConditionFailed or NoWitnessFound marks the certificate
/// inapplicable. Throws NotClassified for verdict None.
GeneratorCertificate generator_certificate(std::uint64_t n, const RadicandForm& form);

std::string_view certificate_status_name(CertificateStatus s) noexcept;

/// Warning attached to every tau^2 report: a 5-cycle on K_2..K_6 cannot be
/// induced by an automorphism of order 2.
extern const char* const kTau2CycleWarning;

}  // namespace quintic
