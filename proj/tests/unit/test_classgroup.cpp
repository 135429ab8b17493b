#include <doctest.h>

#include <algorithm>

#include "quintic/classgroup.hpp"
#include "quintic/error.hpp"

using namespace quintic;

namespace {

const Mat2 kS = {{{{1, 1}, {0, 1}}}};
const Mat2 kT = Mat2::diagonal(1, 3);
const Vec2 e1{{1, 0}};
const Vec2 e2{{0, 1}};

}  // namespace

TEST_CASE("matrix arithmetic over F5") {
  CHECK(kS.pow(5) == Mat2::identity());
  CHECK(kT.pow(4) == Mat2::identity());
  CHECK(kT * kS * kT.inverse() == kS * kS);
  CHECK(kT * kT == Mat2::diagonal(1, 4));
  CHECK(kS.det() == 1);
  CHECK((kS - Mat2::identity()).kernel_dimension() == 1);
  CHECK(Mat2::identity().kernel_dimension() == 0);
  CHECK((Mat2::identity() - Mat2::identity()).kernel_dimension() == 2);
  CHECK(general_linear_group().size() == 480);
  for (const Mat2& m : general_linear_group()) CHECK(m * m.inverse() == Mat2::identity());
}

TEST_CASE("lines") {
  CHECK(all_lines().size() == 6);
  CHECK(Line::spanned_by(Vec2{{2, 0}}) == Line::spanned_by(e1));
  CHECK(Line::spanned_by(Vec2{{3, 3}}).contains(Vec2{{1, 1}}));
  CHECK_FALSE(Line::spanned_by(e1).contains(e2));
}

TEST_CASE("canonical model") {
  const ClassGroupModel m = canonical_model();
  CHECK(m.sigma == kS);
  CHECK(m.tau == kT);
  CHECK_FALSE(model_violation(m.sigma, m.tau).has_value());
  CHECK(ambiguous_subgroup(m) == Line::spanned_by(e1));
  CHECK(principal_genus(m) == Line::spanned_by(e1));
  CHECK(plus_line(m) == Line::spanned_by(e1));
  CHECK(minus_line(m) == Line::spanned_by(e2));
}

TEST_CASE("invalid models are rejected") {
  CHECK_THROWS_AS(ClassGroupModel::make(Mat2::identity(), kT), Error);
  CHECK_THROWS_AS(ClassGroupModel::make(kS, Mat2::identity()), Error);
  CHECK_THROWS_AS(ClassGroupModel::make(kS, Mat2::diagonal(1, 2)), Error);
  try {
    ClassGroupModel::make(Mat2::identity(), kT);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidModel);
  }
}

TEST_CASE("order-5 matrices have one-dimensional fixed spaces") {
  const RankCheck r = brute_force_rank_check();
  CHECK(r.order_five_count == 24);
  CHECK(r.rank_one_count == 24);
  CHECK(r.identity_has_rank_two);
  CHECK(r.pass);
}

TEST_CASE("model survey") {
  const ModelSurvey s = exhaustive_model_survey();
  CHECK(s.pairs_examined == 480 * 480);
  CHECK(s.valid_models > 0);
  CHECK(s.ambiguous_rank_one == s.valid_models);
  CHECK(s.kernel_equals_image == s.valid_models);
  CHECK(s.triple_given_tau_fixes == s.tau_fixes_ambiguous);
  // Without T fixing ker(S - I) pointwise the fixed line of T^2 can differ.
  CHECK(s.triple_equality < s.valid_models);
  REQUIRE(s.counterexample.has_value());
  const ClassGroupModel c = *s.counterexample;
  CHECK_FALSE(model_violation(c.sigma, c.tau).has_value());
  CHECK_FALSE(ambiguous_subgroup(c) == plus_line(c));
  // The explicit counterexample S = [[1,1],[0,1]], T = diag(2,1).
  const ClassGroupModel d = ClassGroupModel::make(kS, Mat2::diagonal(2, 1));
  CHECK(ambiguous_subgroup(d) == Line::spanned_by(e1));
  CHECK(plus_line(d) == Line::spanned_by(e2));
}

TEST_CASE("ambiguity identity") {
  const IdentityCheck id = ambiguity_identity_check();
  CHECK(id.cases == 24 * 25);
  CHECK(id.failures == 0);
}

TEST_CASE("subgroup lattice and tau squared") {
  const ClassGroupModel m = canonical_model();
  const SubgroupLattice lat = subgroup_lattice(m);
  CHECK(lat.subgroups[0] == Line::spanned_by(e1));
  CHECK(lat.subgroups[1] == Line::spanned_by(e2));
  for (int c = 1; c <= 4; ++c) CHECK(lat.subgroups[1 + c] == Line::spanned_by(Vec2{{1, c}}));
  auto sorted = lat.subgroups;
  auto lines = all_lines();
  for (const auto& l : lines) CHECK(std::find(sorted.begin(), sorted.end(), l) != sorted.end());

  const auto perm = tau2_permutation(m, lat);
  CHECK(perm == std::array<int, 6>{1, 2, 6, 5, 4, 3});
  for (int i = 0; i < 6; ++i) CHECK(perm[perm[i] - 1] == i + 1);
  CHECK(cycle_type(perm) == std::vector<int>{2, 2, 1, 1});
  // span(e1 + e2) <-> span(e1 + 4 e2)
  CHECK(perm[2] == 6);
  CHECK(std::string(kTau2CycleWarning).find("5-cycle") != std::string::npos);
}

TEST_CASE("tau squared is an involution fixing H1 and H2 in every valid model") {
  for (const Mat2& s : general_linear_group()) {
    for (const Mat2& t : general_linear_group()) {
      if (model_violation(s, t)) continue;
      const ClassGroupModel m{s, t};
      if (ambiguous_subgroup(m) == minus_line(m)) continue;
      const auto lat = subgroup_lattice(m);
      const auto perm = tau2_permutation(m, lat);
      CHECK(perm[0] == 1);
      CHECK(perm[1] == 2);
      for (int i = 0; i < 6; ++i) CHECK(perm[perm[i] - 1] == i + 1);
    }
  }
}

TEST_CASE("capitulation types") {
  const auto types = enumerate_capitulation_types();
  const std::vector<CapitulationType> expected = {
      {0, 0, 0, 0, 0, 0}, {0, 1, 1, 1, 1, 1}, {1, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1}};
  CHECK(types == expected);
  auto contains = [](const std::vector<CapitulationType>& v, CapitulationType t) {
    return std::find(v.begin(), v.end(), t) != v.end();
  };
  CapitulationConstraints no_b;
  no_b.ambiguous_capitulates = false;
  CHECK(contains(enumerate_capitulation_types(no_b), {2, 0, 0, 0, 0, 0}));
  CHECK_FALSE(contains(types, {2, 0, 0, 0, 0, 0}));
  CapitulationConstraints no_c;
  no_c.uniform_tail = false;
  const auto loose = enumerate_capitulation_types(no_c);
  CHECK(loose.size() == 64);
  CHECK(contains(loose, {1, 1, 1, 1, 1, 0}));
  CHECK_FALSE(contains(types, {1, 1, 1, 1, 1, 0}));
  CapitulationConstraints none{false, false, false};
  CHECK(enumerate_capitulation_types(none).size() == 117649);
}

TEST_CASE("generator certificates") {
  GeneratorCertificate c = generator_certificate(95, classify(95));
  CHECK(c.form == Verdict::FormI);
  REQUIRE(c.residue_conditions.size() == 2);
  CHECK(c.residue_conditions[0].condition.find("5") != std::string::npos);
  CHECK(c.splitting == "19 O_k = P_1^5 P_2^5");
  // Every rational integer is a fifth power modulo a prime above 19.
  CHECK(c.status == CertificateStatus::ConditionFailed);
  CHECK_FALSE(c.warnings.empty());

  c = generator_certificate(149, classify(149));
  CHECK(c.form == Verdict::FormIII);
  CHECK(c.residue_conditions.size() == 1);
  CHECK(c.splitting == "5 O_k = B_1^4 B_2^4 B_3^4 B_4^4 B_5^4");
  CHECK(c.status == CertificateStatus::ConditionFailed);

  c = generator_certificate(57, classify(57));
  CHECK(c.form == Verdict::FormII);
  REQUIRE(c.residue_conditions.size() == 2);
  CHECK(c.residue_conditions[0].condition.find("3") != std::string::npos);
  for (const auto& rc : c.residue_conditions) CHECK_FALSE(rc.pass);

  CHECK_THROWS_AS(generator_certificate(2, classify(2)), Error);
}
