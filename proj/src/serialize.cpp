#include "quintic/serialize.hpp"

#include "quintic/error.hpp"

namespace quintic {

Json to_json(const CycInt& a) {
  Json out = Json::array();
  for (const auto& c : a.coefficients()) out.push_back(c.get_str());
  return out;
}

CycInt cycint_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw Error(ErrorCode::InvalidArgument, "CycInt must be an array of four decimal strings");
  }
  CycInt::Coefficients c;
  for (std::size_t i = 0; i < 4; ++i) {
    const Json& v = j[i];
    std::string text = v.is_string() ? v.get<std::string>() : v.dump();
    if (c[i].set_str(text, 10) != 0) {
      throw Error(ErrorCode::InvalidArgument, "invalid integer '" + text + "'");
    }
  }
  return CycInt(c);
}

Json to_json(const CycPrime& q) {
  Json out;
  out["p"] = q.rational_prime;
  out["pi"] = to_json(q.element);
  out["f"] = q.residue_degree;
  out["e"] = q.ramification;
  return out;
}

CycPrime cycprime_from_json(const Json& j) {
  return {j.at("p").get<std::uint64_t>(), cycint_from_json(j.at("pi")), j.at("f").get<int>(),
          j.at("e").get<int>()};
}

Json to_json(const CycFactorization& f) {
  Json out;
  out["unit"] = to_json(f.unit);
  Json factors = Json::array();
  for (const auto& [q, e] : f.factors) {
    Json item;
    item["prime"] = to_json(q);
    item["exponent"] = e;
    factors.push_back(std::move(item));
  }
  out["factors"] = std::move(factors);
  return out;
}

Json to_json(const RadicandForm& form) {
  Json out;
  out["n"] = form.n;
  out["verdict"] = verdict_name(form.verdict);
  out["e"] = form.e ? Json(*form.e) : Json(nullptr);
  out["p"] = form.p ? Json(*form.p) : Json(nullptr);
  out["q"] = form.q ? Json(*form.q) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& c : form.checks) {
    Json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    item["witness"] = c.witness;
    checks.push_back(std::move(item));
  }
  out["checks"] = std::move(checks);
  return out;
}

RadicandForm radicand_form_from_json(const Json& j) {
  RadicandForm out;
  out.n = j.at("n").get<std::uint64_t>();
  auto verdict = parse_verdict(j.at("verdict").get<std::string>());
  if (!verdict) throw Error(ErrorCode::InvalidArgument, "unknown verdict");
  out.verdict = *verdict;
  if (!j.at("e").is_null()) out.e = j.at("e").get<int>();
  if (!j.at("p").is_null()) out.p = j.at("p").get<std::uint64_t>();
  if (!j.at("q").is_null()) out.q = j.at("q").get<std::uint64_t>();
  for (const auto& c : j.at("checks")) {
    out.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                          c.at("witness").get<std::string>()});
  }
  return out;
}

Json to_json(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return Json(v.get_si());
  return Json(v.get_str());
}

Json to_json(const PeriodPolynomial& poly) {
  Json out;
  out["p"] = poly.p;
  Json coeffs = Json::array();
  for (const auto& c : poly.coefficients) coeffs.push_back(to_json(c));
  out["coefficients"] = std::move(coeffs);
  return out;
}

Json to_json(const KummerGenerator& gen) {
  Json out;
  out["lambda_exp"] = gen.lambda_exp;
  Json primes = Json::array();
  for (const auto& [q, e] : gen.prime_exps) {
    Json item;
    item["prime"] = to_json(q);
    item["exponent"] = e;
    primes.push_back(std::move(item));
  }
  out["prime_exps"] = std::move(primes);
  out["w"] = to_json(gen.realization);
  return out;
}

Json to_json(const GenusReport& report) {
  Json out;
  out["n"] = report.n;
  out["r"] = report.r;
  out["genus_number"] = to_json(report.genus_number);
  Json comps = Json::array();
  for (const auto& c : report.absolute_components) comps.push_back(to_json(c));
  out["absolute_components"] = std::move(comps);
  Json rel = Json::array();
  for (const auto& g : report.relative_candidates) rel.push_back(to_json(g));
  out["relative_candidates"] = std::move(rel);
  out["d"] = report.d;
  out["qstar_inferred"] = report.qstar_inferred ? Json(*report.qstar_inferred) : Json(nullptr);
  out["rank_value"] = report.rank_value ? Json(*report.rank_value) : Json(nullptr);
  out["warnings"] = report.warnings;
  return out;
}

Json to_json(const CorollaryReport& report) {
  static constexpr const char* kOutcome[] = {"NoHypothesis", "SingleSplitPrime", "DistinctComposita"};
  Json out;
  out["n"] = report.n;
  out["r"] = report.r;
  out["h_gamma"] = report.h_gamma ? to_json(*report.h_gamma) : Json(nullptr);
  out["outcome"] = kOutcome[static_cast<int>(report.outcome)];
  out["statements"] = report.statements;
  return out;
}

Json to_json(const GeneratorCertificate& cert) {
  Json out;
  out["n"] = cert.n;
  out["form"] = verdict_name(cert.form);
  out["status"] = certificate_status_name(cert.status);
  out["generators"] = {cert.generators[0], cert.generators[1]};
  out["splitting"] = cert.splitting;
  out["auxiliary_prime"] = cert.auxiliary_prime ? Json(*cert.auxiliary_prime) : Json(nullptr);
  Json conds = Json::array();
  for (const auto& c : cert.residue_conditions) {
    Json item;
    item["condition"] = c.condition;
    item["symbol"] = c.symbol ? Json(*c.symbol) : Json(nullptr);
    item["pass"] = c.pass;
    conds.push_back(std::move(item));
  }
  out["residue_conditions"] = std::move(conds);
  out["warnings"] = cert.warnings;
  return out;
}

Json to_json(const CapitulationType& type) {
  Json out = Json::array();
  for (int v : type) out.push_back(v);
  return out;
}

Json to_json(const Line& line) { return {line.generator.v[0], line.generator.v[1]}; }

Json to_json(const Mat2& m) {
  return {{m.m[0][0], m.m[0][1]}, {m.m[1][0], m.m[1][1]}};
}

}  // namespace quintic
