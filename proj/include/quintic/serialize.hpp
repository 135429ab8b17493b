#pragma once

// JSON forms of the domain types. Field order is fixed, so equal values
// always serialize to identical bytes.

#include <json.hpp>

#include "quintic/classgroup.hpp"
#include "quintic/cyclo_ring.hpp"
#include "quintic/genus.hpp"
#include "quintic/k0_primes.hpp"
#include "quintic/radicand.hpp"

namespace quintic {

using Json = nlohmann::ordered_json;

/// [a0, a1, a2, a3] as decimal strings.
Json to_json(const CycInt& a);
CycInt cycint_from_json(const Json& j);

/// {p, pi, f, e}
Json to_json(const CycPrime& q);
CycPrime cycprime_from_json(const Json& j);

Json to_json(const CycFactorization& f);

/// {n, verdict, e, p, q, checks: [{name, pass, witness}]}
Json to_json(const RadicandForm& form);
RadicandForm radicand_form_from_json(const Json& j);

/// Integer when it fits in 64 bits, decimal string otherwise.
Json to_json(const mpz_class& v);

Json to_json(const PeriodPolynomial& poly);
Json to_json(const KummerGenerator& gen);
Json to_json(const GenusReport& report);
Json to_json(const CorollaryReport& report);
Json to_json(const GeneratorCertificate& cert);
Json to_json(const CapitulationType& type);
Json to_json(const Line& line);
Json to_json(const Mat2& m);

}  // namespace quintic
