#ifndef SDIO_JSON_IO_HPP
#define SDIO_JSON_IO_HPP

#include <json.hpp>

#include "sdio/polyarith.hpp"
#include "sdio/prooflab.hpp"
#include "sdio/search.hpp"
#include "sdio/sunit.hpp"

namespace sdio::json {

using Json = nlohmann::ordered_json;

// Integers print as JSON numbers when they fit in 64 bits and as decimal
// strings otherwise. Rationals always print as "p" or "p/q" strings.
Json integer(const BigInt& n);
Json rational(const Rational& q);
Json exponents(const ExpVector& e);
Json exponents(const SUnit& u);
// Non-finite doubles become null.
Json real(double x);

Json record(std::string_view cmd, bool ok);

Json tuple_payload(const TupleRecord& rec);
Json failure_payload(const VerificationFailure& f);
Json hypothesis_payload(const HypothesisReport& r);
Json relation_payload(const DependenceRelation& rel);
Json family_payload(const FamilyParam& fp);
Json probe_payload(const GcdProbeResult& probe);

// Reads {"eta": [...], "d": [...]} as written by family_payload.
struct CurveSpec {
  std::array<Rational, 3> eta;
  std::array<long, 3> d;
};
CurveSpec parse_curve_spec(const Json& j);

// Reads {"k": .., "l": ..} or "k,l".
std::pair<long, long> parse_relation_exponents(std::string_view text);

}  // namespace sdio::json

#endif
