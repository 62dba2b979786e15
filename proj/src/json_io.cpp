#include "sdio/json_io.hpp"

#include <cmath>

#include "sdio/error.hpp"

namespace sdio::json {

Json integer(const BigInt& n) {
  if (n.fits_slong_p()) return Json(static_cast<std::int64_t>(n.get_si()));
  return Json(to_string(n));
}

Json rational(const Rational& q) { return Json(to_string(q)); }

Json exponents(const ExpVector& e) {
  Json arr = Json::array();
  for (long v : e.entries()) arr.push_back(v);
  return arr;
}

Json exponents(const SUnit& u) {
  Json arr = Json::array();
  for (unsigned long v : u.exponents()) arr.push_back(v);
  return arr;
}

Json real(double x) {
  if (!std::isfinite(x)) return Json(nullptr);
  return Json(x);
}

Json record(std::string_view cmd, bool ok) {
  Json j = Json::object();
  j["cmd"] = std::string(cmd);
  j["ok"] = ok;
  return j;
}

Json tuple_payload(const TupleRecord& rec) {
  Json j = Json::object();
  Json values = Json::array();
  for (const auto& v : rec.values) values.push_back(integer(v));
  j["values"] = std::move(values);
  Json ws = Json::array();
  for (const auto& w : rec.witnesses) {
    Json item = Json::object();
    item["i"] = w.i + 1;
    item["j"] = w.j + 1;
    item["s"] = integer(w.s.value());
    item["exponents"] = exponents(w.s);
    ws.push_back(std::move(item));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

Json failure_payload(const VerificationFailure& f) {
  Json j = Json::object();
  j["i"] = f.i + 1;
  j["j"] = f.j + 1;
  j["a"] = integer(f.a);
  j["b"] = integer(f.b);
  j["product"] = integer(f.a * f.b);
  j["reason"] = f.reason;
  return j;
}

Json hypothesis_payload(const HypothesisReport& r) {
  Json j = Json::object();
  j["nonconstant"] = r.nonconstant;
  j["nonzero_at_origin"] = r.nonzero_at_origin;
  j["odd_root_count"] = r.odd_root_count;
  j["positive_leading"] = r.positive_leading;
  j["satisfies_theorem"] = r.satisfies_theorem;
  return j;
}

Json relation_payload(const DependenceRelation& rel) {
  Json j = Json::object();
  j["k"] = rel.k;
  j["l"] = rel.l;
  j["g"] = rational(rel.g);
  j["g_exponents"] = exponents(rel.g_exponents);
  return j;
}

namespace {

Json triple_values(const SUnitTriple& t) {
  return Json::array({integer(t.u.value()), integer(t.v.value()), integer(t.w.value())});
}

Json triple_exponents(const SUnitTriple& t) {
  return Json::array({exponents(t.u), exponents(t.v), exponents(t.w)});
}

}  // namespace

Json family_payload(const FamilyParam& fp) {
  Json j = Json::object();
  j["base"] = triple_values(fp.base);
  j["base_exponents"] = triple_exponents(fp.base);
  j["sample"] = triple_values(fp.sample);
  j["sample_exponents"] = triple_exponents(fp.sample);
  j["x"] = fp.x;
  j["y"] = fp.y;
  j["z"] = fp.z;
  j["psi"] = exponents(fp.psi);
  if (fp.normalized) {
    j["t"] = exponents(fp.t);
    Json beta = Json::array();
    for (long b : fp.beta) beta.push_back(b);
    j["beta"] = std::move(beta);
    Json eta = Json::array(), eta_exp = Json::array(), d = Json::array();
    for (std::size_t k = 0; k < 3; ++k) {
      eta.push_back(rational(fp.eta[k]));
      eta_exp.push_back(exponents(fp.eta_exponents[k]));
      d.push_back(fp.d[k]);
    }
    j["eta"] = std::move(eta);
    j["eta_exponents"] = std::move(eta_exp);
    j["d"] = std::move(d);
    j["X"] = rational(fp.X);
    j["X_exponents"] = exponents(fp.X_exponents);
  }
  Json warnings = Json::array();
  for (const auto& w : fp.warnings) warnings.push_back(w);
  j["warnings"] = std::move(warnings);
  return j;
}

Json probe_payload(const GcdProbeResult& probe) {
  Json j = Json::object();
  j["epsilon"] = probe.epsilon;
  Json samples = Json::array();
  for (const auto& s : probe.samples) {
    Json item = Json::object();
    item["v"] = integer(s.v.value());
    item["w"] = integer(s.w.value());
    item["fv"] = integer(s.fv);
    item["fw"] = integer(s.fw);
    item["gcd"] = integer(s.gcd_value);
    item["ratio"] = real(s.ratio);
    item["flagged"] = s.flagged;
    samples.push_back(std::move(item));
  }
  j["samples"] = std::move(samples);
  Json summary = Json::object();
  summary["count"] = probe.summary.count;
  summary["flagged"] = probe.summary.flagged;
  summary["max_ratio"] = real(probe.summary.max_ratio);
  j["summary"] = std::move(summary);
  return j;
}

namespace {

Rational rational_from(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(BigInt(std::to_string(v.get<std::int64_t>())));
  fail(ErrorCode::ParseError, "expected an integer or a \"p/q\" string, got " + v.dump());
}

long long_from(const Json& v) {
  if (v.is_number_integer()) return static_cast<long>(v.get<std::int64_t>());
  if (v.is_string()) {
    BigInt n = parse_bigint(v.get<std::string>());
    if (!n.fits_slong_p()) fail(ErrorCode::ParseError, "exponent out of range");
    return n.get_si();
  }
  fail(ErrorCode::ParseError, "expected an integer, got " + v.dump());
}

}  // namespace

CurveSpec parse_curve_spec(const Json& j) {
  if (!j.is_object() || !j.contains("eta") || !j.contains("d"))
    fail(ErrorCode::ParseError, "family JSON needs \"eta\" and \"d\"");
  const Json& eta = j.at("eta");
  const Json& d = j.at("d");
  if (!eta.is_array() || eta.size() != 3 || !d.is_array() || d.size() != 3)
    fail(ErrorCode::ParseError, "\"eta\" and \"d\" must be arrays of length 3");
  CurveSpec spec;
  for (std::size_t k = 0; k < 3; ++k) {
    spec.eta[k] = rational_from(eta[k]);
    spec.d[k] = long_from(d[k]);
  }
  return spec;
}

std::pair<long, long> parse_relation_exponents(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::ParseError, std::string("bad relation JSON: ") + e.what());
    }
    if (!j.contains("k") || !j.contains("l")) fail(ErrorCode::ParseError, "relation JSON needs \"k\" and \"l\"");
    return {long_from(j.at("k")), long_from(j.at("l"))};
  }
  auto items = split_list(text);
  if (items.size() != 2) fail(ErrorCode::ParseError, "relation must be \"k,l\"");
  BigInt k = parse_bigint(items[0]), l = parse_bigint(items[1]);
  if (!k.fits_slong_p() || !l.fits_slong_p()) fail(ErrorCode::ParseError, "relation exponent out of range");
  return {k.get_si(), l.get_si()};
}

}  // namespace sdio::json
