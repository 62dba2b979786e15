#include "sdio/sdio.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "sdio/error.hpp"
#include "sdio/json_io.hpp"
#include "sdio/polyarith.hpp"
#include "sdio/prooflab.hpp"
#include "sdio/search.hpp"
#include "sdio/sunit.hpp"

struct sdio_primeset {
  sdio::PrimeSet set;
};

struct sdio_poly {
  sdio::IntPoly f;
};

namespace {

using sdio::BigInt;
using sdio::ErrorCode;
using sdio::Rational;
using Json = sdio::json::Json;
namespace sj = sdio::json;

thread_local std::string g_last_error;

sdio_status status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return SDIO_ERR_INVALID_INPUT;
    case ErrorCode::ParseError: return SDIO_ERR_PARSE;
    case ErrorCode::NonDistinctNodes: return SDIO_ERR_NON_DISTINCT_NODES;
    case ErrorCode::ZeroPolynomial: return SDIO_ERR_ZERO_POLYNOMIAL;
    case ErrorCode::ConstantPolynomial: return SDIO_ERR_CONSTANT_POLYNOMIAL;
    case ErrorCode::PreconditionViolated: return SDIO_ERR_PRECONDITION;
    case ErrorCode::InsufficientData: return SDIO_ERR_INSUFFICIENT_DATA;
    case ErrorCode::NotInFamily: return SDIO_ERR_NOT_IN_FAMILY;
    case ErrorCode::InconsistentRelations: return SDIO_ERR_INCONSISTENT_RELATIONS;
    case ErrorCode::ReconstructionFailure: return SDIO_ERR_RECONSTRUCTION;
  }
  return SDIO_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Json error_record(std::string_view cmd, std::string_view kind, const std::string& message) {
  Json j = sj::record(cmd, false);
  j["error"] = std::string(kind);
  j["message"] = message;
  return j;
}

// Runs body, which fills `out` and returns OK or NEGATIVE. Exceptions turn
// into an error record and the matching status.
template <class Body>
sdio_status guarded(std::string_view cmd, Json& out, Body&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const sdio::Error& e) {
    g_last_error = e.what();
    out = error_record(cmd, sdio::error_code_name(e.code()), e.what());
    return status_for(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    out = error_record(cmd, "Internal", e.what());
    return SDIO_ERR_INTERNAL;
  }
}

template <class Body>
sdio_status single(std::string_view cmd, char** out_json, Body&& body) {
  Json out;
  sdio_status st = guarded(cmd, out, [&] { return body(out); });
  if (out_json) *out_json = dup_string(out.dump());
  return st;
}

template <class Body>
sdio_status stream(std::string_view cmd, sdio_line_fn emit, void* user, Body&& body) {
  auto send = [&](const Json& j) {
    if (emit) emit(j.dump().c_str(), user);
  };
  Json err;
  sdio_status st = guarded(cmd, err, [&] { return body(send); });
  if (st != SDIO_OK && st != SDIO_NEGATIVE) send(err);
  return st;
}

std::string need(const char* s, const char* what) {
  if (!s) sdio::fail(ErrorCode::InvalidInput, std::string("missing ") + what);
  return s;
}

const sdio::PrimeSet& need(const sdio_primeset* p) {
  if (!p) sdio::fail(ErrorCode::InvalidInput, "missing prime set");
  return p->set;
}

const sdio::IntPoly& need(const sdio_poly* p) {
  if (!p) sdio::fail(ErrorCode::InvalidInput, "missing polynomial");
  return p->f;
}

sdio::SUnit sunit_from(const BigInt& n, const sdio::PrimeSet& S) {
  if (n < 1) sdio::fail(ErrorCode::InvalidInput, "S-units must be positive, got " + sdio::to_string(n));
  auto u = sdio::factor_smooth(n, S);
  if (!u) sdio::fail(ErrorCode::InvalidInput, sdio::to_string(n) + " is not an S-unit for S = {" + S.to_string() + "}");
  return *u;
}

std::pair<std::string, std::string> split_colon(const std::string& item) {
  auto pos = item.find(':');
  if (pos == std::string::npos || item.find(':', pos + 1) != std::string::npos)
    sdio::fail(ErrorCode::ParseError, "expected \"x:y\", got '" + item + "'");
  return {item.substr(0, pos), item.substr(pos + 1)};
}

std::vector<std::pair<sdio::SUnit, sdio::SUnit>> parse_unit_pairs(const std::string& text, const sdio::PrimeSet& S) {
  std::vector<std::pair<sdio::SUnit, sdio::SUnit>> out;
  for (const auto& item : sdio::split_list(text)) {
    auto [v, w] = split_colon(item);
    out.emplace_back(sunit_from(sdio::parse_bigint(v), S), sunit_from(sdio::parse_bigint(w), S));
  }
  if (out.empty()) sdio::fail(ErrorCode::InvalidInput, "no pairs given");
  return out;
}

sdio::SUnitTriple parse_unit_triple(const std::string& text, const sdio::PrimeSet& S) {
  auto vals = sdio::parse_bigint_list(text);
  if (vals.size() != 3) sdio::fail(ErrorCode::ParseError, "expected three S-units \"u,v,w\"");
  return {sunit_from(vals[0], S), sunit_from(vals[1], S), sunit_from(vals[2], S)};
}

Json int_array(const std::vector<BigInt>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(sj::integer(x));
  return arr;
}

}  // namespace

extern "C" {

const char* sdio_version(void) { return "1.0.0"; }

const char* sdio_status_name(sdio_status status) {
  switch (status) {
    case SDIO_OK: return "OK";
    case SDIO_NEGATIVE: return "Negative";
    case SDIO_ERR_INVALID_INPUT: return "InvalidInput";
    case SDIO_ERR_PARSE: return "ParseError";
    case SDIO_ERR_NON_DISTINCT_NODES: return "NonDistinctNodes";
    case SDIO_ERR_ZERO_POLYNOMIAL: return "ZeroPolynomial";
    case SDIO_ERR_CONSTANT_POLYNOMIAL: return "ConstantPolynomial";
    case SDIO_ERR_PRECONDITION: return "PreconditionViolated";
    case SDIO_ERR_INSUFFICIENT_DATA: return "InsufficientData";
    case SDIO_ERR_NOT_IN_FAMILY: return "NotInFamily";
    case SDIO_ERR_INCONSISTENT_RELATIONS: return "InconsistentRelations";
    case SDIO_ERR_RECONSTRUCTION: return "ReconstructionFailure";
    case SDIO_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* sdio_last_error(void) { return g_last_error.c_str(); }

void sdio_string_free(char* s) { std::free(s); }

sdio_status sdio_primeset_parse(const char* text, sdio_primeset** out) {
  Json ignored;
  return guarded("primes", ignored, [&] {
    if (!out) sdio::fail(ErrorCode::InvalidInput, "null output handle");
    *out = new sdio_primeset{sdio::PrimeSet::parse(need(text, "prime list"))};
    return SDIO_OK;
  });
}

sdio_status sdio_primeset_load(const char* path, sdio_primeset** out) {
  Json ignored;
  return guarded("primes", ignored, [&] {
    if (!out) sdio::fail(ErrorCode::InvalidInput, "null output handle");
    *out = new sdio_primeset{sdio::PrimeSet::load_file(need(path, "prime file"))};
    return SDIO_OK;
  });
}

size_t sdio_primeset_size(const sdio_primeset* set) { return set ? set->set.size() : 0; }

void sdio_primeset_free(sdio_primeset* set) { delete set; }

sdio_status sdio_poly_parse(const char* text, sdio_poly** out) {
  Json ignored;
  return guarded("poly", ignored, [&] {
    if (!out) sdio::fail(ErrorCode::InvalidInput, "null output handle");
    *out = new sdio_poly{sdio::parse_int_poly(need(text, "polynomial"))};
    return SDIO_OK;
  });
}

int sdio_poly_degree(const sdio_poly* poly) { return poly ? poly->f.degree() : -1; }

void sdio_poly_free(sdio_poly* poly) { delete poly; }

sdio_status sdio_smooth(const sdio_primeset* set, const char* n, char** out_json) {
  return single("smooth", out_json, [&](Json& out) {
    BigInt value = sdio::parse_bigint(need(n, "n"));
    auto u = sdio::factor_smooth(value, need(set));
    out = sj::record("smooth", u.has_value());
    out["n"] = sj::integer(value);
    if (!u) return SDIO_NEGATIVE;
    out["exponents"] = sj::exponents(*u);
    out["height"] = sj::real(sdio::weil_height(*u));
    return SDIO_OK;
  });
}

sdio_status sdio_enumerate(const sdio_primeset* set, const char* bound, sdio_line_fn emit, void* user) {
  return stream("enumerate", emit, user, [&](auto& send) {
    sdio::SmoothEnumerator gen(need(set), sdio::parse_bigint(need(bound, "bound")));
    while (auto u = gen.next()) {
      Json j = sj::record("enumerate", true);
      j["value"] = sj::integer(u->value());
      j["exponents"] = sj::exponents(*u);
      send(j);
    }
    return SDIO_OK;
  });
}

sdio_status sdio_gcd(const char* a, const char* b, char** out_json) {
  return single("gcd", out_json, [&](Json& out) {
    BigInt x = sdio::parse_bigint(need(a, "a")), y = sdio::parse_bigint(need(b, "b"));
    BigInt g = sdio::gcd_via_valuations(x, y);
    out = sj::record("gcd", true);
    out["a"] = sj::integer(x);
    out["b"] = sj::integer(y);
    out["gcd"] = sj::integer(g);
    return SDIO_OK;
  });
}

sdio_status sdio_search(const sdio_primeset* set, const sdio_poly* f, const sdio_search_options* opts,
                        sdio_line_fn emit, void* user) {
  return stream("search", emit, user, [&](auto& send) {
    if (!opts) sdio::fail(ErrorCode::InvalidInput, "missing search options");
    sdio::SearchConfig cfg;
    cfg.bound = sdio::parse_bigint(need(opts->bound, "bound"));
    cfg.n = opts->size;
    cfg.strict = opts->strict != 0;
    cfg.exclude_trivial = opts->exclude_trivial != 0;
    cfg.threads = opts->threads ? opts->threads : 1;
    if (opts->progress) {
      auto fn = opts->progress;
      void* pu = opts->progress_user;
      cfg.progress = [fn, pu](std::size_t done, std::size_t total) { fn(done, total, pu); };
    }
    for (const auto& rec : sdio::search_tuples(need(set), need(f), cfg)) {
      Json j = sj::record("search", true);
      j.update(sj::tuple_payload(rec));
      send(j);
    }
    return SDIO_OK;
  });
}

sdio_status sdio_pairs(const sdio_primeset* set, const sdio_poly* f, const char* bound, sdio_line_fn emit,
                       void* user) {
  return stream("pairs", emit, user, [&](auto& send) {
    for (const auto& p : sdio::pairs_from_values(need(set), need(f), sdio::parse_bigint(need(bound, "bound")))) {
      Json j = sj::record("pairs", true);
      j["a"] = sj::integer(p.a);
      j["b"] = sj::integer(p.b);
      j["s"] = sj::integer(p.s.value());
      j["exponents"] = sj::exponents(p.s);
      send(j);
    }
    return SDIO_OK;
  });
}

sdio_status sdio_verify(const sdio_primeset* set, const sdio_poly* f, const char* tuple, char** out_json) {
  return single("verify", out_json, [&](Json& out) {
    auto values = sdio::parse_bigint_list(need(tuple, "tuple"));
    auto result = sdio::verify_tuple(values, need(set), need(f));
    if (auto* rec = std::get_if<sdio::TupleRecord>(&result)) {
      out = sj::record("verify", true);
      out.update(sj::tuple_payload(*rec));
      return SDIO_OK;
    }
    out = sj::record("verify", false);
    out["values"] = int_array(values);
    out["failure"] = sj::failure_payload(std::get<sdio::VerificationFailure>(result));
    return SDIO_NEGATIVE;
  });
}

sdio_status sdio_identity(const char* a, const char* b, const char* c, const char* q, unsigned long k,
                          unsigned long m, unsigned long n, char** out_json) {
  return single("identity", out_json, [&](Json& out) {
    sdio::SinglePrimeInput in{sdio::parse_bigint(need(a, "a")), sdio::parse_bigint(need(b, "b")),
                              sdio::parse_bigint(need(c, "c")), sdio::parse_bigint(need(q, "q")), k, m, n};
    bool holds = sdio::single_prime_identity_check(in);
    out = sj::record("identity", holds);
    out["holds"] = holds;
    return holds ? SDIO_OK : SDIO_NEGATIVE;
  });
}

sdio_status sdio_construct(const char* tuple, const char* units, const sdio_primeset* set, char** out_json) {
  return single("construct", out_json, [&](Json& out) {
    auto t = sdio::parse_bigint_list(need(tuple, "tuple"));
    auto u = sdio::parse_bigint_list(need(units, "units"));
    if (t.size() != 3 || u.size() != 3) sdio::fail(ErrorCode::InvalidInput, "construct takes a triple and three units");
    for (std::size_t i = 0; i < 3; ++i) {
      if (t[i] < 1 || u[i] < 1) sdio::fail(ErrorCode::InvalidInput, "tuple entries and units must be positive");
      if (i > 0 && t[i] < t[i - 1]) sdio::fail(ErrorCode::InvalidInput, "tuple entries must be non-decreasing");
    }
    if (set) {
      for (const auto& x : u) sunit_from(x, set->set);
    }
    // ab = g(u), ac = g(v), bc = g(w)
    const std::vector<sdio::InterpolationPoint> pts{
        {Rational(u[0]), Rational(t[0] * t[1])},
        {Rational(u[1]), Rational(t[0] * t[2])},
        {Rational(u[2]), Rational(t[1] * t[2])},
    };
    sdio::RatPoly g = sdio::lagrange_interpolate(pts);
    sdio::ClearedPoly cleared = sdio::clear_denominators(g);
    std::vector<BigInt> scaled{t[0] * cleared.d, t[1] * cleared.d, t[2] * cleared.d};
    const std::size_t pair_of[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (std::size_t k = 0; k < 3; ++k) {
      if (cleared.f(u[k]) != scaled[pair_of[k][0]] * scaled[pair_of[k][1]])
        sdio::fail(ErrorCode::InvalidInput, "internal round-trip check failed");
    }
    out = sj::record("construct", true);
    out["tuple"] = int_array(t);
    out["units"] = int_array(u);
    out["g"] = sdio::format_poly(g);
    out["d"] = sj::integer(cleared.d);
    out["f"] = sdio::format_poly(cleared.f);
    out["scaled_tuple"] = int_array(scaled);
    if (set) {
      bool verified = std::holds_alternative<sdio::TupleRecord>(sdio::verify_tuple(scaled, set->set, cleared.f));
      out["verified"] = verified;
      if (!verified) {
        out["ok"] = false;
        return SDIO_NEGATIVE;
      }
    }
    return SDIO_OK;
  });
}

sdio_status sdio_check_poly(const sdio_poly* f, char** out_json) {
  return single("check-poly", out_json, [&](Json& out) {
    auto report = sdio::check_theorem_hypotheses(need(f));
    out = sj::record("check-poly", true);
    out["poly"] = sdio::format_poly(f->f);
    out.update(sj::hypothesis_payload(report));
    return SDIO_OK;
  });
}

sdio_status sdio_squarefree(const sdio_poly* f, char** out_json) {
  return single("squarefree", out_json, [&](Json& out) {
    auto dec = sdio::yun_squarefree(need(f));
    out = sj::record("squarefree", true);
    out["poly"] = sdio::format_poly(f->f);
    out["content"] = sj::rational(dec.content);
    Json parts = Json::array();
    unsigned t = 0;
    for (const auto& p : dec.parts) {
      Json item = Json::object();
      item["multiplicity"] = p.multiplicity;
      item["factor"] = sdio::format_poly(p.factor);
      parts.push_back(std::move(item));
      if (p.multiplicity % 2 == 1) t += static_cast<unsigned>(p.factor.degree());
    }
    out["parts"] = std::move(parts);
    out["odd_root_count"] = t;
    return SDIO_OK;
  });
}

sdio_status sdio_scaling(const sdio_poly* f, const char* phi, char** out_json) {
  return single("scaling", out_json, [&](Json& out) {
    Rational p = sdio::parse_rational(need(phi, "phi"));
    bool holds = sdio::satisfies_scaling_identity(need(f), p);
    out = sj::record("scaling", true);
    out["poly"] = sdio::format_poly(f->f);
    out["phi"] = sj::rational(p);
    out["holds"] = holds;
    return SDIO_OK;
  });
}

sdio_status sdio_compose(const sdio_poly* f, const char* eta, unsigned d, char** out_json) {
  return single("compose", out_json, [&](Json& out) {
    Rational e = sdio::parse_rational(need(eta, "eta"));
    auto r = sdio::compose_scaled_power(need(f), e, d);
    out = sj::record("compose", true);
    out["poly"] = sdio::format_poly(f->f);
    out["eta"] = sj::rational(e);
    out["d"] = d;
    out["result"] = sdio::format_poly(r);
    return SDIO_OK;
  });
}

sdio_status sdio_eval(const char* poly, const char* x, char** out_json) {
  return single("eval", out_json, [&](Json& out) {
    auto f = sdio::parse_rat_poly(need(poly, "polynomial"));
    Rational at = sdio::parse_rational(need(x, "x"));
    out = sj::record("eval", true);
    out["poly"] = sdio::format_poly(f);
    out["x"] = sj::rational(at);
    out["value"] = sj::rational(sdio::eval_poly(f, at));
    return SDIO_OK;
  });
}

sdio_status sdio_interpolate(const char* points, char** out_json) {
  return single("interpolate", out_json, [&](Json& out) {
    std::vector<sdio::InterpolationPoint> pts;
    for (const auto& item : sdio::split_list(need(points, "points"))) {
      auto [x, y] = split_colon(item);
      pts.push_back({sdio::parse_rational(x), sdio::parse_rational(y)});
    }
    auto g = sdio::lagrange_interpolate(pts);
    out = sj::record("interpolate", true);
    out["g"] = sdio::format_poly(g);
    return SDIO_OK;
  });
}

sdio_status sdio_dependence(const sdio_primeset* set, const char* pairs, char** out_json) {
  return single("dependence", out_json, [&](Json& out) {
    const auto& S = need(set);
    auto result = sdio::detect_dependence(S, parse_unit_pairs(need(pairs, "pairs"), S));
    if (auto* rel = std::get_if<sdio::DependenceRelation>(&result)) {
      out = sj::record("dependence", true);
      out.update(sj::relation_payload(*rel));
      return SDIO_OK;
    }
    out = sj::record("dependence", false);
    if (std::holds_alternative<sdio::NoRelation>(result)) {
      out["result"] = "NoRelation";
    } else {
      out["result"] = "DegenerateFamily";
      out["why"] = std::get<sdio::DegenerateFamily>(result).why;
    }
    return SDIO_NEGATIVE;
  });
}

sdio_status sdio_rho(const sdio_primeset* set, const char* relation, const char* base, const char* sample,
                     char** out_json) {
  return single("rho", out_json, [&](Json& out) {
    const auto& S = need(set);
    auto [k, l] = sj::parse_relation_exponents(need(relation, "relation"));
    auto b = parse_unit_pairs(need(base, "base"), S);
    auto s = parse_unit_pairs(need(sample, "sample"), S);
    if (b.size() != 1 || s.size() != 1) sdio::fail(ErrorCode::ParseError, "base and sample are single \"v:w\" pairs");
    auto rel = sdio::relation_through(S, k, l, b[0].first, b[0].second);
    auto rho = sdio::parametrize_pair_family(rel, b[0], s[0]);
    out = sj::record("rho", true);
    out.update(sj::relation_payload(rel));
    out["rho"] = sj::rational(rho.value(S));
    out["rho_exponents"] = sj::exponents(rho);
    return SDIO_OK;
  });
}

sdio_status sdio_family(const sdio_primeset* set, const char* rel_vw, const char* rel_uw, const char* base,
                        const char* sample, char** out_json) {
  return single("family", out_json, [&](Json& out) {
    const auto& S = need(set);
    auto [k, l] = sj::parse_relation_exponents(need(rel_vw, "rel-vw"));
    auto [m, r] = sj::parse_relation_exponents(need(rel_uw, "rel-uw"));
    auto b = parse_unit_triple(need(base, "base"), S);
    auto s = parse_unit_triple(need(sample, "sample"), S);
    auto vw = sdio::relation_through(S, k, l, b.v, b.w);
    auto uw = sdio::relation_through(S, m, r, b.u, b.w);
    auto fp = sdio::normalize_mod3(S, sdio::combine_dependences(S, vw, uw, b, s));
    out = sj::record("family", true);
    Json rels = Json::object();
    rels["vw"] = sj::relation_payload(vw);
    rels["uw"] = sj::relation_payload(uw);
    out["relations"] = std::move(rels);
    out.update(sj::family_payload(fp));
    return SDIO_OK;
  });
}

sdio_status sdio_audit(const sdio_poly* f, const char* family_json, char** out_json) {
  return single("audit", out_json, [&](Json& out) {
    Json spec_json;
    try {
      spec_json = Json::parse(need(family_json, "family JSON"));
    } catch (const nlohmann::json::exception& e) {
      sdio::fail(ErrorCode::ParseError, std::string("bad family JSON: ") + e.what());
    }
    auto spec = sj::parse_curve_spec(spec_json);
    auto F = sdio::build_leveque_curve(need(f), spec.eta, spec.d);
    auto audit = sdio::audit_odd_roots(F);
    out = sj::record("audit", true);
    out["poly"] = sdio::format_poly(f->f);
    Json eta = Json::array(), d = Json::array();
    for (std::size_t j = 0; j < 3; ++j) {
      eta.push_back(sj::rational(spec.eta[j]));
      d.push_back(spec.d[j]);
    }
    out["eta"] = std::move(eta);
    out["d"] = std::move(d);
    out["curve"] = sdio::format_poly(F);
    out["degree"] = F.degree();
    out["t_F"] = audit.t_F;
    out["verdict"] = std::string(sdio::verdict_name(audit.verdict));
    return SDIO_OK;
  });
}

sdio_status sdio_audit_curve(const char* curve, char** out_json) {
  return single("audit", out_json, [&](Json& out) {
    auto F = sdio::parse_rat_poly(need(curve, "curve"));
    auto audit = sdio::audit_odd_roots(F);
    out = sj::record("audit", true);
    out["curve"] = sdio::format_poly(F);
    out["degree"] = F.degree();
    out["t_F"] = audit.t_F;
    out["verdict"] = std::string(sdio::verdict_name(audit.verdict));
    return SDIO_OK;
  });
}

sdio_status sdio_gcd_probe(const sdio_primeset* set, const sdio_poly* f, const char* pairs, double epsilon,
                           char** out_json) {
  return single("gcd-probe", out_json, [&](Json& out) {
    const auto& S = need(set);
    auto probe = sdio::gcd_probe(S, need(f), parse_unit_pairs(need(pairs, "pairs"), S), epsilon);
    out = sj::record("gcd-probe", true);
    out.update(sj::probe_payload(probe));
    return SDIO_OK;
  });
}

}  // extern "C"
