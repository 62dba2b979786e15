#include "sdio/prooflab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sdio/error.hpp"
#include "sdio/polyarith.hpp"

namespace sdio {

GcdProbeResult gcd_probe(const PrimeSet& S, const IntPoly& f, const std::vector<std::pair<SUnit, SUnit>>& pairs,
                         double epsilon) {
  if (!(epsilon > 0)) fail(ErrorCode::InvalidInput, "epsilon must be positive");
  GcdProbeResult out{epsilon, {}, {}};
  for (const auto& [v, w] : pairs) {
    if (v.exponents().size() != S.size() || w.exponents().size() != S.size())
      fail(ErrorCode::InvalidInput, "S-unit does not belong to the prime set");
    BigInt fv = f(v.value()), fw = f(w.value());
    if (fv < 1 || fw < 1)
      fail(ErrorCode::InvalidInput, "f must be positive at " + to_string(v.value()) + " and " + to_string(w.value()));
    BigInt g = gcd_via_valuations(fv, fw);
    const double height = std::max(weil_height(v), weil_height(w));
    double ratio;
    if (height > 0) ratio = weil_height(g) / height;
    else ratio = g == 1 ? 0.0 : std::numeric_limits<double>::infinity();
    const bool flagged = ratio > epsilon;
    out.summary.count++;
    if (flagged) out.summary.flagged++;
    out.summary.max_ratio = std::max(out.summary.max_ratio, ratio);
    out.samples.push_back({v, w, std::move(fv), std::move(fw), std::move(g), ratio, flagged});
  }
  return out;
}

DependenceRelation relation_through(const PrimeSet& S, long k, long l, const SUnit& v, const SUnit& w) {
  ExpVector g = v.exp_vector() * k + w.exp_vector() * l;
  return {k, l, g.value(S), g};
}

bool satisfies_relation(const DependenceRelation& rel, const SUnit& v, const SUnit& w) {
  return v.exp_vector() * rel.k + w.exp_vector() * rel.l == rel.g_exponents;
}

DependenceResult detect_dependence(const PrimeSet& S, const std::vector<std::pair<SUnit, SUnit>>& pairs) {
  std::vector<std::pair<SUnit, SUnit>> distinct;
  for (const auto& p : pairs) {
    if (p.first.exponents().size() != S.size() || p.second.exponents().size() != S.size())
      fail(ErrorCode::InvalidInput, "S-unit does not belong to the prime set");
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
  }
  if (distinct.size() < 2) fail(ErrorCode::InsufficientData, "need at least two distinct pairs");

  // Rows (dv_i, dw_i) of the stacked difference matrix; the relation is
  // its kernel.
  const ExpVector v0 = distinct[0].first.exp_vector(), w0 = distinct[0].second.exp_vector();
  std::vector<std::pair<long, long>> rows;
  for (std::size_t j = 1; j < distinct.size(); ++j) {
    ExpVector dv = distinct[j].first.exp_vector() - v0;
    ExpVector dw = distinct[j].second.exp_vector() - w0;
    for (std::size_t i = 0; i < S.size(); ++i) rows.emplace_back(dv[i], dw[i]);
  }
  auto pivot = std::find_if(rows.begin(), rows.end(), [](const auto& r) { return r.first != 0 || r.second != 0; });
  if (pivot == rows.end()) return DegenerateFamily{"all pairs coincide; every (k, l) is a relation"};
  const auto [alpha, beta] = *pivot;
  for (const auto& [gamma, delta] : rows) {
    if (BigInt(alpha) * delta != BigInt(beta) * gamma) return NoRelation{};
  }
  long k = beta, l = -alpha;
  const long g = std::gcd(k, l);
  k /= g;
  l /= g;
  if (k == 0) return DegenerateFamily{"kernel vector has k = 0 (w is constant across the pairs)"};
  if (k < 0) {
    k = -k;
    l = -l;
  }
  return relation_through(S, k, l, distinct[0].first, distinct[0].second);
}

ExpVector parametrize_pair_family(const DependenceRelation& rel, const std::pair<SUnit, SUnit>& base,
                                  const std::pair<SUnit, SUnit>& sample) {
  if (rel.k <= 0) fail(ErrorCode::InvalidInput, "relation must have k > 0");
  if (!satisfies_relation(rel, base.first, base.second) || !satisfies_relation(rel, sample.first, sample.second))
    fail(ErrorCode::NotInFamily, "pair does not satisfy the relation");
  const ExpVector dw = sample.second.exp_vector() - base.second.exp_vector();
  const ExpVector dv = sample.first.exp_vector() - base.first.exp_vector();
  ExpVector mu = ExpVector::zero(dw.size());
  for (std::size_t i = 0; i < dw.size(); ++i) {
    if (dw[i] % rel.k != 0) fail(ErrorCode::NotInFamily, "w exponent step is not a multiple of k");
    mu[i] = dw[i] / rel.k;
    if (dv[i] != -rel.l * mu[i]) fail(ErrorCode::NotInFamily, "v does not follow v_base * rho^{-l}");
  }
  return mu;
}

FamilyParam combine_dependences(const PrimeSet& S, const DependenceRelation& rel_vw,
                                const DependenceRelation& rel_uw, const SUnitTriple& base,
                                const SUnitTriple& sample) {
  const long k = rel_vw.k, l = rel_vw.l, m = rel_uw.k, r = rel_uw.l;
  if (k <= 0 || m <= 0) fail(ErrorCode::InvalidInput, "relations must have a positive first exponent");
  if (!satisfies_relation(rel_vw, base.v, base.w) || !satisfies_relation(rel_vw, sample.v, sample.w))
    fail(ErrorCode::InconsistentRelations, "(v, w) relation does not hold on base and sample");
  if (!satisfies_relation(rel_uw, base.u, base.w) || !satisfies_relation(rel_uw, sample.u, sample.w))
    fail(ErrorCode::InconsistentRelations, "(u, w) relation does not hold on base and sample");

  FamilyParam fp{base, sample};
  if (r != 0) {
    const long lcm = std::lcm(k, m);
    const long k_tilde = lcm / k, m_tilde = lcm / m;
    fp.x = -r * m_tilde;
    fp.y = -l * k_tilde;
    fp.z = lcm;
  } else {
    fp.x = 0;
    fp.y = -l;
    fp.z = k;
  }
  if (fp.x < 0 || fp.y <= 0 || fp.z <= 0)
    fail(ErrorCode::InvalidInput, "family needs x >= 0, y > 0, z > 0 (l < 0 and r <= 0)");

  const ExpVector du = sample.u.exp_vector() - base.u.exp_vector();
  const ExpVector dv = sample.v.exp_vector() - base.v.exp_vector();
  const ExpVector dw = sample.w.exp_vector() - base.w.exp_vector();
  fp.psi = ExpVector::zero(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (dw[i] % fp.z != 0) fail(ErrorCode::NotInFamily, "w exponent step is not a multiple of z");
    fp.psi[i] = dw[i] / fp.z;
  }
  if (du != fp.psi * fp.x) fail(ErrorCode::NotInFamily, "u does not follow u_base * eta^x");
  if (dv != fp.psi * fp.y) fail(ErrorCode::NotInFamily, "v does not follow v_base * eta^y");
  return fp;
}

std::pair<long, long> split_mod3(long n) {
  long beta = ((n % 3) + 3) % 3;
  return {(n - beta) / 3, beta};
}

FamilyParam normalize_mod3(const PrimeSet& S, FamilyParam fp) {
  const std::size_t h = S.size();
  if (fp.psi.size() != h) fail(ErrorCode::InvalidInput, "psi has the wrong length");
  fp.t = ExpVector::zero(h);
  fp.beta.assign(h, 0);
  for (std::size_t i = 0; i < h; ++i) {
    auto [t, beta] = split_mod3(fp.psi[i]);
    fp.t[i] = t;
    fp.beta[i] = beta;
  }
  const ExpVector beta_vec(std::vector<long>(fp.beta.begin(), fp.beta.end()));
  const std::array<const SUnit*, 3> bases{&fp.base.u, &fp.base.v, &fp.base.w};
  const std::array<const SUnit*, 3> samples{&fp.sample.u, &fp.sample.v, &fp.sample.w};
  const std::array<long, 3> scale{fp.x, fp.y, fp.z};
  fp.X_exponents = fp.t;
  fp.X = fp.t.value(S);
  for (std::size_t j = 0; j < 3; ++j) {
    fp.eta_exponents[j] = bases[j]->exp_vector() + beta_vec * scale[j];
    fp.eta[j] = fp.eta_exponents[j].value(S);
    fp.d[j] = 3 * scale[j];
    if (Rational(samples[j]->value()) != fp.eta[j] * pow(fp.X, fp.d[j]))
      fail(ErrorCode::ReconstructionFailure,
           "eta_" + std::to_string(j + 1) + " X^d_" + std::to_string(j + 1) + " does not reproduce the sample");
  }
  if (!(fp.d[0] <= fp.d[1] && fp.d[1] <= fp.d[2])) fp.warnings.push_back("d1 <= d2 <= d3 does not hold for this sample");
  fp.normalized = true;
  return fp;
}

RatPoly build_leveque_curve(const IntPoly& f, const std::array<Rational, 3>& eta, const std::array<long, 3>& d) {
  if (f.degree() <= 0) fail(ErrorCode::ConstantPolynomial, "curve construction needs a non-constant f");
  RatPoly F = RatPoly::constant(Rational(1));
  for (std::size_t j = 0; j < 3; ++j) {
    if (d[j] < 0) fail(ErrorCode::InvalidInput, "exponents d_j must be non-negative");
    F *= compose_scaled_power(f, eta[j], static_cast<unsigned>(d[j]));
  }
  return F;
}

RatPoly build_leveque_curve(const IntPoly& f, const FamilyParam& fp) {
  if (!fp.normalized) fail(ErrorCode::InvalidInput, "family parameters are not normalized");
  return build_leveque_curve(f, fp.eta, fp.d);
}

std::string_view verdict_name(AuditVerdict v) noexcept {
  return v == AuditVerdict::FinitenessForced ? "FinitenessForced" : "Inconclusive";
}

AuditResult audit_odd_roots(const RatPoly& F) {
  if (F.is_zero()) fail(ErrorCode::ZeroPolynomial, "audit of the zero polynomial");
  const unsigned t = odd_multiplicity_root_count(F);
  return {t, t >= 3 ? AuditVerdict::FinitenessForced : AuditVerdict::Inconclusive};
}

bool triple_gcd_chain_holds(const TupleRecord& triple) {
  if (triple.values.size() != 3) fail(ErrorCode::InvalidInput, "gcd chain applies to triples");
  const BigInt& a = triple.values[0];
  const BigInt& b = triple.values[1];
  const BigInt& c = triple.values[2];
  const BigInt fv = triple.poly(triple.witness(0, 2).s.value());
  const BigInt fw = triple.poly(triple.witness(1, 2).s.value());
  if (fv < 1 || fw < 1) return false;
  const BigInt g = gcd_via_valuations(fv, fw);
  BigInt gab;
  mpz_gcd(gab.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return mpz_divisible_p(g.get_mpz_t(), c.get_mpz_t()) && g == c * gab;
}

}  // namespace sdio
