#ifndef SDIO_PROOFLAB_HPP
#define SDIO_PROOFLAB_HPP

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sdio/numbers.hpp"
#include "sdio/polynomial.hpp"
#include "sdio/search.hpp"
#include "sdio/sunit.hpp"

namespace sdio {

// ---------------------------------------------------------------------------
// gcd growth probe

struct GcdProbeSample {
  SUnit v;
  SUnit w;
  BigInt fv;
  BigInt fw;
  BigInt gcd_value;
  double ratio;  // log(gcd) / max(h(v), h(w)); +inf when both heights are 0 and gcd > 1
  bool flagged;  // ratio > epsilon
};

struct GcdProbeSummary {
  std::size_t count = 0;
  std::size_t flagged = 0;
  double max_ratio = 0.0;
};

struct GcdProbeResult {
  double epsilon;
  std::vector<GcdProbeSample> samples;
  GcdProbeSummary summary;
};

inline constexpr double kDefaultProbeEpsilon = 0.25;

// Throws InvalidInput if f(v) or f(w) is not positive for some pair.
GcdProbeResult gcd_probe(const PrimeSet& S, const IntPoly& f, const std::vector<std::pair<SUnit, SUnit>>& pairs,
                         double epsilon = kDefaultProbeEpsilon);

// ---------------------------------------------------------------------------
// Multiplicative dependence  v^k w^l = g

struct DependenceRelation {
  long k;  // > 0
  long l;  // gcd(k, |l|) = 1
  Rational g;
  ExpVector g_exponents;
};

struct NoRelation {};
struct DegenerateFamily {
  std::string why;
};

using DependenceResult = std::variant<DependenceRelation, NoRelation, DegenerateFamily>;

// Integer kernel of the stacked exponent differences. Duplicate pairs are
// ignored; fewer than two distinct pairs throws InsufficientData.
DependenceResult detect_dependence(const PrimeSet& S, const std::vector<std::pair<SUnit, SUnit>>& pairs);

// Relation for (v, w) anchored at the given pair: g = v^k w^l.
DependenceRelation relation_through(const PrimeSet& S, long k, long l, const SUnit& v, const SUnit& w);

bool satisfies_relation(const DependenceRelation& rel, const SUnit& v, const SUnit& w);

// rho with w = w_base rho^k and v = v_base rho^{-l}. Throws NotInFamily.
ExpVector parametrize_pair_family(const DependenceRelation& rel, const std::pair<SUnit, SUnit>& base,
                                  const std::pair<SUnit, SUnit>& sample);

// ---------------------------------------------------------------------------
// Family parametrization through the mod-3 normalization

struct SUnitTriple {
  SUnit u, v, w;
};

struct FamilyParam {
  SUnitTriple base;
  SUnitTriple sample;
  long x = 0, y = 0, z = 0;
  ExpVector psi{};
  // Filled by normalize_mod3.
  ExpVector t{};
  std::vector<long> beta{};
  std::array<ExpVector, 3> eta_exponents{};
  std::array<Rational, 3> eta{};
  std::array<long, 3> d{};
  ExpVector X_exponents{};
  Rational X{};
  std::vector<std::string> warnings{};
  bool normalized = false;
};

// Combines v^k w^l = g and u^m w^r = s sharing the base w. Throws
// InconsistentRelations when base or sample violates a relation, NotInFamily
// when the exponent bookkeeping fails (non-integral psi or a reconstruction
// mismatch), InvalidInput when (x, y, z) come out with x < 0 or y, z <= 0.
FamilyParam combine_dependences(const PrimeSet& S, const DependenceRelation& rel_vw,
                                const DependenceRelation& rel_uw, const SUnitTriple& base,
                                const SUnitTriple& sample);

// psi_i = 3 t_i + beta_i with beta_i in {0, 1, 2}; fills eta, d, X and
// checks u = eta_1 X^{d_1} (same for v, w). Throws ReconstructionFailure.
FamilyParam normalize_mod3(const PrimeSet& S, FamilyParam fp);

// Euclidean split n = 3 t + beta, beta in {0, 1, 2}.
std::pair<long, long> split_mod3(long n);

// ---------------------------------------------------------------------------
// Curve and odd-root audit

// f(eta_1 X^{d_1}) f(eta_2 X^{d_2}) f(eta_3 X^{d_3}). Throws
// ConstantPolynomial for constant f.
RatPoly build_leveque_curve(const IntPoly& f, const std::array<Rational, 3>& eta, const std::array<long, 3>& d);
RatPoly build_leveque_curve(const IntPoly& f, const FamilyParam& fp);

enum class AuditVerdict { FinitenessForced, Inconclusive };

struct AuditResult {
  unsigned t_F;
  AuditVerdict verdict;
};

std::string_view verdict_name(AuditVerdict v) noexcept;

// t_F >= 3 odd-multiplicity roots rules out infinitely many quasi-integral
// points on Y^2 = F(X). Throws ZeroPolynomial.
AuditResult audit_odd_roots(const RatPoly& F);

// c | gcd(f(v), f(w)) and gcd(f(v), f(w)) = c gcd(a, b) for a verified
// triple (a, b, c) with witnesses (u, v, w).
bool triple_gcd_chain_holds(const TupleRecord& triple);

}  // namespace sdio

#endif
