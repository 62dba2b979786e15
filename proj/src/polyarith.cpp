#include "sdio/polyarith.hpp"

#include <algorithm>

#include "sdio/error.hpp"

namespace sdio {

Rational eval_poly(const IntPoly& f, const Rational& x) { return f(x); }
Rational eval_poly(const RatPoly& f, const Rational& x) { return f(x); }
BigInt eval_poly(const IntPoly& f, const BigInt& x) { return f(x); }

RatPoly lagrange_interpolate(const std::vector<InterpolationPoint>& points) {
  if (points.empty()) fail(ErrorCode::InvalidInput, "interpolation needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].node == points[j].node)
        fail(ErrorCode::NonDistinctNodes, "interpolation node " + to_string(points[i].node) + " repeats");
    }
  }
  RatPoly result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    RatPoly basis = RatPoly::constant(Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis *= RatPoly{Rational(-points[j].node), Rational(1)};
      denom *= points[i].node - points[j].node;
    }
    Rational scale = points[i].value / denom;
    result += scale * basis;
  }
  return result;
}

ClearedPoly clear_denominators(const RatPoly& g) {
  if (g.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot clear denominators of the zero polynomial");
  BigInt d = 1;
  for (const auto& c : g.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  const Rational scale(d * d);
  std::vector<BigInt> c;
  c.reserve(g.coeffs().size());
  for (const auto& q : g.coeffs()) {
    Rational v = q * scale;
    c.push_back(v.get_num());
  }
  return {d, IntPoly(std::move(c))};
}

BigInt content(const IntPoly& f) {
  if (f.is_zero()) return 0;
  BigInt g = 0;
  for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (f.leading() < 0) g = -g;
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  BigInt g = content(f);
  std::vector<BigInt> c = f.coeffs();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

namespace {

// lc(b)^k * a mod b for a suitable k; only its primitive part matters.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t m = bc.size() - 1;
  const BigInt& lb = bc.back();
  while (!r.empty() && r.size() - 1 >= m) {
    const std::size_t shift = r.size() - 1 - m;
    BigInt lead = r.back();
    for (auto& v : r) v *= lb;
    for (std::size_t i = 0; i <= m; ++i) r[i + shift] -= lead * bc[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) break;
    // Shrink by the content now and then so sizes stay bounded.
    BigInt g = 0;
    for (const auto& v : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1) {
      for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidInput, "division by the zero polynomial");
  if (a.is_zero()) return a;
  if (a.degree() < b.degree()) fail(ErrorCode::InvalidInput, "inexact polynomial division");
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t m = bc.size() - 1;
  std::vector<BigInt> q(r.size() - m);
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt lead = r[k + m];
    if (!mpz_divisible_p(lead.get_mpz_t(), bc.back().get_mpz_t()))
      fail(ErrorCode::InvalidInput, "inexact polynomial division");
    mpz_divexact(q[k].get_mpz_t(), lead.get_mpz_t(), bc.back().get_mpz_t());
    for (std::size_t i = 0; i <= m; ++i) r[k + i] -= q[k] * bc[i];
  }
  for (const auto& v : r) {
    if (v != 0) fail(ErrorCode::InvalidInput, "inexact polynomial division");
  }
  return IntPoly(std::move(q));
}

SquarefreeDecomposition yun_squarefree(const IntPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree decomposition of the zero polynomial");
  SquarefreeDecomposition out;
  if (f.degree() == 0) {
    out.content = Rational(f.coeffs()[0]);
    return out;
  }
  IntPoly fp = f.derivative();
  IntPoly a0 = poly_gcd(f, fp);
  IntPoly b = divide_exact(f, a0);
  IntPoly c = divide_exact(fp, a0);
  IntPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    IntPoly a = poly_gcd(b, d);
    if (a.degree() > 0) out.parts.push_back({i, a});
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - b.derivative();
    ++i;
  }
  BigInt lc_product = 1;
  for (const auto& part : out.parts) lc_product *= pow(part.factor.leading(), part.multiplicity);
  out.content = Rational(f.leading(), lc_product);
  out.content.canonicalize();
  return out;
}

unsigned odd_multiplicity_root_count(const IntPoly& f) {
  unsigned t = 0;
  for (const auto& part : yun_squarefree(f).parts) {
    if (part.multiplicity % 2 == 1) t += static_cast<unsigned>(part.factor.degree());
  }
  return t;
}

unsigned odd_multiplicity_root_count(const RatPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "root count of the zero polynomial");
  return odd_multiplicity_root_count(clear_denominators(f).f);
}

unsigned odd_multiplicity_nonzero_root_count(const IntPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "root count of the zero polynomial");
  const auto& c = f.coeffs();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  return odd_multiplicity_root_count(IntPoly(std::vector<BigInt>(c.begin() + static_cast<long>(low), c.end())));
}

HypothesisReport check_theorem_hypotheses(const IntPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "hypothesis check of the zero polynomial");
  HypothesisReport r;
  r.nonconstant = f.degree() >= 1;
  r.nonzero_at_origin = f.coeff(0) != 0;
  r.odd_root_count = odd_multiplicity_root_count(f);
  r.positive_leading = f.leading() > 0;
  r.satisfies_theorem = r.nonconstant && r.nonzero_at_origin && r.odd_root_count >= 1;
  return r;
}

bool satisfies_scaling_identity(const IntPoly& f, const Rational& phi) {
  if (phi <= 0) fail(ErrorCode::InvalidInput, "scaling factor must be positive");
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "scaling identity of the zero polynomial");
  const long n = f.degree();
  const Rational top = pow(phi, n);
  Rational phi_i = 1;
  for (long i = 0; i <= n; ++i) {
    const Rational& lhs_scale = phi_i;
    if (f.coeffs()[i] != 0 && lhs_scale != top) return false;
    phi_i *= phi;
  }
  return true;
}

RatPoly compose_scaled_power(const IntPoly& f, const Rational& eta, unsigned d) {
  if (eta <= 0) fail(ErrorCode::InvalidInput, "eta must be positive");
  if (d == 0) return RatPoly::constant(eval_poly(f, eta));
  if (f.is_zero()) return {};
  std::vector<Rational> c(static_cast<std::size_t>(f.degree()) * d + 1, Rational(0));
  Rational eta_i = 1;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    c[i * d] = Rational(f.coeffs()[i]) * eta_i;
    eta_i *= eta;
  }
  return RatPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Monotone segments

namespace {

// g(n + 1) - g(n) as a polynomial in n.
IntPoly forward_difference(const IntPoly& g) {
  if (g.degree() <= 0) return {};
  IntPoly shifted;
  IntPoly x_plus_one{BigInt(1), BigInt(1)};
  for (int i = g.degree(); i >= 0; --i) shifted = shifted * x_plus_one + IntPoly::constant(g.coeffs()[i]);
  return shifted - g;
}

// Break points lo = b_0 < ... < b_k = hi such that g is monotone on every
// integer range [b_i, b_{i+1}].
std::vector<BigInt> monotone_breaks(const IntPoly& g, const BigInt& lo, const BigInt& hi) {
  if (g.degree() <= 1 || lo >= hi) return {lo, hi};
  IntPoly dg = forward_difference(g);
  std::vector<BigInt> sub = monotone_breaks(dg, lo, BigInt(hi - 1));
  std::vector<BigInt> out = sub;
  out.push_back(hi);
  // On each sub range dg is monotone, so "dg(n) >= 0" flips at most once.
  for (std::size_t k = 0; k + 1 < sub.size(); ++k) {
    const BigInt& a = sub[k];
    const BigInt& b = sub[k + 1];
    const bool pa = dg(a) >= 0;
    if ((dg(b) >= 0) == pa) continue;
    BigInt left = a, right = b;  // predicate(left) == pa, predicate(right) != pa
    while (right - left > 1) {
      BigInt mid = (left + right) / 2;
      if ((dg(mid) >= 0) == pa) left = mid;
      else right = mid;
    }
    out.push_back(right);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Cauchy bound: every real root of g has |x| < 2 + max|c_i| / |c_n|.
BigInt root_bound(const IntPoly& g) {
  BigInt m = 0;
  const BigInt lead = abs(g.leading());
  for (int i = 0; i < g.degree(); ++i) {
    BigInt q = abs(g.coeffs()[i]) / lead;
    if (q > m) m = q;
  }
  return m + 2;
}

}  // namespace

MonotoneSegments::MonotoneSegments(IntPoly f) : f_(std::move(f)) {
  if (f_.degree() <= 0) return;
  const bool up = f_.leading() > 0;
  if (f_.degree() == 1) {
    segments_.push_back({BigInt(1), BigInt(1), up, true});
    return;
  }
  BigInt tail = std::max(BigInt(1), root_bound(forward_difference(f_)));
  std::vector<BigInt> breaks = monotone_breaks(f_, BigInt(1), tail);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const BigInt& a = breaks[i];
    const BigInt& b = breaks[i + 1];
    if (a == b) continue;
    segments_.push_back({a, b, f_(b) >= f_(a), false});
  }
  segments_.push_back({tail, tail, up, true});
}

std::vector<BigInt> MonotoneSegments::positive_preimages(const BigInt& target) const {
  if (f_.degree() <= 0) {
    if (f_.coeff(0) == target)
      fail(ErrorCode::ConstantPolynomial, "constant polynomial takes the target value everywhere");
    return {};
  }
  std::vector<BigInt> roots;
  for (const auto& seg : segments_) {
    const bool up = seg.increasing;
    // "reached(n)": f(n) has arrived at or passed the target in the
    // segment's direction.
    auto reached = [&](const BigInt& n) { return up ? f_(n) >= target : f_(n) <= target; };
    BigInt lo = seg.lo, hi = seg.hi;
    if (seg.unbounded) {
      BigInt step = 1;
      hi = lo;
      while (!reached(hi)) {
        hi = lo + step;
        step *= 2;
      }
    } else if (!reached(hi)) {
      continue;
    }
    if (reached(lo)) {
      hi = lo;
    } else {
      while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (reached(mid)) hi = mid;
        else lo = mid;
      }
    }
    const BigInt end = seg.unbounded ? BigInt(hi + f_.degree() + 1) : seg.hi;
    for (BigInt n = hi; n <= end && f_(n) == target; ++n) roots.push_back(n);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

BigInt MonotoneSegments::scan_limit(const BigInt& lo, const BigInt& hi) const {
  if (f_.degree() <= 0) fail(ErrorCode::ConstantPolynomial, "scan limit of a constant polynomial");
  const auto& tail = segments_.back();
  auto outside = [&](const BigInt& n) { return tail.increasing ? f_(n) > hi : f_(n) < lo; };
  BigInt a = tail.lo;
  if (outside(a)) return a;
  BigInt step = 1, b = a + 1;
  while (!outside(b)) {
    a = b;
    step *= 2;
    b = a + step;
  }
  while (b - a > 1) {
    BigInt mid = (a + b) / 2;
    if (outside(mid)) b = mid;
    else a = mid;
  }
  return a;
}

}  // namespace sdio
