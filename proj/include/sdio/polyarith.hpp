#ifndef SDIO_POLYARITH_HPP
#define SDIO_POLYARITH_HPP

#include <utility>
#include <vector>

#include "sdio/numbers.hpp"
#include "sdio/polynomial.hpp"

namespace sdio {

Rational eval_poly(const IntPoly& f, const Rational& x);
Rational eval_poly(const RatPoly& f, const Rational& x);
BigInt eval_poly(const IntPoly& f, const BigInt& x);

struct InterpolationPoint {
  Rational node;
  Rational value;
};

// Unique polynomial of degree < points.size() through every point.
// Throws NonDistinctNodes, InvalidInput on an empty list.
RatPoly lagrange_interpolate(const std::vector<InterpolationPoint>& points);

struct ClearedPoly {
  BigInt d;   // lcm of the coefficient denominators
  IntPoly f;  // d^2 * g
};

// Throws ZeroPolynomial.
ClearedPoly clear_denominators(const RatPoly& g);

// Integer content with the sign of the leading coefficient; 0 for zero.
BigInt content(const IntPoly& f);
// f / content(f): primitive with positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);

// Primitive gcd over Z[X] with positive leading coefficient (primitive
// pseudo-remainder sequence). gcd(0, 0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Exact quotient a / b over Z[X]; throws InvalidInput if b does not divide a.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// Squarefree decomposition input = content * prod parts[k].factor^parts[k].multiplicity.
struct SquarefreeDecomposition {
  struct Part {
    unsigned multiplicity;
    IntPoly factor;  // squarefree, primitive, positive leading coefficient
  };
  Rational content;
  std::vector<Part> parts;  // multiplicities strictly increasing
};

// Yun's algorithm. Throws ZeroPolynomial.
SquarefreeDecomposition yun_squarefree(const IntPoly& f);

// Number of distinct complex roots of odd multiplicity, read off the Yun
// factor degrees. Throws ZeroPolynomial.
unsigned odd_multiplicity_root_count(const IntPoly& f);
unsigned odd_multiplicity_root_count(const RatPoly& f);
// Same count with the root 0 left out.
unsigned odd_multiplicity_nonzero_root_count(const IntPoly& f);

struct HypothesisReport {
  bool nonconstant = false;
  bool nonzero_at_origin = false;
  unsigned odd_root_count = 0;
  bool positive_leading = false;
  bool satisfies_theorem = false;
};

// Hypotheses of the finiteness theorem for triples. positive_leading is
// advisory. Throws ZeroPolynomial.
HypothesisReport check_theorem_hypotheses(const IntPoly& f);

// Whether f(phi X) == phi^deg(f) f(X) as polynomials. Throws InvalidInput
// for phi <= 0, ZeroPolynomial for f = 0.
bool satisfies_scaling_identity(const IntPoly& f, const Rational& phi);

// f(eta * X^d). d = 0 gives the constant f(eta). Throws InvalidInput for
// eta <= 0.
RatPoly compose_scaled_power(const IntPoly& f, const Rational& eta, unsigned d);

// Breaks [1, inf) into integer segments on which n -> f(n) is monotone.
// The split points come from sign changes of the forward difference
// f(n+1) - f(n), located by exact bisection; the last segment is
// unbounded and monotone in the direction of the leading coefficient.
class MonotoneSegments {
 public:
  explicit MonotoneSegments(IntPoly f);

  struct Segment {
    BigInt lo;
    BigInt hi;  // inclusive; ignored for the tail segment
    bool increasing;
    bool unbounded;
  };

  const IntPoly& poly() const noexcept { return f_; }
  const std::vector<Segment>& segments() const noexcept { return segments_; }

  // All integers n >= 1 with f(n) == target, ascending. Throws
  // ConstantPolynomial when f is constant and equals target.
  std::vector<BigInt> positive_preimages(const BigInt& target) const;

  // Smallest M such that f(n) lies outside [lo, hi] for every n > M.
  BigInt scan_limit(const BigInt& lo, const BigInt& hi) const;

 private:
  IntPoly f_;
  std::vector<Segment> segments_;
};

}  // namespace sdio

#endif
