#ifndef SDIO_POLYNOMIAL_HPP
#define SDIO_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "sdio/numbers.hpp"

namespace sdio {

// Dense univariate polynomial, coefficients in ascending degree order with
// trailing zeros trimmed. The zero polynomial has no coefficients and
// degree -1.
template <class Coeff>
class Polynomial {
 public:
  using coeff_type = Coeff;

  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { normalize(); }

  static Polynomial constant(Coeff v) { return Polynomial(std::vector<Coeff>{std::move(v)}); }
  static Polynomial monomial(Coeff v, std::size_t degree) {
    std::vector<Coeff> c(degree + 1);
    c[degree] = std::move(v);
    return Polynomial(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }

  const std::vector<Coeff>& coeffs() const noexcept { return c_; }
  Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  const Coeff& leading() const { return c_.back(); }

  template <class X>
  X operator()(const X& x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Coeff> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const Coeff& k, const Polynomial& p) {
    std::vector<Coeff> r = p.c_;
    for (auto& v : r) v *= k;
    return Polynomial(std::move(r));
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(Coeff(1)), base = *this;
    while (e) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void normalize() {
    if constexpr (std::is_same_v<Coeff, Rational>) {
      for (auto& v : c_) v.canonicalize();
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<Rational>;

// Text format: comma-separated ascending coefficients, e.g. "-1,-1,1" for
// X^2 - X - 1. RatPoly accepts "p/q" entries. The zero polynomial prints
// as "0".
IntPoly parse_int_poly(std::string_view text);
RatPoly parse_rat_poly(std::string_view text);
std::string format_poly(const IntPoly& f);
std::string format_poly(const RatPoly& f);

// Human-readable form such as "X^2 - X - 1", for logs and messages.
std::string pretty_poly(const RatPoly& f);

RatPoly to_rat(const IntPoly& f);

}  // namespace sdio

#endif
