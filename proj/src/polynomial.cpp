#include "sdio/polynomial.hpp"

#include "sdio/error.hpp"

namespace sdio {

IntPoly parse_int_poly(std::string_view text) {
  auto items = split_list(text);
  if (items.empty()) fail(ErrorCode::ParseError, "empty polynomial");
  std::vector<BigInt> c;
  c.reserve(items.size());
  for (const auto& item : items) {
    if (item.find('/') != std::string::npos) {
      Rational q = parse_rational(item);
      if (q.get_den() != 1) fail(ErrorCode::ParseError, "non-integral coefficient '" + item + "' in integer polynomial");
      c.push_back(q.get_num());
    } else {
      c.push_back(parse_bigint(item));
    }
  }
  return IntPoly(std::move(c));
}

RatPoly parse_rat_poly(std::string_view text) {
  auto items = split_list(text);
  if (items.empty()) fail(ErrorCode::ParseError, "empty polynomial");
  std::vector<Rational> c;
  c.reserve(items.size());
  for (const auto& item : items) c.push_back(parse_rational(item));
  return RatPoly(std::move(c));
}

namespace {

template <class P>
std::string format_impl(const P& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += to_string(f.coeffs()[i]);
  }
  return out;
}

}  // namespace

std::string format_poly(const IntPoly& f) { return format_impl(f); }
std::string format_poly(const RatPoly& f) { return format_impl(f); }

std::string pretty_poly(const RatPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    Rational c = f.coeffs()[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = mag == 1;
    if (!unit || i == 0) out += to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += "X";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

RatPoly to_rat(const IntPoly& f) {
  std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
  return RatPoly(std::move(c));
}

}  // namespace sdio
