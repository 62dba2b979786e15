#include "sdio/numbers.hpp"

#include <cctype>
#include <cmath>

#include "sdio/error.hpp"

namespace sdio {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonDistinctNodes: return "NonDistinctNodes";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::NotInFamily: return "NotInFamily";
    case ErrorCode::InconsistentRelations: return "InconsistentRelations";
    case ErrorCode::ReconstructionFailure: return "ReconstructionFailure";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) fail(ErrorCode::ParseError, "expected an integer, got '" + std::string(text) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(ErrorCode::ParseError, "expected an integer, got '" + std::string(text) + "'");
  }
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return BigInt(buf, 10);
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(s));
  BigInt num = parse_bigint(s.substr(0, slash));
  BigInt den = parse_bigint(s.substr(slash + 1));
  if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& n) { return n.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    auto piece = trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    out.emplace_back(piece);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<BigInt> parse_bigint_list(std::string_view text) {
  std::vector<BigInt> out;
  for (const auto& item : split_list(text)) out.push_back(parse_bigint(item));
  return out;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Rational r(pow(base.get_num(), e), pow(base.get_den(), e));
  r.canonicalize();
  if (exponent < 0) {
    if (r == 0) fail(ErrorCode::InvalidInput, "zero raised to a negative power");
    r = 1 / r;
  }
  return r;
}

double log_abs(const BigInt& n) {
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace sdio
