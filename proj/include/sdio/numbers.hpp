#ifndef SDIO_NUMBERS_HPP
#define SDIO_NUMBERS_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace sdio {

using BigInt = mpz_class;
using Rational = mpq_class;

// Strict decimal parsing: optional sign, digits only, surrounding blanks
// tolerated. Throws ParseError.
BigInt parse_bigint(std::string_view text);

// "p" or "p/q", reduced to lowest terms with positive denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& n);
// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

// Splits on commas, trimming blanks. An empty input yields an empty list.
std::vector<std::string> split_list(std::string_view text, char sep = ',');

std::vector<BigInt> parse_bigint_list(std::string_view text);

BigInt pow(const BigInt& base, unsigned long exponent);
Rational pow(const Rational& base, long exponent);

// Natural logarithm of a positive integer of any size.
double log_abs(const BigInt& n);

inline bool fits_i64(const BigInt& n) { return n.fits_slong_p(); }

}  // namespace sdio

#endif
