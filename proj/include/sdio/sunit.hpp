#ifndef SDIO_SUNIT_HPP
#define SDIO_SUNIT_HPP

#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "sdio/numbers.hpp"

namespace sdio {

// Sorted set of distinct primes S = {p_1, ..., p_h}, each below 2^64.
class PrimeSet {
 public:
  // Validates: non-empty, no duplicates, every member prime. Input order
  // does not matter; members are stored ascending.
  explicit PrimeSet(std::vector<BigInt> primes);

  // "2,3,193"
  static PrimeSet parse(std::string_view text);
  // One prime per line; blank lines and '#' comments are ignored.
  static PrimeSet load_file(const std::string& path);

  std::size_t size() const noexcept { return primes_.size(); }
  const BigInt& operator[](std::size_t i) const { return primes_[i]; }
  const std::vector<BigInt>& primes() const noexcept { return primes_; }

  std::optional<std::size_t> index_of(const BigInt& p) const;
  bool contains(const BigInt& p) const { return index_of(p).has_value(); }

  std::string to_string() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<BigInt> primes_;
};

// Signed exponent vector over a PrimeSet; represents the positive
// rational prod p_i^{e_i}.
class ExpVector {
 public:
  ExpVector() = default;
  explicit ExpVector(std::vector<long> entries) : entries_(std::move(entries)) {}
  static ExpVector zero(std::size_t h) { return ExpVector(std::vector<long>(h, 0)); }

  std::size_t size() const noexcept { return entries_.size(); }
  long operator[](std::size_t i) const { return entries_[i]; }
  long& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<long>& entries() const noexcept { return entries_; }

  bool is_zero() const;
  bool is_nonnegative() const;

  Rational value(const PrimeSet& S) const;

  ExpVector operator+(const ExpVector& o) const;
  ExpVector operator-(const ExpVector& o) const;
  ExpVector operator*(long k) const;

  friend bool operator==(const ExpVector&, const ExpVector&) = default;

 private:
  std::vector<long> entries_;
};

// Factors a positive rational completely over S; nullopt if some prime
// outside S appears.
std::optional<ExpVector> exponents_over(const Rational& q, const PrimeSet& S);

// Positive S-smooth integer with its exponent vector. The value is always
// consistent with the exponents.
class SUnit {
 public:
  SUnit(const PrimeSet& S, std::vector<unsigned long> exponents);
  // Identity element for a set of size h.
  static SUnit one(const PrimeSet& S);

  const BigInt& value() const noexcept { return value_; }
  const std::vector<unsigned long>& exponents() const noexcept { return exponents_; }
  ExpVector exp_vector() const;

  friend bool operator==(const SUnit& a, const SUnit& b) { return a.exponents_ == b.exponents_; }
  friend auto operator<=>(const SUnit& a, const SUnit& b) { return cmp(a.value_, b.value_) <=> 0; }

 private:
  SUnit(std::vector<unsigned long> exponents, BigInt value)
      : exponents_(std::move(exponents)), value_(std::move(value)) {}
  friend class SmoothEnumerator;
  friend std::optional<SUnit> factor_smooth(const BigInt& n, const PrimeSet& S);

  std::vector<unsigned long> exponents_;
  BigInt value_;
};

// Exponent vector of n over S, or nullopt when n has a prime factor
// outside S. Throws InvalidInput for n <= 0.
std::optional<SUnit> factor_smooth(const BigInt& n, const PrimeSet& S);

// Streams the S-smooth integers <= bound in strictly ascending order.
// Each value is generated exactly once, from its quotient by its largest
// prime factor, so the heap only holds the current frontier.
class SmoothEnumerator {
 public:
  SmoothEnumerator(PrimeSet S, BigInt bound);

  std::optional<SUnit> next();

 private:
  struct Node {
    BigInt value;
    std::vector<unsigned long> exponents;
    std::size_t largest;  // index of the largest prime used
  };
  struct Greater {
    bool operator()(const Node& a, const Node& b) const { return a.value > b.value; }
  };

  PrimeSet S_;
  BigInt bound_;
  std::priority_queue<Node, std::vector<Node>, Greater> heap_;
};

std::vector<SUnit> enumerate_smooth(const PrimeSet& S, const BigInt& bound);

// prod_p p^{min(v_p(A), v_p(B))} over the primes p dividing gcd(A, B).
BigInt gcd_via_valuations(const BigInt& a, const BigInt& b);

// Logarithmic Weil height of a positive integer: log(value).
double weil_height(const SUnit& u);
double weil_height(const BigInt& n);

}  // namespace sdio

#endif
