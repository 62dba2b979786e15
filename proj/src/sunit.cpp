#include "sdio/sunit.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sdio/error.hpp"
#include "sdio/factor.hpp"

namespace sdio {

PrimeSet::PrimeSet(std::vector<BigInt> primes) : primes_(std::move(primes)) {
  if (primes_.empty()) fail(ErrorCode::InvalidInput, "prime set is empty");
  std::sort(primes_.begin(), primes_.end());
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    const BigInt& p = primes_[i];
    if (i > 0 && primes_[i - 1] == p)
      fail(ErrorCode::InvalidInput, "duplicate prime " + sdio::to_string(p) + " in prime set");
    if (p < 2 || !p.fits_ulong_p())
      fail(ErrorCode::InvalidInput, sdio::to_string(p) + " is not a prime below 2^64");
    if (!is_prime_u64(p.get_ui())) fail(ErrorCode::InvalidInput, sdio::to_string(p) + " is not prime");
  }
}

PrimeSet PrimeSet::parse(std::string_view text) { return PrimeSet(parse_bigint_list(text)); }

PrimeSet PrimeSet::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open prime file '" + path + "'");
  std::vector<BigInt> primes;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    primes.push_back(parse_bigint(line));
  }
  return PrimeSet(std::move(primes));
}

std::optional<std::size_t> PrimeSet::index_of(const BigInt& p) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - primes_.begin());
}

std::string PrimeSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) out += ',';
    out += sdio::to_string(primes_[i]);
  }
  return out;
}

bool ExpVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](long e) { return e == 0; });
}

bool ExpVector::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](long e) { return e >= 0; });
}

Rational ExpVector::value(const PrimeSet& S) const {
  if (entries_.size() != S.size()) fail(ErrorCode::InvalidInput, "exponent vector length does not match prime set");
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    long e = entries_[i];
    if (e > 0) num *= pow(S[i], static_cast<unsigned long>(e));
    if (e < 0) den *= pow(S[i], static_cast<unsigned long>(-e));
  }
  return Rational(num, den);
}

ExpVector ExpVector::operator+(const ExpVector& o) const {
  if (o.size() != size()) fail(ErrorCode::InvalidInput, "exponent vector length mismatch");
  ExpVector r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.entries_[i] += o.entries_[i];
  return r;
}

ExpVector ExpVector::operator-(const ExpVector& o) const { return *this + o * -1; }

ExpVector ExpVector::operator*(long k) const {
  ExpVector r = *this;
  for (auto& e : r.entries_) e *= k;
  return r;
}

std::optional<ExpVector> exponents_over(const Rational& q, const PrimeSet& S) {
  if (q <= 0) fail(ErrorCode::InvalidInput, "only positive rationals factor over S");
  auto num = factor_smooth(q.get_num(), S);
  auto den = factor_smooth(q.get_den(), S);
  if (!num || !den) return std::nullopt;
  return num->exp_vector() - den->exp_vector();
}

SUnit::SUnit(const PrimeSet& S, std::vector<unsigned long> exponents) : exponents_(std::move(exponents)), value_(1) {
  if (exponents_.size() != S.size()) fail(ErrorCode::InvalidInput, "exponent vector length does not match prime set");
  for (std::size_t i = 0; i < exponents_.size(); ++i) value_ *= pow(S[i], exponents_[i]);
}

SUnit SUnit::one(const PrimeSet& S) { return SUnit(std::vector<unsigned long>(S.size(), 0), BigInt(1)); }

ExpVector SUnit::exp_vector() const {
  std::vector<long> e(exponents_.begin(), exponents_.end());
  return ExpVector(std::move(e));
}

std::optional<SUnit> factor_smooth(const BigInt& n, const PrimeSet& S) {
  if (n <= 0) fail(ErrorCode::InvalidInput, "factor_smooth needs n >= 1, got " + to_string(n));
  BigInt m = n;
  std::vector<unsigned long> exps(S.size(), 0);
  for (std::size_t i = 0; i < S.size() && m != 1; ++i) {
    const unsigned long p = S[i].get_ui();
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++exps[i];
    }
  }
  if (m != 1) return std::nullopt;
  return SUnit(std::move(exps), n);
}

SmoothEnumerator::SmoothEnumerator(PrimeSet S, BigInt bound) : S_(std::move(S)), bound_(std::move(bound)) {
  if (bound_ < 1) fail(ErrorCode::InvalidInput, "enumeration bound must be >= 1");
  heap_.push(Node{BigInt(1), std::vector<unsigned long>(S_.size(), 0), 0});
}

std::optional<SUnit> SmoothEnumerator::next() {
  if (heap_.empty()) return std::nullopt;
  Node top = heap_.top();
  heap_.pop();
  for (std::size_t j = top.largest; j < S_.size(); ++j) {
    BigInt child = top.value * S_[j];
    if (child > bound_) break;
    Node n{std::move(child), top.exponents, j};
    ++n.exponents[j];
    heap_.push(std::move(n));
  }
  return SUnit(std::move(top.exponents), std::move(top.value));
}

std::vector<SUnit> enumerate_smooth(const PrimeSet& S, const BigInt& bound) {
  SmoothEnumerator gen(S, bound);
  std::vector<SUnit> out;
  while (auto u = gen.next()) out.push_back(std::move(*u));
  return out;
}

BigInt gcd_via_valuations(const BigInt& a, const BigInt& b) {
  if (a < 1 || b < 1) fail(ErrorCode::InvalidInput, "gcd_via_valuations needs positive arguments");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  BigInt result = 1;
  // Only primes dividing both can have min(v_p(A), v_p(B)) > 0.
  for (const auto& pp : factorize(g)) {
    unsigned long e = std::min(valuation(a, pp.prime), valuation(b, pp.prime));
    result *= pow(pp.prime, e);
  }
  return result;
}

double weil_height(const BigInt& n) {
  if (n < 1) fail(ErrorCode::InvalidInput, "height is defined here for positive integers only");
  if (n == 1) return 0.0;
  return log_abs(n);
}

double weil_height(const SUnit& u) { return weil_height(u.value()); }

}  // namespace sdio
