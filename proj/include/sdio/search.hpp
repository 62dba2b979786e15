#ifndef SDIO_SEARCH_HPP
#define SDIO_SEARCH_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sdio/numbers.hpp"
#include "sdio/polynomial.hpp"
#include "sdio/sunit.hpp"

namespace sdio {

struct Witness {
  std::size_t i;  // 0-based, i < j
  std::size_t j;
  SUnit s;
};

// Tuple a_1 <= ... <= a_n with a_i a_j = f(s_ij) for S-smooth s_ij.
struct TupleRecord {
  std::vector<BigInt> values;
  std::vector<Witness> witnesses;  // row-major over i < j
  PrimeSet prime_set;
  IntPoly poly;

  const Witness& witness(std::size_t i, std::size_t j) const;
};

struct VerificationFailure {
  std::size_t i;  // 0-based
  std::size_t j;
  BigInt a;
  BigInt b;
  std::string reason;  // "NoSUnitPreimage"
};

using VerifyResult = std::variant<TupleRecord, VerificationFailure>;

// Smallest positive S-smooth s with f(s) == product, if any.
std::optional<SUnit> smallest_sunit_preimage(const IntPoly& f, const BigInt& product, const PrimeSet& S);

// Checks every pair in order (1,2), (1,3), ..., (n-1,n) and stops at the
// first one without an S-unit preimage. Values must be positive and
// non-decreasing (InvalidInput otherwise).
VerifyResult verify_tuple(const std::vector<BigInt>& values, const PrimeSet& S, const IntPoly& f);

struct SearchConfig {
  BigInt bound = 1;        // largest admissible a_n
  unsigned n = 3;          // tuple size
  bool strict = false;     // a_1 < ... < a_n
  bool exclude_trivial = false;  // drop tuples with two or more entries equal to 1
  unsigned threads = 1;    // affects speed only
  // Called with (S-units processed, total) from the calling thread.
  std::function<void(std::size_t, std::size_t)> progress;
};

struct PairWitness {
  BigInt a;
  BigInt b;
  SUnit s;
};

// All a <= b <= bound with ab = f(s), s S-smooth, smallest witness each,
// sorted by (a, b). Throws ConstantPolynomial.
std::vector<PairWitness> pairs_from_values(const PrimeSet& S, const IntPoly& f, const BigInt& bound,
                                           const SearchConfig& cfg = {});

// Every tuple within cfg, lexicographic. Throws ConstantPolynomial.
std::vector<TupleRecord> search_tuples(const PrimeSet& S, const IntPoly& f, const SearchConfig& cfg);

struct SinglePrimeInput {
  BigInt a, b, c, q;
  unsigned long k, m, n;
};

// With ab+1 = q^k, ac+1 = q^m, bc+1 = q^n and k <= m <= n, checks
// b - a == b q^m - a q^n and (ab + 1) | (b - a). Throws
// PreconditionViolated when the power equations fail.
bool single_prime_identity_check(const SinglePrimeInput& in);

}  // namespace sdio

#endif
