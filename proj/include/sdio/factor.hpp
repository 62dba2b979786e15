#ifndef SDIO_FACTOR_HPP
#define SDIO_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "sdio/numbers.hpp"

namespace sdio {

// Deterministic Miller-Rabin over 64-bit integers.
bool is_prime_u64(std::uint64_t n);

struct PrimePower {
  BigInt prime;
  unsigned long exponent;
};

// Complete factorization of |n| (n != 0) into ascending prime powers.
// Trial division first, then Pollard-Brent rho on the cofactor.
std::vector<PrimePower> factorize(const BigInt& n);

// All positive divisors, ascending.
std::vector<BigInt> divisors(const std::vector<PrimePower>& factorization);

// Largest e with p^e | n, n != 0.
unsigned long valuation(const BigInt& n, const BigInt& p);

}  // namespace sdio

#endif
