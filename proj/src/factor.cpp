#include "sdio/factor.hpp"

#include <algorithm>
#include <map>

#include "sdio/error.hpp"

namespace sdio {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr unsigned kTrialLimit = 10000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool probably_prime(const BigInt& n) {
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// Brent's variant of Pollard rho. Returns a non-trivial factor of the
// composite n, trying successive constants until one splits it.
BigInt pollard_brent(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return BigInt(2);
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](const BigInt& v) {
      BigInt t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          BigInt diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        BigInt diff = x - ys;
        BigInt ad = abs(diff);
        mpz_gcd(g.get_mpz_t(), ad.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const BigInt& n, std::map<BigInt, unsigned long>& acc) {
  if (n == 1) return;
  if (probably_prime(n)) {
    ++acc[n];
    return;
  }
  BigInt d = pollard_brent(n);
  split(d, acc);
  split(BigInt(n / d), acc);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set for all n < 2^64.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

unsigned long valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) fail(ErrorCode::InvalidInput, "valuation of zero");
  BigInt m = abs(n);
  unsigned long e = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

std::vector<PrimePower> factorize(const BigInt& n) {
  if (n == 0) fail(ErrorCode::InvalidInput, "cannot factor zero");
  BigInt m = abs(n);
  std::map<BigInt, unsigned long> acc;
  for (unsigned long p : small_primes()) {
    if (m == 1) break;
    if (BigInt(p) * p > m) break;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e) acc[BigInt(p)] += e;
  }
  split(m, acc);
  std::vector<PrimePower> out;
  out.reserve(acc.size());
  for (auto& [p, e] : acc) out.push_back({p, e});
  return out;
}

std::vector<BigInt> divisors(const std::vector<PrimePower>& factorization) {
  std::vector<BigInt> out{BigInt(1)};
  for (const auto& pp : factorization) {
    const std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned long e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sdio
