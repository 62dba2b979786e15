#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sdio/search.hpp"
#include "test_util.hpp"

using namespace sdio;

namespace {

IntPoly P(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

std::vector<BigInt> B(std::initializer_list<long> c) { return std::vector<BigInt>(c.begin(), c.end()); }

const char* const kSix = "2,3,5,13,19,83,103,151,163,193,199,229,283,439,463,1019,1453,8629";

std::vector<std::vector<long>> values_of(const std::vector<TupleRecord>& recs) {
  std::vector<std::vector<long>> out;
  for (const auto& r : recs) {
    std::vector<long> v;
    for (const auto& x : r.values) v.push_back(x.get_si());
    out.push_back(v);
  }
  return out;
}

SearchConfig config(long bound, unsigned n, bool strict) {
  SearchConfig cfg;
  cfg.bound = bound;
  cfg.n = n;
  cfg.strict = strict;
  return cfg;
}

// Triples for an arbitrary f by exhaustive scan: the set of values f(s) over
// smooth s in [1, limit] answers every product query.
std::vector<std::vector<long>> brute_triples(const IntPoly& f, const std::vector<unsigned long>& primes, long bound,
                                            long limit, bool strict) {
  std::set<long> hit;
  for (long s = 1; s <= limit; ++s) {
    if (!oracle::is_smooth(s, primes)) continue;
    BigInt v = f(BigInt(s));
    if (v >= 1 && v <= bound * bound) hit.insert(v.get_si());
  }
  std::vector<std::vector<long>> out;
  for (long a = 1; a <= bound; ++a)
    for (long b = strict ? a + 1 : a; b <= bound; ++b) {
      if (!hit.count(a * b)) continue;
      for (long c = strict ? b + 1 : b; c <= bound; ++c)
        if (hit.count(a * c) && hit.count(b * c)) out.push_back({a, b, c});
    }
  return out;
}

}  // namespace

TEST_CASE("verify the (1,5,11) triple for X^2 - X - 1") {
  PrimeSet S = PrimeSet::parse("2,3");
  auto res = verify_tuple(B({1, 5, 11}), S, P({-1, -1, 1}));
  REQUIRE(std::holds_alternative<TupleRecord>(res));
  const auto& rec = std::get<TupleRecord>(res);
  CHECK(rec.witness(0, 1).s.value() == 3);
  CHECK(rec.witness(0, 2).s.value() == 4);
  CHECK(rec.witness(1, 2).s.value() == 8);
  CHECK(rec.witnesses.size() == 3);
}

TEST_CASE("verify the six-tuple with f = X - 2985984") {
  PrimeSet S = PrimeSet::parse(kSix);
  IntPoly f = P({-2985984, 1});
  const auto values = B({99, 315, 9920, 32768, 44460, 19534284});
  auto res = verify_tuple(values, S, f);
  REQUIRE(std::holds_alternative<TupleRecord>(res));
  const auto& rec = std::get<TupleRecord>(res);
  REQUIRE(rec.witnesses.size() == 15);
  for (const auto& w : rec.witnesses) {
    CHECK(f(w.s.value()) == values[w.i] * values[w.j]);
    CHECK(factor_smooth(w.s.value(), S).has_value());
  }
  CHECK(rec.witness(0, 1).s.value() == 3017169);
  CHECK(rec.witness(0, 1).s.exponents()[1] == 4);
}

TEST_CASE("verify reports the first failing pair") {
  auto res = verify_tuple(B({1, 2, 4}), PrimeSet::parse("2,3"), P({-1, 1}));
  REQUIRE(std::holds_alternative<VerificationFailure>(res));
  const auto& fail = std::get<VerificationFailure>(res);
  CHECK(fail.i == 0);
  CHECK(fail.j == 2);
  CHECK(fail.a == 1);
  CHECK(fail.b == 4);
  CHECK(fail.reason == "NoSUnitPreimage");

  PrimeSet S = PrimeSet::parse("2,3");
  CHECK(code_of([&] { verify_tuple(B({0, 2}), S, P({-1, 1})); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { verify_tuple(B({3, 2}), S, P({-1, 1})); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { verify_tuple({}, S, P({-1, 1})); }) == ErrorCode::InvalidInput);
  // a single value has no pairs to check
  CHECK(std::holds_alternative<TupleRecord>(verify_tuple(B({7}), S, P({-1, 1}))));
}

TEST_CASE("verify picks the smallest witness for a non-injective f") {
  // f = (X - 2)(X - 6) + 8 takes the value 8 at s = 2 and s = 6.
  IntPoly f = P({20, -8, 1});
  PrimeSet S = PrimeSet::parse("2,3");
  auto res = verify_tuple(B({2, 4}), S, f);
  REQUIRE(std::holds_alternative<TupleRecord>(res));
  CHECK(std::get<TupleRecord>(res).witness(0, 1).s.value() == 2);
  // with S = {3} only s = 6 is not smooth, s = 2 is not either
  CHECK(std::holds_alternative<VerificationFailure>(verify_tuple(B({2, 4}), PrimeSet::parse("3"), f)));
}

TEST_CASE("verify with a constant polynomial") {
  PrimeSet S = PrimeSet::parse("2");
  auto ok = verify_tuple(B({2, 3}), S, P({6}));
  REQUIRE(std::holds_alternative<TupleRecord>(ok));
  CHECK(std::get<TupleRecord>(ok).witness(0, 1).s.value() == 1);
  CHECK(std::holds_alternative<VerificationFailure>(verify_tuple(B({2, 4}), S, P({6}))));
}

TEST_CASE("search examples") {
  PrimeSet S23 = PrimeSet::parse("2,3");
  using V = std::vector<std::vector<long>>;
  CHECK(values_of(search_tuples(S23, P({-1, 1}), config(10, 3, true))) == V{{1, 3, 5}, {1, 5, 7}});
  CHECK(search_tuples(PrimeSet::parse("5"), P({-1, 1}), config(100, 3, true)).empty());
  auto quad = values_of(search_tuples(S23, P({-1, -1, 1}), config(20, 3, true)));
  CHECK(std::find(quad.begin(), quad.end(), std::vector<long>{1, 5, 11}) != quad.end());
  CHECK(search_tuples(S23, P({-1, 1}), config(10, 4, true)).empty());
  CHECK(code_of([&] { search_tuples(S23, P({4}), config(10, 3, true)); }) == ErrorCode::ConstantPolynomial);
  CHECK(code_of([&] { search_tuples(S23, P({-1, 1}), config(10, 1, true)); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { search_tuples(S23, P({-1, 1}), config(0, 3, true)); }) == ErrorCode::InvalidInput);
}

TEST_CASE("pairs_from_values") {
  PrimeSet S23 = PrimeSet::parse("2,3");
  auto pairs = pairs_from_values(S23, P({-1, 1}), 3);
  REQUIRE(pairs.size() == 3);
  const long want[3][3] = {{1, 1, 2}, {1, 2, 3}, {1, 3, 4}};
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(pairs[k].a == want[k][0]);
    CHECK(pairs[k].b == want[k][1]);
    CHECK(pairs[k].s.value() == want[k][2]);
  }
  auto p2 = pairs_from_values(PrimeSet::parse("2"), P({-1, 1}), 2);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].a == 1);
  CHECK(p2[0].b == 1);
  CHECK(p2[0].s.value() == 2);
  CHECK(code_of([&] { pairs_from_values(S23, P({3}), 5); }) == ErrorCode::ConstantPolynomial);

  // exhaustive agreement with the naive pair scan
  for (const char* list : {"2", "2,3", "3,5", "2,3,5,7"}) {
    PrimeSet S = PrimeSet::parse(list);
    std::vector<unsigned long> ps;
    for (const auto& p : S.primes()) ps.push_back(p.get_ui());
    auto got = pairs_from_values(S, P({-1, 1}), 150);
    std::vector<std::pair<long, long>> want_pairs;
    for (long a = 1; a <= 150; ++a)
      for (long b = a; b <= 150; ++b)
        if (oracle::is_smooth(a * b + 1, ps)) want_pairs.push_back({a, b});
    REQUIRE(got.size() == want_pairs.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      REQUIRE(got[k].a == want_pairs[k].first);
      REQUIRE(got[k].b == want_pairs[k].second);
      REQUIRE(got[k].s.value() == got[k].a * got[k].b + 1);
    }
  }
}

TEST_CASE("classical search agrees with brute force for every bound up to 200") {
  for (const char* list : {"2", "3", "2,3", "2,5", "3,7"}) {
    PrimeSet S = PrimeSet::parse(list);
    std::vector<unsigned long> ps;
    for (const auto& p : S.primes()) ps.push_back(p.get_ui());
    for (bool strict : {true, false}) {
      auto all = oracle::classical_triples(200, ps, strict);
      for (long bound = 1; bound <= 200; ++bound) {
        std::vector<std::vector<long>> want;
        for (const auto& t : all)
          if (t[2] <= bound) want.push_back({t[0], t[1], t[2]});
        REQUIRE(values_of(search_tuples(S, P({-1, 1}), config(bound, 3, strict))) == want);
      }
    }
  }
}

TEST_CASE("search agrees with brute force for general polynomials") {
  struct Case {
    IntPoly f;
    const char* primes;
    long bound;
  };
  const std::vector<Case> cases{
      {P({-1, -1, 1}), "2,3", 60},
      {P({-1, -1, 1}), "2,3,5", 40},
      {P({1, 1}), "2,3", 60},
      {P({5, 0, -6, 1}), "2,3", 40},   // dips below zero between the roots
      {P({3, -4, 1}), "2,5", 50},      // (X-1)(X-3): zero at two units
      {P({0, 0, 1}), "2,3", 60},       // X^2
      {P({20, -8, 1}), "2,3", 50},     // non-injective on positive integers
  };
  for (const auto& c : cases) {
    PrimeSet S = PrimeSet::parse(c.primes);
    std::vector<unsigned long> ps;
    for (const auto& p : S.primes()) ps.push_back(p.get_ui());
    for (bool strict : {true, false}) {
      auto want = brute_triples(c.f, ps, c.bound, c.bound * c.bound + 50, strict);
      auto got = search_tuples(S, c.f, config(c.bound, 3, strict));
      REQUIRE(values_of(got) == want);
      for (const auto& rec : got) {
        auto again = verify_tuple(rec.values, S, c.f);
        REQUIRE(std::holds_alternative<TupleRecord>(again));
        for (std::size_t k = 0; k < rec.witnesses.size(); ++k)
          REQUIRE(std::get<TupleRecord>(again).witnesses[k].s == rec.witnesses[k].s);
      }
    }
  }
}

TEST_CASE("sub-tuple closure and monotonicity") {
  PrimeSet S = PrimeSet::parse("2,3,5,7");
  IntPoly f = P({-1, 1});
  auto triples = values_of(search_tuples(S, f, config(120, 3, false)));
  auto quads = values_of(search_tuples(S, f, config(120, 4, false)));
  std::set<std::vector<long>> tri(triples.begin(), triples.end());
  REQUIRE_FALSE(quads.empty());
  for (const auto& q : quads)
    for (std::size_t skip = 0; skip < 4; ++skip) {
      std::vector<long> sub;
      for (std::size_t k = 0; k < 4; ++k)
        if (k != skip) sub.push_back(q[k]);
      REQUIRE(tri.count(sub) == 1);
    }

  auto small = values_of(search_tuples(PrimeSet::parse("2,3"), f, config(60, 3, true)));
  auto wider = values_of(search_tuples(PrimeSet::parse("2,3,5"), f, config(60, 3, true)));
  auto longer = values_of(search_tuples(PrimeSet::parse("2,3"), f, config(90, 3, true)));
  std::set<std::vector<long>> w(wider.begin(), wider.end()), l(longer.begin(), longer.end());
  for (const auto& t : small) {
    CHECK(w.count(t) == 1);
    CHECK(l.count(t) == 1);
  }
}

TEST_CASE("trivial tuples and their exclusion") {
  PrimeSet S = PrimeSet::parse("2,3");
  auto cfg = config(50, 3, false);
  auto all = values_of(search_tuples(S, P({-1, 1}), cfg));
  std::vector<long> trivial;
  for (const auto& t : all)
    if (t[0] == 1 && t[1] == 1) trivial.push_back(t[2]);
  std::vector<long> want;
  for (long a = 1; a <= 50; ++a)
    if (oracle::is_smooth(a + 1, {2, 3})) want.push_back(a);
  CHECK(trivial == want);
  cfg.exclude_trivial = true;
  for (const auto& t : values_of(search_tuples(S, P({-1, 1}), cfg))) CHECK(std::count(t.begin(), t.end(), 1) < 2);
}

TEST_CASE("thread count changes nothing but speed") {
  PrimeSet S = PrimeSet::parse("2,3,5,7,11");
  auto cfg = config(300, 3, true);
  auto one = values_of(search_tuples(S, P({-1, 1}), cfg));
  cfg.threads = 4;
  std::size_t calls = 0;
  cfg.progress = [&](std::size_t done, std::size_t total) {
    ++calls;
    CHECK(done <= total);
  };
  auto four = values_of(search_tuples(S, P({-1, 1}), cfg));
  CHECK(one == four);
  CHECK(calls >= 1);
}

TEST_CASE("single prime identity examples") {
  CHECK(single_prime_identity_check({1, 1, 3, 2, 1, 2, 2}));
  CHECK(single_prime_identity_check({1, 1, 7, 2, 1, 3, 3}));
  CHECK(code_of([] { single_prime_identity_check({1, 2, 3, 2, 1, 2, 2}); }) == ErrorCode::PreconditionViolated);
  CHECK(code_of([] { single_prime_identity_check({1, 1, 3, 2, 2, 1, 2}); }) == ErrorCode::PreconditionViolated);
  CHECK(code_of([] { single_prime_identity_check({1, 1, 3, 1, 1, 2, 2}); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("single prime scan: the preconditions never admit a < b") {
  // (ac)(bc)/(ab) = c^2 pins c, then a and b, for each (q, k, m, n).
  std::size_t admissible = 0, strict = 0;
  for (unsigned long q = 2; q <= 100; ++q) {
    for (unsigned long k = 1; k <= 20; ++k)
      for (unsigned long m = k; m <= 20; ++m)
        for (unsigned long n = m; n <= 20; ++n) {
          const BigInt ab = pow(BigInt(q), k) - 1, ac = pow(BigInt(q), m) - 1, bc = pow(BigInt(q), n) - 1;
          const BigInt num = ac * bc;
          if (num % ab != 0) continue;
          const BigInt c2 = num / ab;
          if (!mpz_perfect_square_p(c2.get_mpz_t())) continue;
          BigInt c;
          mpz_sqrt(c.get_mpz_t(), c2.get_mpz_t());
          if (c == 0 || ac % c != 0 || bc % c != 0) continue;
          const BigInt a = ac / c, b = bc / c;
          if (a * b != ab || a < 1 || a > b) continue;
          ++admissible;
          if (a < b) ++strict;
          REQUIRE(single_prime_identity_check({a, b, c, BigInt(q), k, m, n}));
        }
  }
  CHECK(strict == 0);
  CHECK(admissible > 0);
}
