#include "sdio/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "sdio/error.hpp"
#include "sdio/factor.hpp"
#include "sdio/polyarith.hpp"

namespace sdio {

const Witness& TupleRecord::witness(std::size_t i, std::size_t j) const {
  if (i >= j || j >= values.size()) fail(ErrorCode::InvalidInput, "witness index out of range");
  const std::size_t n = values.size();
  // Row i starts after sum_{r<i} (n - 1 - r) entries.
  const std::size_t row_start = i * (2 * n - i - 1) / 2;
  return witnesses[row_start + (j - i - 1)];
}

namespace {

std::optional<SUnit> preimage_in(const MonotoneSegments& seg, const BigInt& product, const PrimeSet& S) {
  const IntPoly& f = seg.poly();
  if (f.degree() <= 0) {
    if (f.coeff(0) == product) return SUnit::one(S);
    return std::nullopt;
  }
  for (const auto& s : seg.positive_preimages(product)) {
    if (auto u = factor_smooth(s, S)) return u;
  }
  return std::nullopt;
}

void require_nonconstant(const IntPoly& f) {
  if (f.degree() <= 0) fail(ErrorCode::ConstantPolynomial, "search needs a non-constant polynomial");
}

}  // namespace

std::optional<SUnit> smallest_sunit_preimage(const IntPoly& f, const BigInt& product, const PrimeSet& S) {
  return preimage_in(MonotoneSegments(f), product, S);
}

VerifyResult verify_tuple(const std::vector<BigInt>& values, const PrimeSet& S, const IntPoly& f) {
  if (values.empty()) fail(ErrorCode::InvalidInput, "tuple is empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1) fail(ErrorCode::InvalidInput, "tuple entries must be positive");
    if (i > 0 && values[i] < values[i - 1]) fail(ErrorCode::InvalidInput, "tuple entries must be non-decreasing");
  }
  MonotoneSegments seg(f);
  TupleRecord rec{values, {}, S, f};
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      BigInt product = values[i] * values[j];
      auto s = preimage_in(seg, product, S);
      if (!s) return VerificationFailure{i, j, values[i], values[j], "NoSUnitPreimage"};
      rec.witnesses.push_back({i, j, std::move(*s)});
    }
  }
  return rec;
}

std::vector<PairWitness> pairs_from_values(const PrimeSet& S, const IntPoly& f, const BigInt& bound,
                                           const SearchConfig& cfg) {
  require_nonconstant(f);
  if (bound < 1) fail(ErrorCode::InvalidInput, "bound must be >= 1");
  const BigInt max_product = bound * bound;
  MonotoneSegments seg(f);
  const std::vector<SUnit> units = enumerate_smooth(S, seg.scan_limit(BigInt(1), max_product));

  struct Hit {
    BigInt a, b;
    std::size_t unit;
  };
  auto scan = [&](std::size_t begin, std::size_t end, std::size_t stride, std::vector<Hit>& out,
                  std::atomic<std::size_t>* done) {
    for (std::size_t k = begin; k < end; k += stride) {
      BigInt value = f(units[k].value());
      if (value >= 1 && value <= max_product) {
        for (const auto& a : divisors(factorize(value))) {
          BigInt b = value / a;
          if (b < a) break;
          if (b <= bound) out.push_back({a, std::move(b), k});
        }
      }
      if (done) done->fetch_add(1, std::memory_order_relaxed);
    }
  };

  const std::size_t workers = std::max(1u, cfg.threads);
  std::vector<std::vector<Hit>> hits(workers);
  if (workers == 1) {
    std::atomic<std::size_t> done{0};
    const std::size_t chunk = 4096;
    for (std::size_t start = 0; start < units.size(); start += chunk) {
      scan(start, std::min(units.size(), start + chunk), 1, hits[0], &done);
      if (cfg.progress) cfg.progress(done.load(), units.size());
    }
    if (cfg.progress && units.empty()) cfg.progress(0, 0);
  } else {
    std::atomic<std::size_t> done{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(scan, w, units.size(), workers, std::ref(hits[w]), &done);
    if (cfg.progress) {
      while (done.load() < units.size()) {
        cfg.progress(done.load(), units.size());
        std::this_thread::sleep_for(std::chrono::milliseconds(50));
      }
    }
    for (auto& t : pool) t.join();
    if (cfg.progress) cfg.progress(done.load(), units.size());
  }

  // Keep the smallest witness per pair.
  std::map<std::pair<BigInt, BigInt>, std::size_t> best;
  for (const auto& bucket : hits) {
    for (const auto& h : bucket) {
      auto [it, inserted] = best.try_emplace({h.a, h.b}, h.unit);
      if (!inserted && h.unit < it->second) it->second = h.unit;
    }
  }
  std::vector<PairWitness> out;
  out.reserve(best.size());
  for (const auto& [key, unit] : best) out.push_back({key.first, key.second, units[unit]});
  return out;
}

std::vector<TupleRecord> search_tuples(const PrimeSet& S, const IntPoly& f, const SearchConfig& cfg) {
  require_nonconstant(f);
  if (cfg.n < 2) fail(ErrorCode::InvalidInput, "tuple size must be >= 2");
  if (cfg.bound < 1) fail(ErrorCode::InvalidInput, "bound must be >= 1");

  std::map<std::pair<BigInt, BigInt>, SUnit> edges;
  std::map<BigInt, std::vector<BigInt>> up;  // a -> sorted b >= a
  for (auto& p : pairs_from_values(S, f, cfg.bound, cfg)) {
    up[p.a].push_back(p.b);
    edges.emplace(std::make_pair(p.a, p.b), std::move(p.s));
  }

  std::vector<TupleRecord> out;
  std::vector<BigInt> current;
  auto edge = [&](const BigInt& x, const BigInt& y) -> const SUnit* {
    auto it = edges.find({x, y});
    return it == edges.end() ? nullptr : &it->second;
  };

  auto emit = [&] {
    if (cfg.exclude_trivial && std::count(current.begin(), current.end(), BigInt(1)) >= 2) return;
    TupleRecord rec{current, {}, S, f};
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) rec.witnesses.push_back({i, j, *edge(current[i], current[j])});
    out.push_back(std::move(rec));
  };

  std::function<void()> extend = [&] {
    if (current.size() == cfg.n) {
      emit();
      return;
    }
    const auto& first = up[current.front()];
    const BigInt& last = current.back();
    auto it = cfg.strict ? std::upper_bound(first.begin(), first.end(), last)
                         : std::lower_bound(first.begin(), first.end(), last);
    for (; it != first.end(); ++it) {
      const BigInt& x = *it;
      bool ok = true;
      for (std::size_t k = 1; k < current.size() && ok; ++k) ok = edge(current[k], x) != nullptr;
      if (!ok) continue;
      current.push_back(x);
      extend();
      current.pop_back();
    }
  };

  std::vector<BigInt> starts;
  for (const auto& [a, _] : up) starts.push_back(a);
  for (const auto& a : starts) {
    current = {a};
    extend();
  }
  return out;
}

bool single_prime_identity_check(const SinglePrimeInput& in) {
  if (in.a < 1 || in.b < 1 || in.c < 1 || in.q < 2)
    fail(ErrorCode::PreconditionViolated, "need positive a, b, c and q >= 2");
  if (!(in.k <= in.m && in.m <= in.n)) fail(ErrorCode::PreconditionViolated, "need k <= m <= n");
  const BigInt qk = pow(in.q, in.k), qm = pow(in.q, in.m), qn = pow(in.q, in.n);
  if (in.a * in.b + 1 != qk || in.a * in.c + 1 != qm || in.b * in.c + 1 != qn)
    fail(ErrorCode::PreconditionViolated, "ab+1 = q^k, ac+1 = q^m, bc+1 = q^n do not hold");
  const BigInt diff = in.b - in.a;
  const bool identity = diff == in.b * qm - in.a * qn;
  const bool divides = mpz_divisible_p(diff.get_mpz_t(), qk.get_mpz_t()) != 0;
  return identity && divides;
}

}  // namespace sdio
