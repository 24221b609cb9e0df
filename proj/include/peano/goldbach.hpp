// Concrete number theory for the Goldbach side of the workbench: primality,
// the set of even alpha >= 16 with alpha/2 and alpha-3 composite, Goldbach
// partitions and a sieve-backed scan.

#ifndef PEANO_GOLDBACH_HPP
#define PEANO_GOLDBACH_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace peano::goldbach {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin; the witness set is exact for all 64-bit n.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// alpha even, alpha >= 16, alpha/2 and alpha-3 not prime.
inline bool in_frakN(std::uint64_t alpha) {
  return alpha % 2 == 0 && alpha >= 16 && !is_prime(alpha / 2) && !is_prime(alpha - 3);
}

// Primality table for [0, limit]. Segments are sieved by `chunks` workers;
// each segment is owned by exactly one worker, so the result does not depend
// on the split.
inline std::vector<std::uint8_t> prime_table(std::uint64_t limit, unsigned chunks = 1) {
  std::vector<std::uint8_t> table(limit + 1, 0);
  if (limit < 2) return table;
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
  while (root * root > limit) --root;
  while ((root + 1) * (root + 1) <= limit) ++root;

  std::vector<std::uint8_t> small(root + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }

  constexpr std::uint64_t kSegment = 1u << 16;
  const std::uint64_t segments = (limit + 1 + kSegment - 1) / kSegment;
  auto worker = [&](unsigned id) {
    for (std::uint64_t s = id; s < segments; s += chunks) {
      std::uint64_t lo = s * kSegment;
      std::uint64_t hi = std::min(limit + 1, lo + kSegment);
      std::fill(table.begin() + static_cast<std::ptrdiff_t>(lo), table.begin() + static_cast<std::ptrdiff_t>(hi), 1);
      for (std::uint64_t p : base) {
        std::uint64_t first = std::max(p * p, (lo + p - 1) / p * p);
        for (std::uint64_t j = first; j < hi; j += p) table[j] = 0;
      }
    }
  };
  if (chunks <= 1) {
    chunks = 1;
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < chunks; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  table[0] = table[1] = 0;
  return table;
}

inline std::vector<std::uint64_t> enumerate_frakN(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 16) return out;
  auto primes = prime_table(limit);
  for (std::uint64_t a = 16; a <= limit; a += 2)
    if (!primes[a / 2] && !primes[a - 3]) out.push_back(a);
  return out;
}

// All (p, q) with p <= q, both prime, p + q = alpha, ascending in p.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> partitions(std::uint64_t alpha) {
  if (alpha % 2 != 0 || alpha < 4) throw std::invalid_argument("partitions needs an even number >= 4");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  auto primes = prime_table(alpha);
  for (std::uint64_t p = 2; p <= alpha / 2; ++p)
    if (primes[p] && primes[alpha - p]) out.emplace_back(p, alpha - p);
  return out;
}

struct FrakNReport {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> members;
  bool verified = true;
  std::optional<std::uint64_t> first_failure;
  std::map<std::uint64_t, std::uint64_t> partition_counts;

  friend bool operator==(const FrakNReport&, const FrakNReport&) = default;
};

// Counts Goldbach partitions of every member up to limit. Pairs (p, q) are
// distributed over `chunks` workers by the index of p; per-worker counts are
// summed, so the report is independent of the split.
inline FrakNReport scan(std::uint64_t limit, unsigned chunks = 1) {
  if (chunks == 0) chunks = 1;
  FrakNReport report;
  report.limit = limit;
  if (limit < 16) return report;

  auto table = prime_table(limit, chunks);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (table[i]) primes.push_back(static_cast<std::uint32_t>(i));

  std::vector<std::vector<std::uint32_t>> counts(chunks);
  auto worker = [&](unsigned id) {
    auto& c = counts[id];
    c.assign(limit + 1, 0);
    for (std::size_t i = id; i < primes.size(); i += chunks) {
      std::uint64_t p = primes[i];
      if (2 * p > limit) break;
      for (std::size_t j = i; j < primes.size(); ++j) {
        std::uint64_t s = p + primes[j];
        if (s > limit) break;
        ++c[s];
      }
    }
  };
  if (chunks == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < chunks; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }

  for (std::uint64_t a = 16; a <= limit; a += 2) {
    if (table[a / 2] || table[a - 3]) continue;
    std::uint64_t n = 0;
    for (const auto& c : counts) n += c[a];
    report.members.push_back(a);
    report.partition_counts.emplace(a, n);
    if (n == 0 && report.verified) {
      report.verified = false;
      report.first_failure = a;
    }
  }
  return report;
}

}  // namespace peano::goldbach

#endif  // PEANO_GOLDBACH_HPP
