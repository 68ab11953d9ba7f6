#pragma once

// Slow, obviously-correct reference implementations. None of these call into
// the library's arithmetic shortcuts; they enumerate coefficients directly.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "psp/core.hpp"

namespace oracle {

using psp::Basis;
using psp::i64;

// Fewest stamps of {1, a2, a3} for every value 0..limit (coin-change DP).
inline std::vector<i64> min_stamps_table(const Basis& b, i64 limit) {
  std::vector<i64> dp(static_cast<std::size_t>(limit + 1), 0);
  for (i64 v = 1; v <= limit; ++v) {
    i64 best = dp[v - 1] + 1;
    if (v >= b.a2) best = std::min(best, dp[v - b.a2] + 1);
    if (v >= b.a3) best = std::min(best, dp[v - b.a3] + 1);
    dp[v] = best;
  }
  return dp;
}

// Largest X with every 1..X reachable in at most s stamps.
inline i64 cover(const Basis& b, i64 s) {
  const i64 limit = s * b.a3 + 1;
  auto dp = min_stamps_table(b, limit);
  for (i64 v = 1; v <= limit; ++v)
    if (dp[v] > s) return v - 1;
  return limit;
}

inline i64 cover2(i64 a2, i64 s) {
  for (i64 v = 1;; ++v) {
    bool ok = false;
    for (i64 c2 = 0; c2 * a2 <= v && !ok; ++c2) ok = c2 + (v - c2 * a2) <= s;
    if (!ok) return v - 1;
  }
}

// v = c2*a2 + c1 with c2 + c1 <= budget, by trying every c2.
inline bool reach2(i64 v, i64 a2, i64 budget) {
  if (v < 0 || budget < 0) return false;
  for (i64 c2 = 0; c2 * a2 <= v; ++c2)
    if (c2 + (v - c2 * a2) <= budget) return true;
  return false;
}

struct Gen {
  i64 c1, c2, c3, order;
};

// Every generation of x with at most s stamps.
inline std::vector<Gen> generations(const Basis& b, i64 s, i64 x) {
  std::vector<Gen> out;
  for (i64 c3 = 0; c3 * b.a3 <= x; ++c3)
    for (i64 c2 = 0; c3 * b.a3 + c2 * b.a2 <= x; ++c2) {
      i64 c1 = x - c3 * b.a3 - c2 * b.a2;
      if (c1 + c2 + c3 <= s) out.push_back({c1, c2, c3, x / b.a3 - c3});
    }
  return out;
}

// Each stamp is worth at most a2, so v needs at least v/a2 stamps; with budget
// n+j the stride offset j can only help while j*(a3-a2) <= n*a2.
inline i64 order_search_cap(const Basis& b, i64 n) { return n * b.a2 / (b.a3 - b.a2) + 1; }

// Definition-level test of "b is SG(n,p)": conditions (i), (ii), (iii).
inline bool is_sg(const Basis& b, i64 n, i64 p) {
  bool some_needs_p = false;
  for (i64 x = 1; x < b.a3; ++x) {
    i64 first = -1;
    for (i64 i = 0; i <= p && first < 0; ++i)
      if (reach2(x + i * b.a3, b.a2, n + i)) first = i;
    if (first < 0) return false;
    if (first == p) some_needs_p = true;
  }
  if (!some_needs_p) return false;
  for (i64 y = 1; y < b.a3; ++y) {
    bool hit = false;
    for (i64 j = 0; j <= p + 1 && !hit; ++j) hit = reach2(y + j * b.a3, b.a2, n + j - 1);
    if (!hit) return true;
  }
  return false;
}

// Smallest p making b an SG(n,p), if any.
inline std::optional<i64> sg_order(const Basis& b, i64 n) {
  i64 p = 0;
  for (i64 x = 1; x < b.a3; ++x) {
    i64 first = -1;
    for (i64 i = 0; i <= order_search_cap(b, n) && first < 0; ++i)
      if (reach2(x + i * b.a3, b.a2, n + i)) first = i;
    if (first < 0) return std::nullopt;
    p = std::max(p, first);
  }
  if (!is_sg(b, n, p)) return std::nullopt;
  return p;
}

struct Brk {
  i64 y;
  std::optional<i64> order;
};

inline std::vector<Brk> breaks(const Basis& b, i64 n, i64 p) {
  std::vector<Brk> out;
  for (i64 y = 1; y < b.a3; ++y) {
    bool hit = false;
    for (i64 j = 0; j <= p + 1 && !hit; ++j) hit = reach2(y + j * b.a3, b.a2, n + j - 1);
    if (hit) continue;
    Brk br{y, std::nullopt};
    for (i64 j = p + 2; j <= order_search_cap(b, n); ++j)
      if (reach2(y + j * b.a3, b.a2, n + j - 1)) {
        br.order = j;
        break;
      }
    out.push_back(br);
  }
  return out;
}

inline i64 gcd(i64 a, i64 b) {
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  i64 operator()(i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(eng); }
  Basis basis(i64 a3_max) {
    i64 a3 = (*this)(3, a3_max);
    return Basis{(*this)(2, a3 - 1), a3};
  }
};

}  // namespace oracle
