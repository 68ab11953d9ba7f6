#pragma once

#include <optional>
#include <vector>

#include "psp/core.hpp"

namespace psp {

struct BreakInfo {
  i64 y = 0;
  std::optional<i64> order;  // empty means Canonical
  bool fundamental = false;

  bool canonical() const { return !order.has_value(); }
  bool operator==(const BreakInfo&) const = default;
};

struct StrideGenerator {
  Basis basis;
  i64 n = 0;
  i64 p = 0;
  std::vector<BreakInfo> breaks;  // ascending y

  bool canonical() const;
  i64 first_break() const { return breaks.front().y; }
};

// Smallest i with x + i*a3 reachable by c2*a2 + c1, c2 + c1 <= n + i; empty if none exists.
// Stops early once i would exceed cap (when cap >= 0).
std::optional<i64> min_order(const Basis& b, i64 n, i64 x, i64 cap = -1);

// Beyond this j the break equation has no solution.
i64 break_search_bound(const Basis& b, i64 n);

bool is_break(const Basis& b, i64 n, i64 p, i64 y);

// With p_cap >= 0, gives up as soon as some value needs an order above p_cap.
std::optional<StrideGenerator> classify(const Basis& b, i64 n, i64 p_cap = -1);

// Cheap yes/no for "b is SG(n,p)" with early exit, used by the enumerators.
bool is_sg_of_order(const Basis& b, i64 n, i64 p);

BreakInfo break_order(const Basis& b, i64 n, i64 p, i64 y);

// n above which no break can exist.
i64 series_n_max(const Basis& b);
std::vector<StrideGenerator> sg_series(const Basis& b);

struct Underlying {
  StrideGenerator sg;
  i64 k = 0;
};
Underlying underlying_sg(const Basis& b, i64 s);

i64 potential_cover(const StrideGenerator& sg, i64 s);

Basis construct_long_sg(i64 n, i64 k);

// Rough count of inner-loop steps classify may take; lets callers refuse huge inputs.
double classify_work_estimate(const Basis& b, i64 n);

}  // namespace psp
