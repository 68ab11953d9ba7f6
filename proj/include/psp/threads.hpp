#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "psp/core.hpp"
#include "psp/stride.hpp"

namespace psp {

// T_i(c2): values c2*a2 - i*a3 + c1 for c1 = 0..n+i-c2.
struct Thread {
  i64 i = 0;
  i64 c2 = 0;
  i64 start = 0;
  i64 end = 0;
  i64 len = 0;

  bool covers(i64 x) const { return start <= x && x <= end; }
  bool crosses(i64 x) const { return start <= x && x < end; }
  bool operator==(const Thread&) const = default;
};

// i >= -1; order -1 is the annotation layer that starts at a3.
std::optional<Thread> thread_at(const Basis& b, i64 n, i64 i, i64 c2);

// All threads of order i that touch [lo, hi].
std::vector<Thread> threads_of_order(const Basis& b, i64 n, i64 i, i64 lo, i64 hi);

struct ThreadDiagram {
  Basis basis;
  i64 n = 0;
  i64 p = 0;
  i64 lo = 0;
  i64 hi = -1;
  std::vector<Thread> threads;  // orders -1..p+1, sorted by (i, start)
  std::vector<i64> marks;       // values in (0, 2*a3) not covered by orders -1..p
};

ThreadDiagram diagram(const Basis& b, i64 n, i64 p, i64 lo, i64 hi);

// Breaks recomputed from thread intervals alone (no stamp arithmetic).
std::vector<i64> geometric_breaks(const Basis& b, i64 n, i64 p);

struct Signature {
  std::vector<i64> orders;
  std::optional<i64> key;
};

Signature signature(const StrideGenerator& sg);

bool check_no_covered_threads(const StrideGenerator& sg);

// (order gap, start gap) between successive threads in [0, a3).
std::set<std::pair<i64, i64>> relative_positions(const StrideGenerator& sg);

// intpt(p*C1/a2), reported as a diagnostic only.
i64 key_m_diagnostic(const StrideGenerator& sg);

}  // namespace psp
