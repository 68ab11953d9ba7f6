#include "psp/threads.hpp"

#include <algorithm>

namespace psp {

std::optional<Thread> thread_at(const Basis& b, i64 n, i64 i, i64 c2) {
  if (i < -1 || c2 < 0) return std::nullopt;
  i64 len = n + i - c2 + 1;
  if (len < 1) return std::nullopt;
  Thread t;
  t.i = i;
  t.c2 = c2;
  t.start = c2 * b.a2 - i * b.a3;
  t.len = len;
  t.end = t.start + len - 1;
  return t;
}

std::vector<Thread> threads_of_order(const Basis& b, i64 n, i64 i, i64 lo, i64 hi) {
  std::vector<Thread> out;
  for (i64 c2 = 0; c2 <= n + i; ++c2) {
    auto t = thread_at(b, n, i, c2);
    if (!t) break;
    if (t->start > hi) break;
    if (t->end >= lo) out.push_back(*t);
  }
  return out;
}

ThreadDiagram diagram(const Basis& b, i64 n, i64 p, i64 lo, i64 hi) {
  (void)Basis::make(b.a2, b.a3);
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (p < 0) throw InvalidInput("p must be non-negative");
  ThreadDiagram d{b, n, p, lo, hi, {}, {}};
  if (lo > hi) return d;
  for (i64 i = -1; i <= p + 1; ++i) {
    auto ts = threads_of_order(b, n, i, lo, hi);
    d.threads.insert(d.threads.end(), ts.begin(), ts.end());
  }
  i64 from = std::max<i64>(lo, 1), to = std::min(hi, 2 * b.a3 - 1);
  if (from > to) return d;
  std::vector<i64> depth(static_cast<std::size_t>(to - from + 2), 0);
  for (const Thread& t : d.threads) {
    if (t.i > p || t.end < from || t.start > to) continue;
    depth[std::max(t.start, from) - from] += 1;
    depth[std::min(t.end, to) - from + 1] -= 1;
  }
  i64 run = 0;
  for (i64 v = from; v <= to; ++v) {
    run += depth[v - from];
    if (run == 0) d.marks.push_back(v);
  }
  return d;
}

std::vector<i64> geometric_breaks(const Basis& b, i64 n, i64 p) {
  std::vector<Thread> ts;
  for (i64 i = 0; i <= p + 1; ++i) {
    auto t = threads_of_order(b, n, i, 0, b.a3 - 1);
    ts.insert(ts.end(), t.begin(), t.end());
  }
  std::vector<i64> out;
  for (i64 y = 1; y < b.a3; ++y) {
    bool ends_low = std::any_of(ts.begin(), ts.end(), [&](const Thread& t) { return t.i <= p && t.end == y; });
    bool crossed = std::any_of(ts.begin(), ts.end(), [&](const Thread& t) { return t.crosses(y); });
    if (ends_low && !crossed) out.push_back(y);
  }
  return out;
}

namespace {

std::vector<Thread> stride_threads(const StrideGenerator& sg, i64 lo, i64 hi) {
  std::vector<Thread> ts;
  for (i64 i = 0; i <= sg.p; ++i) {
    for (const Thread& t : threads_of_order(sg.basis, sg.n, i, lo, hi))
      if (t.start >= lo) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end(), [](const Thread& a, const Thread& b) { return a.start < b.start; });
  return ts;
}

}  // namespace

Signature signature(const StrideGenerator& sg) {
  Signature s;
  for (const Thread& t : stride_threads(sg, 0, sg.basis.a2 - 1)) s.orders.push_back(t.i);
  if (s.orders.size() > 1) s.key = s.orders[1];
  return s;
}

bool check_no_covered_threads(const StrideGenerator& sg) {
  std::vector<Thread> ts;
  for (i64 i = 0; i <= sg.p; ++i) {
    auto t = threads_of_order(sg.basis, sg.n, i, 0, sg.basis.a3 - 1);
    ts.insert(ts.end(), t.begin(), t.end());
  }
  for (const Thread& a : ts)
    for (const Thread& c : ts)
      if (a.i > c.i && a.start >= c.start && a.end <= c.end) return false;
  return true;
}

std::set<std::pair<i64, i64>> relative_positions(const StrideGenerator& sg) {
  if (sg.p <= 1) throw InvalidInput("relative positions need p > 1");
  auto ts = stride_threads(sg, 0, sg.basis.a3 - 1);
  std::set<std::pair<i64, i64>> out;
  for (std::size_t m = 1; m < ts.size(); ++m)
    out.insert({ts[m].i - ts[m - 1].i, ts[m].start - ts[m - 1].start});
  return out;
}

i64 key_m_diagnostic(const StrideGenerator& sg) {
  i64 c1 = sg.basis.a3 % sg.basis.a2;
  return sg.p * c1 / sg.basis.a2;
}

}  // namespace psp
