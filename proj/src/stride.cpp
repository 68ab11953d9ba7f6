#include "psp/stride.hpp"

#include <algorithm>

namespace psp {

namespace {

bool reachable(const Basis& b, i64 v, i64 budget) {
  return budget >= 0 && min_stamps2(v, b.a2) <= budget;
}

void check_n(i64 n) {
  if (n < 1) throw InvalidInput("n must be at least 1");
}

}  // namespace

bool StrideGenerator::canonical() const {
  return std::all_of(breaks.begin(), breaks.end(), [](const BreakInfo& bi) { return bi.canonical(); });
}

std::optional<i64> min_order(const Basis& b, i64 n, i64 x, i64 cap) {
  // min_stamps2(v) >= v / a2, so i*(a3 - a2) <= n*a2 - x is necessary.
  i64 room = n * b.a2 - x;
  if (room < 0) return std::nullopt;
  i64 last = room / (b.a3 - b.a2);
  if (cap >= 0) last = std::min(last, cap);
  for (i64 i = 0; i <= last; ++i)
    if (reachable(b, x + i * b.a3, n + i)) return i;
  return std::nullopt;
}

i64 break_search_bound(const Basis& b, i64 n) {
  return ((n - 1) * b.a2 + b.a3) / (b.a3 - b.a2);
}

bool is_break(const Basis& b, i64 n, i64 p, i64 y) {
  if (y <= 0 || y >= b.a3) return false;
  for (i64 j = 0; j <= p + 1; ++j)
    if (reachable(b, y + j * b.a3, n + j - 1)) return false;
  return true;
}

BreakInfo break_order(const Basis& b, i64 n, i64 p, i64 y) {
  (void)Basis::make(b.a2, b.a3);
  check_n(n);
  if (!is_break(b, n, p, y)) throw InvalidInput("value is not a break");
  BreakInfo bi;
  bi.y = y;
  bi.fundamental = y >= b.a3 - b.a2 && y < b.a3 - b.a2 + n;
  i64 jmax = break_search_bound(b, n);
  for (i64 j = p + 2; j <= jmax; ++j) {
    if (reachable(b, y + j * b.a3, n + j - 1)) {
      bi.order = j;
      break;
    }
  }
  return bi;
}

std::optional<StrideGenerator> classify(const Basis& b, i64 n, i64 p_cap) {
  (void)Basis::make(b.a2, b.a3);
  check_n(n);
  i64 p = 0;
  for (i64 x = 1; x < b.a3; ++x) {
    auto i = min_order(b, n, x, p_cap);
    if (!i) return std::nullopt;
    p = std::max(p, *i);
  }
  StrideGenerator sg{b, n, p, {}};
  for (i64 y = 1; y < b.a3; ++y)
    if (is_break(b, n, p, y)) sg.breaks.push_back(break_order(b, n, p, y));
  if (sg.breaks.empty()) return std::nullopt;
  return sg;
}

bool is_sg_of_order(const Basis& b, i64 n, i64 p) {
  bool hits_p = false;
  for (i64 x = 1; x < b.a3; ++x) {
    auto i = min_order(b, n, x, p);
    if (!i) return false;
    if (*i == p) hits_p = true;
  }
  if (!hits_p) return false;
  for (i64 y = 1; y < b.a3; ++y)
    if (is_break(b, n, p, y)) return true;
  return false;
}

i64 series_n_max(const Basis& b) {
  i64 worst = 0;
  for (i64 x = 1; x < b.a3; ++x) worst = std::max(worst, min_stamps2(x, b.a2));
  return worst + 1;
}

std::vector<StrideGenerator> sg_series(const Basis& b) {
  (void)Basis::make(b.a2, b.a3);
  std::vector<StrideGenerator> out;
  for (i64 n = series_n_max(b); n >= 1; --n)
    if (auto sg = classify(b, n)) out.push_back(std::move(*sg));
  return out;
}

Underlying underlying_sg(const Basis& b, i64 s) {
  CoverResult c = cover3(b, s);
  if (c.k < 0) throw InvalidInput("cover is trivial; no underlying stride generator");
  auto sg = classify(b, s - c.k);
  if (!sg) throw std::logic_error("cover has no underlying stride generator");
  if (sg->p > c.k) throw std::logic_error("underlying stride generator order exceeds k");
  auto it = std::find_if(sg->breaks.begin(), sg->breaks.end(),
                         [&](const BreakInfo& bi) { return !bi.order || *bi.order > c.k + 1; });
  if (it == sg->breaks.end() || (c.k + 1) * b.a3 + it->y - 1 != c.X)
    throw std::logic_error("cover does not match the underlying break");
  return {std::move(*sg), c.k};
}

i64 potential_cover(const StrideGenerator& sg, i64 s) {
  if (s < sg.n) throw InvalidInput("s must be at least n");
  return checked_add(checked_mul(s - sg.n + 1, sg.basis.a3), sg.first_break() - 1);
}

Basis construct_long_sg(i64 n, i64 k) {
  if (n <= 1 || k <= 1) throw InvalidInput("n and k must both exceed 1");
  return Basis::make(checked_mul(k - 1, n), checked_mul(k, n));
}

double classify_work_estimate(const Basis& b, i64 n) {
  double per_x = static_cast<double>(n) * b.a2 / static_cast<double>(b.a3 - b.a2) + 2.0;
  return per_x * static_cast<double>(b.a3);
}

}  // namespace psp
