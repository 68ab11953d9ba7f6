#include "psp/core.hpp"

#include <algorithm>
#include <vector>

namespace psp {

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Basis Basis::make(i64 a2, i64 a3) {
  if (a2 <= 1) throw InvalidInput("a2 must exceed 1");
  if (a3 <= a2) throw InvalidInput("a3 must exceed a2");
  return Basis{a2, a3};
}

static void check_basis(const Basis& b) { (void)Basis::make(b.a2, b.a3); }

bool can_generate(const Basis& b, i64 s, i64 x) {
  return canonical_generation(b, s, x).has_value();
}

std::optional<Generation> canonical_generation(const Basis& b, i64 s, i64 x) {
  check_basis(b);
  if (x < 0) throw InvalidInput("x must be non-negative");
  if (s < 0) throw InvalidInput("s must be non-negative");
  // Given c3, the fewest-stamp split of the rest takes c2 as large as possible,
  // so the first feasible c3 from the top also maximizes c2.
  for (i64 c3 = std::min(s, x / b.a3); c3 >= 0; --c3) {
    i64 rest = x - c3 * b.a3;
    if (min_stamps2(rest, b.a2) <= s - c3) {
      Generation g;
      g.c3 = c3;
      g.c2 = rest / b.a2;
      g.c1 = rest % b.a2;
      g.value = x;
      g.stamps = g.c1 + g.c2 + g.c3;
      g.order = x / b.a3 - c3;
      return g;
    }
  }
  return std::nullopt;
}

CoverResult cover3(const Basis& b, i64 s) {
  check_basis(b);
  if (s < 1) throw InvalidInput("s must be at least 1");
  const i64 a2 = b.a2, a3 = b.a3;
  // best[x] = min over orders i seen so far of (stamps for x + i*a3 from {1,a2}) - i.
  // Value j*a3 + x is generable iff best[x] <= s - j once orders 0..j are folded in.
  std::vector<i64> best(static_cast<std::size_t>(a3));
  for (i64 x = 0; x < a3; ++x) best[x] = min_stamps2(x, a2);
  i64 X = -1;
  for (i64 j = 0; j <= s && X < 0; ++j) {
    if (j > 0) {
      i64 shift = checked_mul(j, a3);
      for (i64 x = 0; x < a3; ++x) {
        i64 f = min_stamps2(x + shift, a2) - j;
        if (f < best[x]) best[x] = f;
      }
    }
    for (i64 x = (j == 0 ? 1 : 0); x < a3; ++x) {
      if (best[x] > s - j) {
        X = j * a3 + x - 1;
        break;
      }
    }
  }
  // Stride s+1 never starts: (s+1)*a3 needs more than s stamps.
  if (X < 0) X = (s + 1) * a3 - 1;
  CoverResult r;
  r.X = X;
  r.k = X / a3 - 1;
  r.Y = X % a3;
  return r;
}

i64 cover2(i64 a2, i64 s) {
  if (a2 < 2) throw InvalidInput("a2 must be at least 2");
  if (s < 1) throw InvalidInput("s must be at least 1");
  i64 v = 1;
  while (min_stamps2(v, a2) <= s) ++v;
  i64 scanned = v - 1;
  if (a2 <= s + 2) {
    i64 closed = a2 * (s + 3 - a2) - 2;
    if (closed != scanned) throw std::logic_error("cover2 scan disagrees with closed form");
  }
  return scanned;
}

M2Result m2(i64 s) {
  if (s < 1) throw InvalidInput("s must be at least 1");
  M2Result scan;
  // Beyond a2 = s+2 the cover stays at s.
  for (i64 a2 = 2; a2 <= s + 2; ++a2) {
    i64 c = cover2(a2, s);
    if (c > scan.value) {
      scan.value = c;
      scan.a2.clear();
    }
    if (c == scan.value) scan.a2.push_back(a2);
  }
  M2Result closed;
  i64 t = s / 2;
  if (s % 2 == 0) {
    closed.value = t * (t + 3);
    closed.a2 = {t + 1, t + 2};
  } else {
    closed.value = t * (t + 4) + 2;
    closed.a2 = {t + 2};
  }
  if (closed.value != scan.value || closed.a2 != scan.a2)
    throw std::logic_error("m2 scan disagrees with closed form");
  return scan;
}

std::string to_string(const Basis& b) {
  return "{1," + std::to_string(b.a2) + "," + std::to_string(b.a3) + "}";
}

}  // namespace psp
