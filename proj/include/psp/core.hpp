#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace psp {

using i64 = std::int64_t;

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

// {1, a2, a3}; construct through make() to get validation.
struct Basis {
  i64 a2 = 2;
  i64 a3 = 3;

  static Basis make(i64 a2, i64 a3);
  bool operator==(const Basis&) const = default;
  auto operator<=>(const Basis&) const = default;
};

struct Generation {
  i64 c1 = 0;
  i64 c2 = 0;
  i64 c3 = 0;
  i64 value = 0;
  i64 stamps = 0;
  i64 order = 0;
};

struct CoverResult {
  i64 X = 0;
  i64 k = -1;
  i64 Y = 0;
};

// Fewest stamps from {1, a2} summing to v (v >= 0).
inline i64 min_stamps2(i64 v, i64 a2) { return v / a2 + v % a2; }

bool can_generate(const Basis& b, i64 s, i64 x);
std::optional<Generation> canonical_generation(const Basis& b, i64 s, i64 x);
CoverResult cover3(const Basis& b, i64 s);

// Largest X such that 1..X all use at most s stamps of {1, a2}.
i64 cover2(i64 a2, i64 s);

struct M2Result {
  i64 value = 0;
  std::vector<i64> a2;
};
M2Result m2(i64 s);

std::string to_string(const Basis& b);

}  // namespace psp
