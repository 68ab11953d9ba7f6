#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psp/core.hpp"

namespace psp {

struct Rational {
  i64 num = 0;
  i64 den = 1;

  static Rational make(i64 num, i64 den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
  std::string str() const;
};

struct OsgRow {
  i64 n = 0;
  i64 a2 = 0;
  i64 a3 = 0;
  i64 y = 0;  // first break; the cover remainder Y is y - 1

  Basis basis() const { return Basis{a2, a3}; }
  bool operator==(const OsgRow&) const = default;
};

std::vector<OsgRow> osg0(i64 n);
OsgRow osg1(i64 n);
std::optional<OsgRow> sg1_1(i64 n);

struct MoptRow {
  i64 s = 0, t = 0, r = 0;
  i64 k_opt = 0, n_opt = 0, X_opt = 0;
};

constexpr i64 kMoptMinS = 18;
MoptRow mopt(i64 s);

struct MaximalSet {
  i64 s = 0, t = 0, r = 0;
  i64 a2 = 0, C2 = 0, C1 = 0, a3 = 0;
  i64 X_opt = 0;

  Basis basis() const { return Basis{a2, a3}; }
};

// Residue-class rows giving (n_opt, a2, a3) directly as polynomials in t.
struct OptimalBasisRow {
  i64 n_opt = 0, a2 = 0, a3 = 0;
};
OptimalBasisRow optimal_basis_poly(i64 s);

MaximalSet maximal_set(i64 s);

struct A2Bounds {
  Rational lower;
  i64 upper = 0;
};
A2Bounds a2_bounds(i64 n, i64 p, i64 a3);
Rational a3_upper(i64 n, i64 p);
Rational key1p_limit(i64 n, i64 p);

constexpr i64 kPpMinS = 23;
double pp_P(double s, double a3);
// Larger critical point of P, two independent routes.
double pp_a32(i64 s);
double pp_a32_quadratic(i64 s);
double pp_bound(i64 s);
Rational pp_limit();

}  // namespace psp
