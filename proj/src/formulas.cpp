#include "psp/formulas.hpp"

#include <cmath>
#include <numeric>

namespace psp {

namespace {

i64 exact_div(i64 num, i64 den) {
  if (num % den != 0) throw std::logic_error("formula value is not an integer");
  return num / den;
}

void check_n(i64 n) {
  if (n < 1) throw InvalidInput("n must be at least 1");
}

}  // namespace

Rational Rational::make(i64 num, i64 den) {
  if (den == 0) throw InvalidInput("zero denominator");
  if (den < 0) num = -num, den = -den;
  i64 g = std::gcd(num, den);
  if (g > 1) num /= g, den /= g;
  return Rational{num, den};
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::vector<OsgRow> osg0(i64 n) {
  check_n(n);
  i64 n2 = checked_mul(n, n);
  if (n % 2 == 0) {
    i64 a3 = exact_div(n2 + 6 * n + 4, 4);
    return {OsgRow{n, (n + 2) / 2, a3, exact_div(n2 + 4 * n, 4)},
            OsgRow{n, (n + 4) / 2, a3, exact_div(n2 + 4 * n - 4, 4)}};
  }
  return {OsgRow{n, exact_div(n + 3, 2), exact_div(n2 + 6 * n + 5, 4), exact_div(n2 + 4 * n - 1, 4)}};
}

OsgRow osg1(i64 n) {
  check_n(n);
  i64 n2 = checked_mul(n, n);
  switch (n % 3) {
    case 0:
      return {n, n + 4, exact_div(n2 + 5 * n + 6, 3), exact_div(n2 + 3 * n - 9, 3)};
    case 1:
      return {n, n + 2, exact_div(n2 + 5 * n + 6, 3), exact_div(n2 + 3 * n - 1, 3)};
    default:
      return {n, n + 3, exact_div(n2 + 5 * n + 7, 3), exact_div(n2 + 3 * n - 4, 3)};
  }
}

std::optional<OsgRow> sg1_1(i64 n) {
  check_n(n);
  if (n == 2) return OsgRow{2, 4, 6, 3};
  if (n == 3) return OsgRow{3, 6, 9, 5};
  i64 n2 = checked_mul(n, n);
  if (n % 3 == 0) return OsgRow{n, n + 1, exact_div(n2 + 5 * n + 3, 3), exact_div(n2 + 3 * n, 3)};
  if (n % 3 == 1 && n >= 4) return OsgRow{n, n + 5, exact_div(n2 + 5 * n + 3, 3), exact_div(n2 + 3 * n - 16, 3)};
  return std::nullopt;
}

MoptRow mopt(i64 s) {
  if (s < kMoptMinS) throw RangeError("closed form for the optimum needs s >= 18");
  MoptRow m;
  m.s = s;
  m.r = s % 9;
  m.t = s / 9;
  const i64 t = m.t;
  const i64 t2 = checked_mul(t, t), t3 = checked_mul(t2, t);
  struct Coef { i64 dk, dn, c2, c1, c0; };
  // k_opt = 3t + dk, n_opt = 6t + dn, X_opt = 36t^3 + c2 t^2 + c1 t + c0
  static const Coef rows[9] = {
      {-1, 1, 54, 22, 0},   {0, 1, 66, 36, 4},    {0, 2, 78, 53, 8},
      {1, 2, 90, 71, 15},   {1, 3, 102, 92, 22},  {1, 4, 114, 116, 36},
      {1, 5, 126, 143, 49}, {2, 5, 138, 173, 68}, {2, 6, 150, 204, 86},
  };
  const Coef& c = rows[m.r];
  m.k_opt = 3 * t + c.dk;
  m.n_opt = 6 * t + c.dn;
  m.X_opt = checked_add(checked_add(checked_mul(36, t3), checked_mul(c.c2, t2)), c.c1 * t + c.c0);
  if (m.n_opt != s - m.k_opt) throw std::logic_error("n_opt != s - k_opt");
  return m;
}

OptimalBasisRow optimal_basis_poly(i64 s) {
  if (s < kMoptMinS) throw RangeError("closed form for the optimum needs s >= 18");
  const i64 t = s / 9, r = s % 9, t2 = checked_mul(t, t);
  struct Coef { i64 dn, da2, b1, b0; };  // n = 6t+dn, a2 = 6t+da2, a3 = 12t^2 + b1 t + b0
  static const Coef rows[9] = {
      {1, 3, 14, 4},  {1, 3, 14, 4},  {2, 5, 18, 7},  {2, 5, 18, 7},  {3, 7, 22, 10},
      {4, 6, 26, 14}, {5, 8, 30, 19}, {5, 8, 30, 19}, {6, 10, 34, 24},
  };
  const Coef& c = rows[r];
  return {6 * t + c.dn, 6 * t + c.da2, checked_add(checked_mul(12, t2), c.b1 * t + c.b0)};
}

MaximalSet maximal_set(i64 s) {
  MoptRow m = mopt(s);
  MaximalSet ms;
  ms.s = s;
  ms.t = m.t;
  ms.r = m.r;
  const i64 t = m.t;
  // a2, then a3 = C2*a2 + C1, then X = alpha*a3 + beta*a2 + gamma
  struct Coef { i64 da2, c2m, c2d, c1d, al_d, be_m, be_d, ga_d; };
  static const Coef rows[9] = {
      {3, 2, 1, 1, 0, 2, 0, 0},  {3, 2, 1, 1, 1, 2, 0, 0},  {5, 2, 1, 2, 1, 2, 0, 1},
      {5, 2, 1, 2, 2, 2, 0, 1},  {7, 2, 1, 3, 2, 2, 0, 2},  {6, 2, 2, 2, 2, 2, 1, 2},
      {8, 2, 2, 3, 2, 2, 1, 3},  {8, 2, 2, 3, 3, 2, 1, 3},  {10, 2, 2, 4, 3, 2, 1, 4},
  };
  const Coef& c = rows[m.r];
  ms.a2 = 6 * t + c.da2;
  ms.C2 = c.c2m * t + c.c2d;
  ms.C1 = 2 * t + c.c1d;
  ms.a3 = checked_add(checked_mul(ms.C2, ms.a2), ms.C1);
  i64 alpha = 3 * t + c.al_d, beta = c.be_m * t + c.be_d, gamma = 4 * t + c.ga_d;
  ms.X_opt = checked_add(checked_add(checked_mul(alpha, ms.a3), checked_mul(beta, ms.a2)), gamma);

  if (ms.X_opt != m.X_opt) throw std::logic_error("maximal set cover disagrees with optimum");
  OptimalBasisRow poly = optimal_basis_poly(s);
  if (poly.n_opt != m.n_opt || poly.a2 != ms.a2 || poly.a3 != ms.a3)
    throw std::logic_error("maximal set disagrees with polynomial basis row");
  OsgRow o = osg1(m.n_opt);
  if (o.a2 != ms.a2 || o.a3 != ms.a3) throw std::logic_error("maximal set is not OSG(n_opt,1)");
  return ms;
}

A2Bounds a2_bounds(i64 n, i64 p, i64 a3) {
  if (n < 0 || p < 0) throw InvalidInput("n and p must be non-negative");
  return {Rational::make(checked_mul(a3, p + 1), n + p + 1), checked_add(checked_mul(n, p + 1), 1)};
}

Rational a3_upper(i64 n, i64 p) {
  if (n < 1 || p < 0) throw InvalidInput("need n >= 1 and p >= 0");
  i64 m = n + p + 1;
  // n*m + m/(p+1)
  return Rational::make(checked_add(checked_mul(checked_mul(n, m), p + 1), m), p + 1);
}

Rational key1p_limit(i64 n, i64 p) {
  if (p < 1) throw InvalidInput("p must be at least 1");
  i64 B = checked_add(checked_mul(n, p + 1), 1);
  i64 C = p * p + p + 1;
  return Rational::make(checked_mul(B + C, B + 3 * C), 4 * C);
}

double pp_P(double s, double a3) {
  double X = 4.0 * s * s * s / 81.0 + 2.0 * s * s / 3.0 + 22.0 * s / 9.0;
  double C = s + 3.0 - a3 / s;
  double N = (s + 2.0) - X / a3;
  return ((N + 1.0) * C - a3) / (a3 - C);
}

double pp_a32(i64 si) {
  if (si < kPpMinS) throw RangeError("pp bound is only defined for s >= 23");
  const double s = static_cast<double>(si);
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s, s6 = s5 * s;
  double disc = 16 * s6 + 124 * s5 - 1062 * s4 - 13968 * s3 - 45846 * s2 - 57024 * s;
  if (disc < 0) throw RangeError("negative discriminant");
  double x = std::sqrt(disc);
  double y = 4 * s5 - 11 * s4 - 222 * s3 - 747 * s2 - 864 * s;
  double w = 85 * s4 + 548 * s3 + 1201 * s2 + 936 * s + 198;
  double pole = s * (s + 3) / (s + 1);
  return pole + s * ((s2 + 4 * s + 3) * x + y) / w;
}

double pp_a32_quadratic(i64 si) {
  if (si < kPpMinS) throw RangeError("pp bound is only defined for s >= 23");
  const double s = static_cast<double>(si);
  // P = (D2 a^2 + D1 a + D0) / (81 a (u a - v)); P' = 0 reduces to a quadratic.
  double D2 = -(162 * s + 243);
  double D1 = 85 * s * s * s + 540 * s * s + 927 * s;
  double D0 = -(4 * std::pow(s, 5) + 66 * std::pow(s, 4) + 360 * s * s * s + 594 * s * s);
  double u = s + 1, v = s * (s + 3);
  double A = D2 * v + D1 * u, B = 2 * u * D0, C = -v * D0;
  double disc = B * B - 4 * A * C;
  if (disc < 0) throw RangeError("negative discriminant");
  double r1 = (-B + std::sqrt(disc)) / (2 * A), r2 = (-B - std::sqrt(disc)) / (2 * A);
  return std::max(r1, r2);
}

double pp_bound(i64 s) { return pp_P(static_cast<double>(s), pp_a32(s)); }

Rational pp_limit() {
  // a32 ~ alpha s^2 with alpha = (sqrt(16) + 4) / 85; then
  // P -> ((1 - 4/(81 alpha)) (1 - alpha) - alpha) / alpha.
  const Rational alpha = Rational::make(4 + 4, 85);
  auto mul = [](Rational a, Rational b) { return Rational::make(a.num * b.num, a.den * b.den); };
  auto sub = [](Rational a, Rational b) { return Rational::make(a.num * b.den - b.num * a.den, a.den * b.den); };
  auto div = [](Rational a, Rational b) { return Rational::make(a.num * b.den, a.den * b.num); };
  const Rational one{1, 1};
  Rational left = sub(one, div(Rational{4, 1}, mul(Rational{81, 1}, alpha)));
  return div(sub(mul(left, sub(one, alpha)), alpha), alpha);
}

}  // namespace psp
