#pragma once

// Published values that the verify runs compare against.

#include <array>
#include <vector>

#include "psp/core.hpp"

namespace psp::reference {

struct MaximalRow {
  i64 s = 0;
  std::vector<Basis> bases;
  i64 M = 0;
  std::vector<std::array<i64, 2>> sg;  // underlying (n, p) per basis
};
const std::vector<MaximalRow>& maximal_rows();  // s = 1..22

struct BestOsgRow {
  i64 n = 0;
  std::array<std::vector<Basis>, 3> best;  // orders 1, 2, 3, all tied maximizers
  double limit2 = 0;
  double limit3 = 0;
};
const std::vector<BestOsgRow>& best_osg_rows();  // n = 1..133

struct Key1pRow {
  i64 n = 0;
  Basis key1;  // {0,0} when none exists
  Basis keyp;
  double limit = 0;
};
const std::vector<Key1pRow>& key1p_rows_p3();
const std::vector<Key1pRow>& key1p_rows_p7();

struct CaseCountRow {
  i64 n = 0;
  std::array<i64, 4> counts;  // 1a, 1b, 2a, 2b
};
const std::vector<CaseCountRow>& key1p_case_counts_p3();  // n = 2..10

struct PpRow {
  i64 s = 0;
  double pp = 0;
};
const std::vector<PpRow>& pp_rows();  // s = 40..58
constexpr i64 kPpLimitNum = 4633;
constexpr i64 kPpLimitDen = 1296;

struct ScanRow {
  i64 k = 0, n = 0;
  Basis basis;
  i64 Y = 0, lead = 0, X = 0;
};
const std::vector<ScanRow>& scan54_rows();

}  // namespace psp::reference
