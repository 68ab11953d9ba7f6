#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "psp/core.hpp"
#include "psp/stride.hpp"

namespace psp {

struct Guards {
  i64 s_max = 60;
  i64 n_max = 140;

  // PSP_MAX_S and PSP_MAX_N override the defaults when set.
  static Guards from_env();
};

struct Counters {
  i64 examined = 0;
  i64 pruned = 0;
  double elapsed_s = 0;
};

struct M3Result {
  i64 s = 0;
  i64 M = 0;
  std::vector<Basis> maximal;  // sorted by (a2, a3)
  Counters counters;
};

// jobs <= 0 means one worker per hardware thread.
M3Result brute_m3(i64 s, int jobs = 0, bool ignore_guard = false);

std::vector<StrideGenerator> enumerate_sg(i64 n, i64 p_min, i64 p_max, int jobs = 0);

struct BestOsg {
  i64 n = 0, p = 0;
  i64 a3 = 0;
  std::vector<Basis> bases;  // every maximizer, sorted
  std::vector<i64> first_breaks;
  Counters counters;
};
std::optional<BestOsg> best_osg(i64 n, i64 p);

struct Key1pCandidate {
  Basis basis;
  i64 C2 = 0, C1 = 0;
};

enum Key1pCase { kCase1a = 0, kCase1b = 1, kCase2a = 2, kCase2b = 3 };

struct Key1pResult {
  i64 n = 0, p = 0;
  std::array<std::vector<Key1pCandidate>, 4> cases;
  i64 rejected = 0;  // constraint solutions that failed re-classification

  // Longest a3 over the key-1 cases (1a, 1b) or key-p cases (2a, 2b).
  std::vector<Basis> best_key1() const;
  std::vector<Basis> best_keyp() const;
};
Key1pResult enumerate_key1p(i64 n, i64 p);

struct ScanEntry {
  i64 k = 0, n = 0;
  Basis basis;
  i64 y = 0, Y = 0, lead = 0, X = 0;
  // SG1(n,1) alongside, with its first break taken from classify.
  std::optional<Basis> sg1;
  i64 sg1_Y = 0, sg1_X = 0;
};

struct ScanResult {
  i64 s = 0;
  std::vector<ScanEntry> rows;
  i64 argmax_k = 0;
  i64 best_X = 0;
};
ScanResult scan_osg1_cover(i64 s, i64 k_min, i64 k_max);
ScanResult scan_osg1_cover(i64 s);

struct VerifyRow {
  std::string table;
  std::string label;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  i64 s_min = 0, s_max = 0;  // 0 means the selector's default
  i64 n_max = 0;
  int jobs = 0;
};

struct SearchReport {
  std::string selector;
  std::vector<VerifyRow> rows;
  Counters counters;

  bool passed() const;
  i64 failures() const;
};

const std::vector<std::string>& verify_selectors();
SearchReport verify_tables(const std::string& selector, const VerifyOptions& opt);

}  // namespace psp
