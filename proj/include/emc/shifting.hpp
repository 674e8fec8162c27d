#pragma once

#include "emc/family.hpp"
#include "emc/numbers.hpp"

namespace emc {

struct ShiftPair {
  int i;
  int j;  // 1 <= i < j <= n
};

// One application of S_{i,j}: a member F with j in F, i not in F moves to
// F - j + i unless that image is already in the family.
Family shift_family(const Family& f, ShiftPair p);

bool is_left_compressed(const Family& f);

// Sweeps all pairs (i,j), i < j, in lexicographic order; a full sweep
// completes before repeating, and sweeps repeat until one makes no change.
Family left_compress(const Family& f);

struct ShiftDegAReport {
  BigCount lhs;  // (n-k) * |F_n|
  BigCount rhs;  // k * |F_n-bar|
  bool holds = false;
};

struct ShiftDegBReport {
  BigCount lhs_num;  // |F_n|
  BigCount lhs_den;  // C(n-1, k-1)
  BigCount rhs_num;  // |F_{n-1, n-bar}|
  BigCount rhs_den;  // C(n-2, k-1)
  bool holds = false;  // lhs_num * rhs_den <= rhs_num * lhs_den
};

// Both verifiers require a left-compressed family and throw
// std::invalid_argument otherwise.
ShiftDegAReport verify_shiftdeg_a(const Family& f);
ShiftDegBReport verify_shiftdeg_b(const Family& f);

}  // namespace emc
