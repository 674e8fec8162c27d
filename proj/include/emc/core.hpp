#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "emc/numbers.hpp"

namespace emc {

// Membership vector of a subset of [n]. Element x lives in bit x-1; all
// interfaces speak 1-indexed elements, only the bits are 0-indexed.
using Mask = std::uint64_t;

// Hard cap: one machine word per set. Larger ground sets are rejected, not
// silently degraded.
inline constexpr int kMaxGroundSetSize = 64;

class GroundSet {
 public:
  explicit GroundSet(int n);  // throws std::invalid_argument unless 1 <= n <= 64
  int size() const { return n_; }
  Mask full_mask() const;

 private:
  int n_;
};

// A k-element subset of the ground set.
struct KSet {
  Mask bits = 0;

  int size() const;
  bool contains(int element) const;
  std::vector<int> elements() const;  // ascending, 1-indexed

  // Validates 1 <= e <= n, strictly ascending, no repeats.
  static KSet from_elements(const std::vector<int>& elems, int n);

  friend auto operator<=>(const KSet&, const KSet&) = default;
};

Mask mask_from_elements(const std::vector<int>& elems, int n);
std::vector<int> elements_of(Mask m);

// C(n, k), exact. Total: returns 0 when k > n, 1 when k == 0.
BigCount binomial(long long n, long long k);

// Fast path for the ground-set range; requires 0 <= n <= 64 (all values fit
// in a u64 there). Returns 0 when k > n or k < 0.
std::uint64_t binomial64(int n, int k);

// Position of s in colex order among all |s|-subsets. Colex order on k-sets
// coincides with numeric order of their masks.
std::uint64_t colex_rank(KSet s);

// Inverse of colex_rank. Throws std::out_of_range when r >= C(n, k).
KSet colex_unrank(std::uint64_t r, int n, int k);

// Streams all C(n, k) k-subsets of [n] in colex order.
class KSetStream {
 public:
  KSetStream(int n, int k);  // validates 0 <= k <= n, n <= 64
  bool next(KSet& out);      // false once exhausted
  std::uint64_t total() const { return total_; }

 private:
  std::uint64_t remaining_;
  std::uint64_t total_;
  Mask current_;
};

// Materialized colex-ordered list of all k-subsets; cap-checked (2^22).
std::vector<Mask> all_ksets(int n, int k);

}  // namespace emc
