#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "emc/core.hpp"
#include "emc/numbers.hpp"

namespace emc {

struct DegreeProfile {
  std::map<int, std::uint64_t> degrees;  // element -> |F_x|, all of 1..n
  std::uint64_t min_degree = 0;
  std::uint64_t max_degree = 0;
};

// A duplicate-free k-uniform family on [n]. Immutable after construction;
// members are kept sorted by colex rank (= numeric order of bitmasks), so
// equality of families is equality of member vectors.
class Family {
 public:
  Family(int n, int k);
  // Throws std::invalid_argument on wrong popcount, support outside [n],
  // or duplicates.
  Family(int n, int k, std::vector<Mask> members);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Mask>& members() const { return members_; }
  bool contains(Mask m) const;

  bool operator==(const Family& other) const = default;

  Family with(Mask m) const;     // insert (no-op if present)
  Family without(Mask m) const;  // erase (no-op if absent)

  std::uint64_t degree(int x) const;
  DegreeProfile degree_profile() const;

  // Members containing every element of contains_all and none of avoids_all.
  // The masks must be disjoint.
  Family restrict(Mask contains_all, Mask avoids_all) const;

  Family complement() const;

  int matching_number() const;
  bool has_matching_of_size(int s) const;

  BigCount count_disjoint_pairs() const;

 private:
  int n_;
  int k_;
  std::vector<Mask> members_;  // sorted ascending (colex order)
};

// Largest pairwise-disjoint subset of `sets`, by branch and bound. `cap`
// limits the answer from above (search stops once cap is reached); pass a
// value > n/k for the unconstrained matching number.
int max_disjoint_subset(const std::vector<Mask>& sets, int cap);

// True iff `sets` contains s pairwise disjoint members.
bool exists_disjoint_subset(const std::vector<Mask>& sets, int s);

}  // namespace emc
