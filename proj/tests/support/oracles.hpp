#pragma once

// Independent reference implementations used to pin expected values before
// the main library is trusted. Everything here favors obviousness over
// speed: plain recursion, full enumeration, no bit tricks shared with the
// library kernels.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "emc/core.hpp"
#include "emc/numbers.hpp"

namespace oracle {

// Pascal's rule, memoized; no product formula.
emc::BigCount binomial(int n, int k);

// All k-subsets of [n] as sorted element vectors, in colex order (compare
// the largest differing element). Built by generate-and-sort.
std::vector<std::vector<int>> colex_ksets(int n, int k);

// Matching number by trying every subfamily, largest first.
int matching_number(const std::vector<emc::Mask>& sets);

// Unordered disjoint pairs by the definition.
std::uint64_t disjoint_pairs(const std::vector<emc::Mask>& sets);

struct MaxFamilyConstraints {
  int s = 2;  // require matching number <= s-1
  std::optional<std::uint64_t> min_degree;
  std::optional<std::uint64_t> max_degree;
  std::vector<emc::Mask> forced;
  std::vector<emc::Mask> forbidden;
};

struct MaxFamilyAnswer {
  std::int64_t optimum = -1;  // -1: no feasible family
  std::vector<std::vector<emc::Mask>> optima;
};

// Exhaustive scan of all 2^C(n,k) subfamilies. Requires C(n,k) <= 20.
MaxFamilyAnswer max_family(int n, int k, const MaxFamilyConstraints& c);

// Erdos-Gallai: the largest graph on n vertices with no s disjoint edges.
emc::BigCount max_graph_without_matching(int n, int s);

// Minimum disjoint-pair count over families of exactly `size` members with
// maximum degree <= max_degree; enumerates every such subfamily.
// Returns nullopt when none exists.
std::optional<std::uint64_t> min_disjoint_pairs(int n, int k, std::uint64_t size,
                                                std::uint64_t max_degree);

// Partitions of [sk] into k-blocks, as sets of sets; plain set recursion.
std::vector<std::set<std::set<int>>> partitions(int s, int k);

// Partition count by the recurrence P(t) = C(tk-1, k-1) * P(t-1).
emc::BigCount partition_count(int s, int k);

// Partitions (from the enumerator) containing the given fixed blocks.
std::uint64_t partitions_containing(int s, int k, const std::vector<std::set<int>>& blocks);

}  // namespace oracle
