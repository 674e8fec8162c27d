#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "emc/family.hpp"
#include "emc/numbers.hpp"

namespace emc {

enum class Objective { kMaxSize, kMinDisjointPairs };

struct Problem {
  int n = 0;
  int k = 0;
  int s = 2;
  Objective objective = Objective::kMaxSize;
  std::optional<std::uint64_t> min_degree;
  std::optional<std::uint64_t> max_degree;
  std::optional<std::uint64_t> fixed_size;  // required for kMinDisjointPairs
  bool restrict_left_compressed = false;
  std::vector<Mask> forced_members;
  std::vector<Mask> forbidden_members;
  std::optional<std::uint64_t> node_budget;
  int workers = 1;
  bool canonical_witness = false;

  // Throws std::invalid_argument on contract violations (n < k, s < 2,
  // restrict_left_compressed combined with degree constraints or with the
  // pair objective, forced/forbidden overlap) and CapError when
  // C(n,k) > 2^20.
  void validate() const;
};

struct SolverResult {
  BigCount optimum;              // meaningful only when feasible
  std::vector<Family> witnesses; // nonempty when feasible
  std::uint64_t nodes_explored = 0;
  bool proven_optimal = false;
  bool feasible = false;
  double wall_seconds = 0.0;
};

SolverResult solve_max_family(const Problem& p);

// All optimal families of the max-size problem, in colex order of member
// vectors. Never uses the left-compressed restriction (it changes the
// witness set).
std::vector<Family> enumerate_optima(const Problem& p);

SolverResult solve_min_disjoint_pairs(const Problem& p);

// True iff fam satisfies every constraint of p; used to certify witnesses.
bool satisfies_constraints(const Problem& p, const Family& fam);

// CPLEX LP text for the instance: one binary variable x<colex_rank> per
// k-set of [n], a packing row per s-tuple of pairwise disjoint k-sets,
// degree rows when constrained, bound fixings for forced/forbidden members.
std::string export_lp(const Problem& p);

struct KleitmanReport {
  int s = 0;
  int k = 0;
  int n = 0;  // s*k
  BigCount expected;  // C(sk,k) - C(sk-1,k-1)
  BigCount optimum;
  bool value_ok = false;
  std::uint64_t optima_count = 0;
  bool kleitman_families_optimal = false;  // every one-element-avoiding family attains the optimum
  // One-element-avoiding families are the only optima. Checked for s >= 3;
  // for s = 2 the optimum is hugely degenerate (any choice of one set from
  // each complementary pair works at n = 2k) and the clause is skipped.
  bool uniqueness_checked = false;
  bool uniqueness_ok = false;
  bool pass = false;
};

KleitmanReport kleitman_check(int s, int k);

struct DropRatioReport {
  int s = 0;
  int k = 0;
  int n = 0;  // s*k + 1
  BigCount f_value;
  Rational ratio;   // f / C(sk+1, k)
  Rational target;  // (s-1)/s
  Rational gap;     // target - ratio
  bool positive_gap = false;
};

DropRatioReport drop_ratio_check(int s, int k, int workers = 1);

struct EmcReport {
  int n = 0;
  int k = 0;
  int s = 0;
  BigCount optimum;
  BigCount a_size;
  BigCount b_size;
  BigCount conjectured;  // max(a_size, b_size)
  bool consistent = false;
  std::uint64_t nodes_explored = 0;
};

// Solves f(n,k,s) and compares against max(|A|,|B|). Requires n >= sk-1 so
// that A fits in the ground set.
EmcReport emc_check(int n, int k, int s, int workers = 1);

}  // namespace emc
