#pragma once

#include <vector>

#include "emc/family.hpp"
#include "emc/numbers.hpp"

namespace emc {

// An s-partition of [sk] into k-blocks, stored in canonical order: each block
// contains the smallest element not covered by earlier blocks, so block 1
// always contains element 1.
struct Partition {
  std::vector<Mask> blocks;
};

// Number of unordered s-partitions of [sk] into k-blocks:
// (1/s!) * prod_{j=1..s} C(jk,k).
BigCount count_partitions(int s, int k);

// s-partitions through one fixed k-block: (1/(s-1)!) * prod_{j=1..s-1} C(jk,k).
BigCount count_M(int s, int k);

// s-partitions through a fixed disjoint pair of k-blocks:
// (1/(s-2)!) * prod_{j=1..s-2} C(jk,k).
BigCount count_M_prime(int s, int k);

// All canonical s-partitions of [sk]. Requires s*k <= 14.
std::vector<Partition> enumerate_partitions(int s, int k);

// The (G, pi) double count over G = complement(F), for F on exactly [sk].
struct DoubleCountReport {
  int s = 0;
  int k = 0;
  BigCount g_size;
  BigCount m;                  // partitions through one fixed block
  BigCount m_prime;            // partitions through a fixed disjoint pair
  BigCount sum_hits;           // sum over partitions of #blocks lying in G
  BigCount g_times_m;          // |G| * M
  bool identity_holds = false; // sum_hits == g_times_m

  BigCount partitions_total;
  BigCount partitions_ge1;     // partitions with at least one G-block
  BigCount partitions_ge2;     // partitions with at least two G-blocks

  int nu = 0;                  // matching number of F
  bool nu_within = false;      // nu <= s-1
  bool every_partition_hit = false;

  BigCount disjoint_pairs_in_g;
  BigCount sum_pair_hits;      // sum over partitions of C(#G-blocks, 2)
  bool pair_identity_holds = false;  // sum_pair_hits == dp(G) * M'

  // |G|*M >= total + #(>=2-hit); a consequence of the identity whenever
  // every partition is hit, so only meaningful (and only set) when nu_within.
  bool chain_holds = false;
};

// Requires F to live on [sk] with n = s*k for the given uniformity (s is
// inferred as n/k) and s*k <= 14.
DoubleCountReport verify_double_count(const Family& f);

struct BoundParams {
  int s = 3;
  int k = 2;
  Rational delta;   // 0 <= delta
  Rational big_c;   // > 0
  Rational delta0;  // >= delta

  // Throws std::invalid_argument when s < 3, k < 2, C <= 0, delta < 0,
  // or delta > delta0.
  void validate() const;
};

// Density coefficient (s-1)/s - (s-2)*delta / (s^3 (s-1) C).
Rational stab_upper_bound(const BoundParams& p);

// delta(s-2) / (2Cs(s-1)) * C(sk-1,k-1) * C((s-1)k,k).
// Throws std::domain_error unless delta <= 1/(200C).
Rational supersat_lower_bound(const BoundParams& p);

struct EpsilonFormulas {
  Rational epsilon_star;  // min{ (s-2)delta0 / (s^3 (s-1) C), (s-1)/s - delta0 }
  Rational epsilon;       // epsilon_star / (s+1)
};

// Requires s >= 3, C > 0, 0 < delta0 <= (s-1)/s.
EpsilonFormulas epsilon_formulas(int s, const Rational& big_c, const Rational& delta0);

}  // namespace emc
