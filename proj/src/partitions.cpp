#include "emc/partitions.hpp"

#include <bit>
#include <stdexcept>

#include "emc/core.hpp"
#include "emc/errors.hpp"

namespace emc {

namespace {

BigCount factorial(int m) {
  BigCount f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// (1/t!) * prod_{j=1..t} C(jk,k): partitions of [tk] into t unordered k-blocks.
BigCount block_partition_count(int t, int k) {
  BigCount prod = 1;
  for (int j = 1; j <= t; ++j) prod *= binomial(static_cast<long long>(j) * k, k);
  return prod / factorial(t);
}

}  // namespace

BigCount count_partitions(int s, int k) {
  if (s < 1 || k < 1) throw std::invalid_argument("count_partitions: need s,k >= 1");
  return block_partition_count(s, k);
}

BigCount count_M(int s, int k) {
  if (s < 2 || k < 1) throw std::invalid_argument("count_M: need s >= 2, k >= 1");
  return block_partition_count(s - 1, k);
}

BigCount count_M_prime(int s, int k) {
  if (s < 2 || k < 1) throw std::invalid_argument("count_M_prime: need s >= 2, k >= 1");
  return block_partition_count(s - 2, k);
}

namespace {

void extend_partition(int s, int k, Mask universe, Mask covered,
                      std::vector<Mask>& blocks, std::vector<Partition>& out) {
  if (static_cast<int>(blocks.size()) == s) {
    out.push_back(Partition{blocks});
    return;
  }
  // canonical order: the next block takes the least uncovered element
  const Mask free = universe & ~covered;
  const int anchor = std::countr_zero(free);
  const Mask anchor_bit = Mask{1} << anchor;
  const Mask pool = free & ~anchor_bit;
  // choose the other k-1 elements of the block from the remaining pool
  std::vector<int> pool_elems = elements_of(pool);
  std::vector<int> pick(k - 1);
  auto choose = [&](auto&& self, int from, int depth) -> void {
    if (depth == k - 1) {
      Mask block = anchor_bit;
      for (int idx : pick) block |= Mask{1} << (pool_elems[idx] - 1);
      blocks.push_back(block);
      extend_partition(s, k, universe, covered | block, blocks, out);
      blocks.pop_back();
      return;
    }
    for (int i = from; i + (k - 1 - depth) <= static_cast<int>(pool_elems.size()); ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  if (k == 1) {
    blocks.push_back(anchor_bit);
    extend_partition(s, k, universe, covered | anchor_bit, blocks, out);
    blocks.pop_back();
  } else {
    choose(choose, 0, 0);
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int s, int k) {
  if (s < 1 || k < 1) throw std::invalid_argument("enumerate_partitions: need s,k >= 1");
  if (s * k > 14) throw CapError("partition ground set exceeds 14");
  const Mask universe = (Mask{1} << (s * k)) - 1;
  std::vector<Partition> out;
  std::vector<Mask> blocks;
  extend_partition(s, k, universe, 0, blocks, out);
  return out;
}

DoubleCountReport verify_double_count(const Family& f) {
  const int k = f.k();
  if (k < 1) throw std::invalid_argument("verify_double_count: k < 1");
  if (f.n() % k != 0) throw std::invalid_argument("verify_double_count: ground set is not [sk]");
  const int s = f.n() / k;
  if (s < 2) throw std::invalid_argument("verify_double_count: need s >= 2");
  if (s * k > 14) throw CapError("partition ground set exceeds 14");

  DoubleCountReport r;
  r.s = s;
  r.k = k;
  r.m = count_M(s, k);
  r.m_prime = count_M_prime(s, k);

  const Family g = f.complement();
  r.g_size = g.size();
  r.g_times_m = r.g_size * r.m;
  r.disjoint_pairs_in_g = g.count_disjoint_pairs();

  std::uint64_t total = 0, ge1 = 0, ge2 = 0;
  BigCount sum_hits = 0, sum_pair_hits = 0;
  for (const Partition& p : enumerate_partitions(s, k)) {
    int hits = 0;
    for (Mask block : p.blocks)
      if (g.contains(block)) ++hits;
    ++total;
    if (hits >= 1) ++ge1;
    if (hits >= 2) ++ge2;
    sum_hits += hits;
    sum_pair_hits += BigCount(hits) * (hits - 1) / 2;
  }
  r.partitions_total = total;
  r.partitions_ge1 = ge1;
  r.partitions_ge2 = ge2;
  r.sum_hits = sum_hits;
  r.sum_pair_hits = sum_pair_hits;
  r.identity_holds = sum_hits == r.g_times_m;
  r.pair_identity_holds = sum_pair_hits == r.disjoint_pairs_in_g * r.m_prime;

  r.nu = f.matching_number();
  r.nu_within = r.nu <= s - 1;
  r.every_partition_hit = ge1 == total;
  if (r.nu_within)
    r.chain_holds = r.g_times_m >= r.partitions_total + r.partitions_ge2;
  return r;
}

void BoundParams::validate() const {
  if (s < 3) throw std::invalid_argument("bound params: need s >= 3");
  if (k < 2) throw std::invalid_argument("bound params: need k >= 2");
  if (big_c <= 0) throw std::invalid_argument("bound params: need C > 0");
  if (delta < 0) throw std::invalid_argument("bound params: need delta >= 0");
  if (delta > delta0) throw std::invalid_argument("bound params: need delta <= delta0");
}

Rational stab_upper_bound(const BoundParams& p) {
  p.validate();
  const Rational s(p.s);
  return (s - 1) / s - (s - 2) * p.delta / (s * s * s * (s - 1) * p.big_c);
}

Rational supersat_lower_bound(const BoundParams& p) {
  p.validate();
  if (p.delta * 200 * p.big_c > 1)
    throw std::domain_error("supersaturation bound requires delta <= 1/(200C)");
  const Rational s(p.s);
  const Rational coeff = p.delta * (s - 2) / (2 * p.big_c * s * (s - 1));
  return coeff * Rational(binomial(static_cast<long long>(p.s) * p.k - 1, p.k - 1)) *
         Rational(binomial(static_cast<long long>(p.s - 1) * p.k, p.k));
}

EpsilonFormulas epsilon_formulas(int s, const Rational& big_c, const Rational& delta0) {
  if (s < 3) throw std::invalid_argument("epsilon formulas: need s >= 3");
  if (big_c <= 0) throw std::invalid_argument("epsilon formulas: need C > 0");
  const Rational target = Rational(s - 1) / s;
  if (delta0 <= 0 || delta0 > target)
    throw std::invalid_argument("epsilon formulas: need 0 < delta0 <= (s-1)/s");
  const Rational ss(s);
  const Rational first = (ss - 2) * delta0 / (ss * ss * ss * (ss - 1) * big_c);
  const Rational second = target - delta0;
  EpsilonFormulas e;
  e.epsilon_star = first < second ? first : second;
  e.epsilon = e.epsilon_star / (s + 1);
  return e;
}

}  // namespace emc
