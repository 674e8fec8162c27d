#include "emc/family.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "emc/core.hpp"

namespace emc {

namespace {

void check_member(Mask m, int n, int k) {
  if (std::popcount(m) != k) throw std::invalid_argument("member has wrong cardinality");
  GroundSet gs(n);
  if (m & ~gs.full_mask()) throw std::invalid_argument("member outside ground set");
}

}  // namespace

Family::Family(int n, int k) : n_(n), k_(k) {
  GroundSet gs(n);
  if (k < 1 || k > n) throw std::invalid_argument("uniformity k out of range");
}

Family::Family(int n, int k, std::vector<Mask> members) : Family(n, k) {
  for (Mask m : members) check_member(m, n, k);
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw std::invalid_argument("duplicate member");
  members_ = std::move(members);
}

bool Family::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

Family Family::with(Mask m) const {
  check_member(m, n_, k_);
  if (contains(m)) return *this;
  Family out(n_, k_);
  out.members_.reserve(members_.size() + 1);
  auto pos = std::lower_bound(members_.begin(), members_.end(), m);
  out.members_.insert(out.members_.end(), members_.begin(), pos);
  out.members_.push_back(m);
  out.members_.insert(out.members_.end(), pos, members_.end());
  return out;
}

Family Family::without(Mask m) const {
  Family out(n_, k_);
  out.members_.reserve(members_.size());
  for (Mask x : members_)
    if (x != m) out.members_.push_back(x);
  return out;
}

std::uint64_t Family::degree(int x) const {
  if (x < 1 || x > n_) throw std::invalid_argument("element out of range");
  const Mask bit = Mask{1} << (x - 1);
  std::uint64_t d = 0;
  for (Mask m : members_)
    if (m & bit) ++d;
  return d;
}

DegreeProfile Family::degree_profile() const {
  DegreeProfile p;
  for (int x = 1; x <= n_; ++x) p.degrees[x] = 0;
  for (Mask m : members_)
    for (int x : elements_of(m)) ++p.degrees[x];
  p.min_degree = members_.empty() ? 0 : ~std::uint64_t{0};
  p.max_degree = 0;
  for (auto& [x, d] : p.degrees) {
    p.min_degree = std::min(p.min_degree, d);
    p.max_degree = std::max(p.max_degree, d);
  }
  if (members_.empty()) p.min_degree = 0;
  return p;
}

Family Family::restrict(Mask contains_all, Mask avoids_all) const {
  if (contains_all & avoids_all)
    throw std::invalid_argument("restrict: contains and avoids overlap");
  Family out(n_, k_);
  for (Mask m : members_)
    if ((m & contains_all) == contains_all && !(m & avoids_all))
      out.members_.push_back(m);
  return out;
}

Family Family::complement() const {
  Family out(n_, k_);
  for (Mask m : all_ksets(n_, k_))
    if (!contains(m)) out.members_.push_back(m);
  return out;
}

namespace {

// Branch and bound for the largest pairwise-disjoint subset. Sets are
// scanned in order; `used` is the union of the current selection.
struct MatchingSearch {
  const std::vector<Mask>& sets;
  int cap;
  int best = 0;

  void run(std::size_t from, Mask used, int current) {
    if (current > best) best = current;
    if (best >= cap) return;
    for (std::size_t i = from; i < sets.size(); ++i) {
      if (current + static_cast<int>(sets.size() - i) <= best) return;
      if (sets[i] & used) continue;
      run(i + 1, used | sets[i], current + 1);
      if (best >= cap) return;
    }
  }
};

bool find_disjoint(const std::vector<Mask>& sets, std::size_t from, Mask used, int need) {
  if (need == 0) return true;
  for (std::size_t i = from; i + need <= sets.size(); ++i) {
    if (sets[i] & used) continue;
    if (find_disjoint(sets, i + 1, used | sets[i], need - 1)) return true;
  }
  return false;
}

}  // namespace

int max_disjoint_subset(const std::vector<Mask>& sets, int cap) {
  if (sets.empty() || cap <= 0) return 0;
  MatchingSearch search{sets, cap};
  search.run(0, 0, 0);
  return search.best;
}

bool exists_disjoint_subset(const std::vector<Mask>& sets, int s) {
  if (s <= 0) return true;
  return find_disjoint(sets, 0, 0, s);
}

int Family::matching_number() const {
  return max_disjoint_subset(members_, n_ / k_);
}

bool Family::has_matching_of_size(int s) const {
  return exists_disjoint_subset(members_, s);
}

BigCount Family::count_disjoint_pairs() const {
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = i + 1; j < members_.size(); ++j)
      if (!(members_[i] & members_[j])) ++pairs;
  return BigCount(pairs);
}

}  // namespace emc
