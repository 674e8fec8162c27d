#include "emc/random.hpp"

#include <stdexcept>
#include <unordered_set>

#include "emc/core.hpp"

namespace emc {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below: bound must be positive");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

Family random_family(int n, int k, std::uint64_t m, SplitMix64& rng) {
  const std::uint64_t universe = binomial64(n, k);
  if (m > universe) throw std::invalid_argument("random_family: m exceeds C(n,k)");
  // Floyd's sampling: uniform m-subset of ranks with exactly m insert trials.
  std::unordered_set<std::uint64_t> ranks;
  for (std::uint64_t j = universe - m; j < universe; ++j) {
    std::uint64_t t = rng.below(j + 1);
    ranks.insert(ranks.count(t) ? j : t);
  }
  std::vector<Mask> members;
  members.reserve(ranks.size());
  for (std::uint64_t r : ranks) members.push_back(colex_unrank(r, n, k).bits);
  return Family(n, k, std::move(members));
}

}  // namespace emc
