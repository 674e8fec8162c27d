#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "emc/core.hpp"
#include "emc/family.hpp"
#include "emc/random.hpp"
#include "support/oracles.hpp"

using namespace emc;

namespace {

Mask ms(std::initializer_list<int> elems, int n) {
  return mask_from_elements(std::vector<int>(elems), n);
}

}  // namespace

TEST_CASE("family construction validates members") {
  CHECK_THROWS_AS(Family(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Family(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(Family(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(Family(4, 2, {ms({1, 2, 3}, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(Family(4, 2, {Mask{1} << 5 | Mask{1}}), std::invalid_argument);
  CHECK_THROWS_AS(Family(4, 2, {ms({1, 2}, 4), ms({1, 2}, 4)}), std::invalid_argument);
  CHECK(Family(4, 2).empty());
}

TEST_CASE("family members are stored in colex order") {
  Family f(5, 2, {ms({4, 5}, 5), ms({1, 2}, 5), ms({2, 3}, 5)});
  CHECK(f.size() == 3);
  CHECK(f.members() == std::vector<Mask>{ms({1, 2}, 5), ms({2, 3}, 5), ms({4, 5}, 5)});
  CHECK(f.contains(ms({2, 3}, 5)));
  CHECK(!f.contains(ms({1, 3}, 5)));
}

TEST_CASE("with and without are persistent") {
  Family f(5, 2);
  Family g = f.with(ms({1, 2}, 5)).with(ms({3, 4}, 5));
  CHECK(f.empty());
  CHECK(g.size() == 2);
  CHECK(g.with(ms({1, 2}, 5)) == g);
  CHECK(g.without(ms({1, 2}, 5)).size() == 1);
  CHECK(g.without(ms({1, 5}, 5)) == g);
}

TEST_CASE("degrees of a star") {
  // all 2-sets through element 1 in [5]
  std::vector<Mask> sets;
  for (int x = 2; x <= 5; ++x) sets.push_back(ms({1, x}, 5));
  Family star(5, 2, sets);
  CHECK(star.degree(1) == 4);
  CHECK(star.degree(2) == 1);
  auto prof = star.degree_profile();
  CHECK(prof.max_degree == 4);
  CHECK(prof.min_degree == 1);
  CHECK(prof.degrees.at(1) == 4);
  CHECK(prof.degrees.at(5) == 1);
}

TEST_CASE("degree profile covers every ground element") {
  Family f(6, 3, {ms({1, 2, 3}, 6)});
  auto prof = f.degree_profile();
  CHECK(prof.degrees.size() == 6);
  CHECK(prof.degrees.at(6) == 0);
  CHECK(prof.min_degree == 0);
  CHECK(prof.max_degree == 1);
}

TEST_CASE("restrict splits by link and avoidance") {
  Family all(5, 2, all_ksets(5, 2));
  Family through1 = all.restrict(ms({1}, 5), 0);
  CHECK(through1.size() == 4);
  Family avoiding1 = all.restrict(0, ms({1}, 5));
  CHECK(avoiding1.size() == 6);
  CHECK(through1.size() + avoiding1.size() == all.size());
  CHECK_THROWS_AS(all.restrict(ms({1}, 5), ms({1, 2}, 5)), std::invalid_argument);
}

TEST_CASE("complement within the k-set universe") {
  Family all(4, 2, all_ksets(4, 2));
  CHECK(all.complement().empty());
  Family none(4, 2);
  CHECK(none.complement() == all);
  Family one(4, 2, {ms({1, 2}, 4)});
  Family co = one.complement();
  CHECK(co.size() == 5);
  CHECK(!co.contains(ms({1, 2}, 4)));
}

TEST_CASE("matching number of named families") {
  Family empty(6, 2);
  CHECK(empty.matching_number() == 0);
  Family perfect(6, 2, {ms({1, 2}, 6), ms({3, 4}, 6), ms({5, 6}, 6)});
  CHECK(perfect.matching_number() == 3);
  CHECK(perfect.has_matching_of_size(3));
  CHECK(!perfect.has_matching_of_size(4));
  std::vector<Mask> tri = {ms({1, 2}, 6), ms({2, 3}, 6), ms({1, 3}, 6)};
  Family triangle(6, 2, tri);
  CHECK(triangle.matching_number() == 1);
  Family all(6, 2, all_ksets(6, 2));
  CHECK(all.matching_number() == 3);
}

TEST_CASE("matching number agrees with the exhaustive oracle on random families") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 5 + static_cast<int>(rng.below(3));   // 5..7
    int k = 2 + static_cast<int>(rng.below(2));   // 2..3
    std::uint64_t universe = binomial64(n, k);
    std::uint64_t m = rng.below(std::min<std::uint64_t>(universe, 12) + 1);
    Family f = random_family(n, k, m, rng);
    int expected = oracle::matching_number(f.members());
    CHECK(f.matching_number() == expected);
    for (int s = 0; s <= n / k + 1; ++s)
      CHECK(f.has_matching_of_size(s) == (expected >= s));
  }
}

TEST_CASE("disjoint pair counts agree with the quadratic oracle") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Family f = random_family(6, 2, rng.below(16), rng);
    CHECK(f.count_disjoint_pairs() == BigCount(oracle::disjoint_pairs(f.members())));
  }
  Family all(6, 2, all_ksets(6, 2));
  CHECK(all.count_disjoint_pairs() == BigCount(45));  // 15*6/2 pairs of disjoint edges in K6
}

TEST_CASE("max_disjoint_subset honours its cap") {
  std::vector<Mask> sets = {ms({1, 2}, 6), ms({3, 4}, 6), ms({5, 6}, 6)};
  CHECK(max_disjoint_subset(sets, 10) == 3);
  CHECK(max_disjoint_subset(sets, 2) == 2);
  CHECK(exists_disjoint_subset(sets, 3));
  CHECK(!exists_disjoint_subset(sets, 4));
  CHECK(exists_disjoint_subset(sets, 0));
}

TEST_CASE("random_family draws distinct members and respects bounds") {
  SplitMix64 rng(3);
  Family f = random_family(6, 3, 20, rng);
  CHECK(f.size() == 20);  // the whole universe
  Family g = random_family(6, 3, 7, rng);
  CHECK(g.size() == 7);
  CHECK_THROWS_AS(random_family(6, 3, 21, rng), std::invalid_argument);
}
