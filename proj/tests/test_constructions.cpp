#include "doctest.h"

#include <stdexcept>

#include "emc/constructions.hpp"
#include "emc/core.hpp"
#include "support/oracles.hpp"

using namespace emc;

TEST_CASE("construct_A is the clique on the first sk-1 elements") {
  Family a = construct_A(6, 2, 3);  // 2-sets inside [5]
  CHECK(BigCount(a.size()) == binomial(5, 2));
  CHECK(a.matching_number() == 2);
  for (Mask m : a.members()) CHECK(!(m & (Mask{1} << 5)));  // avoids element 6

  Family a2 = construct_A(9, 3, 2);  // 3-sets inside [5]
  CHECK(BigCount(a2.size()) == binomial(5, 3));
  CHECK(a2.matching_number() == 1);

  CHECK_THROWS_AS(construct_A(4, 2, 3), std::invalid_argument);
}

TEST_CASE("construct_B is the cover through the first s-1 elements") {
  Family b = construct_B(7, 2, 3);  // meets {1,2}
  CHECK(BigCount(b.size()) == binomial(7, 2) - binomial(5, 2));
  CHECK(b.size() == 11);
  CHECK(b.matching_number() == 2);
  for (Mask m : b.members()) CHECK((m & 0x3) != 0);

  Family b1 = construct_B(6, 2, 1);  // s=1: must meet the empty set, impossible
  CHECK(b1.empty());
}

TEST_CASE("construction sizes at the Kleitman point n = sk") {
  // at n = sk the cover through [s-1] has C(n,k) - C(n-s+1,k) members
  Family b = construct_B(6, 2, 3);
  CHECK(BigCount(b.size()) == binomial(6, 2) - binomial(4, 2));
  CHECK(b.size() == 9);
  Family a = construct_A(6, 2, 3);
  CHECK(a.size() == 10);  // the clique wins at n = sk for (2,3)
}

TEST_CASE("star degrees") {
  Family s = star(6, 2, 3);
  CHECK(s.size() == 5);
  CHECK(s.degree(3) == 5);
  CHECK(s.matching_number() == 1);
  CHECK_THROWS_AS(star(6, 2, 7), std::invalid_argument);
}

TEST_CASE("kleitman_extremal avoids one element and hits the bound") {
  Family f = kleitman_extremal(6, 2, 6);  // 2-sets of [5]
  CHECK(f.size() == 10);
  CHECK(f.degree(6) == 0);
  CHECK(f.matching_number() == 2);
  CHECK(f == construct_A(6, 2, 3));

  Family g = kleitman_extremal(6, 2, 1);
  CHECK(g.size() == 10);
  CHECK(g.degree(1) == 0);
  CHECK(g.matching_number() == 2);

  CHECK_THROWS_AS(kleitman_extremal(7, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(kleitman_extremal(2, 2, 1), std::invalid_argument);
}

TEST_CASE("avoiding families realize the drop (s-1)/s at n = sk") {
  for (auto [k, s] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    int n = s * k;
    Family f = kleitman_extremal(n, k, n);
    CHECK(BigCount(f.size()) == binomial(n - 1, k));
    CHECK(BigCount(f.size()) == binomial(n, k) - binomial(n - 1, k - 1));
    CHECK(f.matching_number() == s - 1);
    CHECK(!f.has_matching_of_size(s));
  }
}
