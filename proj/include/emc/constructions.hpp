#pragma once

#include "emc/family.hpp"

namespace emc {

// All k-subsets of [sk-1], embedded in [n]. Requires n >= sk-1.
Family construct_A(int n, int k, int s);

// All k-subsets of [n] meeting [s-1]. Requires n >= k, s >= 1.
Family construct_B(int n, int k, int s);

// All k-subsets of [n] containing x.
Family star(int n, int k, int x);

// All k-subsets of [n] avoiding x. Requires n to be a multiple of k with
// n/k >= 2 (the n = sk regime where this family is extremal).
Family kleitman_extremal(int n, int k, int x);

}  // namespace emc
