#include "emc/constructions.hpp"

#include <stdexcept>

#include "emc/core.hpp"

namespace emc {

Family construct_A(int n, int k, int s) {
  if (k < 1 || s < 1) throw std::invalid_argument("construct_A: need k >= 1, s >= 1");
  if (n < s * k - 1) throw std::invalid_argument("construct_A: ground set smaller than sk-1");
  GroundSet gs(n);
  std::vector<Mask> members;
  KSetStream stream(s * k - 1, k);
  KSet ks;
  while (stream.next(ks)) members.push_back(ks.bits);
  return Family(n, k, std::move(members));
}

Family construct_B(int n, int k, int s) {
  if (k < 1 || s < 1) throw std::invalid_argument("construct_B: need k >= 1, s >= 1");
  if (n < k) throw std::invalid_argument("construct_B: n < k");
  GroundSet gs(n);
  const Mask head = s == 1 ? 0 : (Mask{1} << (s - 1)) - 1;  // [s-1]
  std::vector<Mask> members;
  KSetStream stream(n, k);
  KSet ks;
  while (stream.next(ks))
    if (ks.bits & head) members.push_back(ks.bits);
  return Family(n, k, std::move(members));
}

Family star(int n, int k, int x) {
  if (k < 1 || k > n) throw std::invalid_argument("star: k out of range");
  if (x < 1 || x > n) throw std::invalid_argument("star: center out of range");
  const Mask center = Mask{1} << (x - 1);
  std::vector<Mask> members;
  KSetStream stream(n, k);
  KSet ks;
  while (stream.next(ks))
    if (ks.bits & center) members.push_back(ks.bits);
  return Family(n, k, std::move(members));
}

Family kleitman_extremal(int n, int k, int x) {
  if (k < 1) throw std::invalid_argument("kleitman_extremal: k < 1");
  if (n % k != 0 || n / k < 2)
    throw std::invalid_argument("kleitman_extremal: n must be sk with s >= 2");
  if (x < 1 || x > n) throw std::invalid_argument("kleitman_extremal: x out of range");
  const Mask avoid = Mask{1} << (x - 1);
  std::vector<Mask> members;
  KSetStream stream(n, k);
  KSet ks;
  while (stream.next(ks))
    if (!(ks.bits & avoid)) members.push_back(ks.bits);
  return Family(n, k, std::move(members));
}

}  // namespace emc
