#include "emc/shifting.hpp"

#include <algorithm>
#include <stdexcept>

#include "emc/core.hpp"

namespace emc {

namespace {

void check_pair(const Family& f, ShiftPair p) {
  if (p.i < 1 || p.j <= p.i || p.j > f.n())
    throw std::invalid_argument("shift pair must satisfy 1 <= i < j <= n");
}

}  // namespace

Family shift_family(const Family& f, ShiftPair p) {
  check_pair(f, p);
  const Mask bit_i = Mask{1} << (p.i - 1);
  const Mask bit_j = Mask{1} << (p.j - 1);
  std::vector<Mask> out;
  out.reserve(f.size());
  for (Mask m : f.members()) {
    if (!(m & bit_i) && (m & bit_j)) {
      Mask image = (m & ~bit_j) | bit_i;
      out.push_back(f.contains(image) ? m : image);
    } else {
      out.push_back(m);
    }
  }
  return Family(f.n(), f.k(), std::move(out));
}

bool is_left_compressed(const Family& f) {
  for (int i = 1; i < f.n(); ++i)
    for (int j = i + 1; j <= f.n(); ++j)
      if (shift_family(f, {i, j}) != f) return false;
  return true;
}

Family left_compress(const Family& f) {
  Family current = f;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < current.n(); ++i) {
      for (int j = i + 1; j <= current.n(); ++j) {
        Family next = shift_family(current, {i, j});
        if (next != current) {
          current = std::move(next);
          changed = true;
        }
      }
    }
  }
  return current;
}

namespace {

void require_left_compressed(const Family& f) {
  if (!is_left_compressed(f))
    throw std::invalid_argument("family is not left-compressed");
}

}  // namespace

ShiftDegAReport verify_shiftdeg_a(const Family& f) {
  require_left_compressed(f);
  const int n = f.n();
  const int k = f.k();
  const Mask bit_n = Mask{1} << (n - 1);
  const BigCount f_n = f.restrict(bit_n, 0).size();
  const BigCount f_not_n = f.restrict(0, bit_n).size();
  ShiftDegAReport r;
  r.lhs = BigCount(n - k) * f_n;
  r.rhs = BigCount(k) * f_not_n;
  r.holds = r.lhs <= r.rhs;
  return r;
}

ShiftDegBReport verify_shiftdeg_b(const Family& f) {
  require_left_compressed(f);
  const int n = f.n();
  const int k = f.k();
  if (n < 2) throw std::invalid_argument("need n >= 2");
  const Mask bit_n = Mask{1} << (n - 1);
  const Mask bit_n1 = Mask{1} << (n - 2);
  ShiftDegBReport r;
  r.lhs_num = f.restrict(bit_n, 0).size();
  r.lhs_den = binomial(n - 1, k - 1);
  r.rhs_num = f.restrict(bit_n1, bit_n).size();
  r.rhs_den = binomial(n - 2, k - 1);
  r.holds = r.lhs_num * r.rhs_den <= r.rhs_num * r.lhs_den;
  return r;
}

}  // namespace emc
