#include "emc/core.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "emc/errors.hpp"

namespace emc {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("ground set size must be positive");
  if (n > kMaxGroundSetSize) throw CapError("ground set size exceeds 64");
}

Mask GroundSet::full_mask() const {
  return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
}

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m) {
    int bit = std::countr_zero(m);
    out.push_back(bit + 1);
    m &= m - 1;
  }
  return out;
}

Mask mask_from_elements(const std::vector<int>& elements, int n) {
  GroundSet gs(n);
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > n) throw std::invalid_argument("element out of range");
    Mask bit = Mask{1} << (e - 1);
    if (m & bit) throw std::invalid_argument("duplicate element");
    m |= bit;
  }
  return m;
}

KSet KSet::from_elements(const std::vector<int>& elements, int n) {
  return KSet{mask_from_elements(elements, n)};
}

int KSet::size() const { return std::popcount(bits); }

bool KSet::contains(int element) const {
  return element >= 1 && element <= 64 && (bits >> (element - 1)) & 1;
}

std::vector<int> KSet::elements() const { return elements_of(bits); }

namespace {

// Pascal's triangle up to n = 64; every entry of row 64 fits in uint64_t
// (the peak is C(64,32) ≈ 1.8e18 < 2^64).
struct PascalTable {
  std::array<std::array<std::uint64_t, kMaxGroundSetSize + 1>, kMaxGroundSetSize + 1> c{};
  constexpr PascalTable() {
    for (int n = 0; n <= kMaxGroundSetSize; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

constexpr PascalTable kPascal{};

}  // namespace

std::uint64_t binomial64(int n, int k) {
  if (n < 0 || n > kMaxGroundSetSize) throw std::out_of_range("binomial64: n out of [0,64]");
  if (k < 0 || k > n) return 0;
  return kPascal.c[n][k];
}

BigCount binomial(long long n, long long k) {
  if (n < 0 || k < 0) return 0;
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::uint64_t colex_rank(KSet s) {
  std::uint64_t rank = 0;
  int idx = 1;
  Mask m = s.bits;
  while (m) {
    int bit = std::countr_zero(m);  // element bit+1
    rank += binomial64(bit, idx);
    ++idx;
    m &= m - 1;
  }
  return rank;
}

KSet colex_unrank(std::uint64_t r, int n, int k) {
  GroundSet gs(n);
  if (k < 0 || k > n) throw std::out_of_range("colex_unrank: k out of range");
  std::uint64_t total = binomial64(n, k);
  if (r >= total) throw std::out_of_range("colex_unrank: rank out of range");
  Mask m = 0;
  for (int i = k; i >= 1; --i) {
    // largest e with C(e-1, i) <= r
    int e = i;  // C(i-1, i) = 0 <= r always
    while (e + 1 <= n && binomial64(e, i) <= r) ++e;
    r -= binomial64(e - 1, i);
    m |= Mask{1} << (e - 1);
  }
  return KSet{m};
}

KSetStream::KSetStream(int n, int k) {
  GroundSet gs(n);
  if (k < 0 || k > n) throw std::invalid_argument("KSetStream: k out of range");
  total_ = binomial64(n, k);
  remaining_ = total_;
  current_ = k == 0 ? 0 : (k == 64 ? ~Mask{0} : (Mask{1} << k) - 1);
}

bool KSetStream::next(KSet& out) {
  if (remaining_ == 0) return false;
  out = KSet{current_};
  --remaining_;
  if (remaining_ > 0) {
    // Gosper's hack: next mask with the same popcount.
    Mask v = current_;
    Mask t = v | (v - 1);
    current_ = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
  return true;
}

std::vector<Mask> all_ksets(int n, int k) {
  KSetStream stream(n, k);
  if (stream.total() > (std::uint64_t{1} << 22))
    throw CapError("k-set universe exceeds enumeration cap");
  std::vector<Mask> out;
  out.reserve(stream.total());
  KSet s;
  while (stream.next(s)) out.push_back(s.bits);
  return out;
}

}  // namespace emc
