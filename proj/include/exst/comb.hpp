#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace exst {

// Exact binomial coefficient; saturates at UINT64_MAX on overflow.
inline uint64_t binom_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    uint64_t num = static_cast<uint64_t>(n - k + i);
    if (r > UINT64_MAX / num) return UINT64_MAX;
    r = r * num / static_cast<uint64_t>(i);
  }
  return r;
}

inline double binom_d(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / i;
  return r;
}

inline int popcount64(uint64_t x) { return std::popcount(x); }

// Next integer with the same popcount (Gosper's hack); 0 when exhausted.
inline uint64_t next_same_popcount(uint64_t x) {
  uint64_t u = x & (~x + 1);
  uint64_t v = u + x;
  if (v == 0) return 0;
  return v + (((v ^ x) / u) >> 2);
}

inline uint64_t mask_from_subset(const std::vector<int>& subset) {
  uint64_t m = 0;
  for (int v : subset) m |= (uint64_t{1} << v);
  return m;
}

inline std::vector<int> subset_from_mask(uint64_t m) {
  std::vector<int> s;
  while (m) {
    s.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

// All k-subsets of {0..n-1} as bitmasks, lexicographic in mask value.
inline std::vector<uint64_t> k_subsets(int n, int k) {
  std::vector<uint64_t> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  uint64_t m = (uint64_t{1} << k) - 1;
  uint64_t limit = (n >= 64) ? ~uint64_t{0} : (uint64_t{1} << n);
  while (m && (n >= 64 || m < limit)) {
    out.push_back(m);
    m = next_same_popcount(m);
  }
  return out;
}

}  // namespace exst
