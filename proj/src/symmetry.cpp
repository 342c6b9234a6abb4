#include "exst/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "exst/comb.hpp"

namespace exst {

namespace {

// Orbit of a bitmask under the group, via its full element list.
std::set<uint64_t> mask_orbit(uint64_t seed, const std::vector<Permutation>& elements) {
  std::set<uint64_t> orbit;
  for (const Permutation& p : elements) {
    uint64_t img = 0;
    uint64_t m = seed;
    while (m) {
      int b = std::countr_zero(m);
      m &= m - 1;
      img |= uint64_t{1} << p(b);
    }
    orbit.insert(img);
  }
  return orbit;
}

SparseState uniform_over_masks(int n, const std::set<uint64_t>& masks) {
  SparseState s;
  s.n = n;
  s.local_dim = 2;
  double amp = 1.0 / std::sqrt(static_cast<double>(masks.size()));
  for (uint64_t m : masks) {
    // bit b of the mask = subsystem b; convert to the packed label with
    // subsystem 0 most significant.
    std::vector<int> digits(n, 0);
    uint64_t mm = m;
    while (mm) {
      int b = std::countr_zero(mm);
      mm &= mm - 1;
      digits[b] = 1;
    }
    s.amps[s.pack(digits)] = amp;
  }
  return s;
}

}  // namespace

SparseState dicke_like_state(const PermutationGroup& h, int n, int k,
                             const std::vector<int>& seed_positions) {
  if (k < 0 || k > n) throw std::invalid_argument("excitation count out of range");
  uint64_t seed = 0;
  if (seed_positions.empty()) {
    for (int i = 0; i < k; ++i) seed |= uint64_t{1} << i;
  } else {
    if (static_cast<int>(seed_positions.size()) < k)
      throw std::invalid_argument("seed positions shorter than k");
    for (int i = 0; i < k; ++i) seed |= uint64_t{1} << seed_positions[i];
  }
  if (k == 0) {
    SparseState s;
    s.n = n;
    s.local_dim = 2;
    s.amps[0] = 1.0;
    return s;
  }
  auto elements = h.elements();
  return uniform_over_masks(n, mask_orbit(seed, elements));
}

SparseState stellar_construct(const std::vector<std::array<cplx, 2>>& stars,
                              const PermutationGroup& h) {
  int n = static_cast<int>(stars.size());
  if (h.n != n) throw std::invalid_argument("group degree must match star count");
  for (const auto& st : stars) {
    double nn = std::norm(st[0]) + std::norm(st[1]);
    if (std::abs(nn - 1.0) > 1e-9) throw std::invalid_argument("stars must be normalized");
  }
  SparseState s;
  s.n = n;
  s.local_dim = 2;
  for (const Permutation& sigma : h.elements()) {
    // position i carries the star sigma(i)
    for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
      cplx coef{1.0, 0.0};
      std::vector<int> digits(n, 0);
      for (int i = 0; i < n; ++i) {
        int bit = static_cast<int>((x >> i) & 1);
        digits[i] = bit;
        coef *= stars[sigma(i)][bit];
        if (coef == cplx{0.0, 0.0}) break;
      }
      if (coef != cplx{0.0, 0.0}) s.amps[s.pack(digits)] += coef;
    }
  }
  s.prune(1e-12);
  if (s.amps.empty()) throw std::runtime_error("stellar construction cancelled to the zero vector");
  return s.normalize();
}

bool is_invariant(const SparseState& s, const Permutation& sigma, double tol) {
  SparseState moved = permute_state(s, sigma);
  if (moved.amps.size() != s.amps.size()) return false;
  for (const auto& [label, amp] : s.amps) {
    auto it = moved.amps.find(label);
    if (it == moved.amps.end() || std::abs(it->second - amp) > tol) return false;
  }
  return true;
}

namespace {

void all_permutations(int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  do {
    Permutation p;
    p.image = img;
    fn(p);
  } while (std::next_permutation(img.begin(), img.end()));
}

}  // namespace

PermutationGroup stabilizer_group(const SparseState& s, int max_n, double tol) {
  if (s.n > max_n) throw std::runtime_error("stabilizer search budget exceeded");
  PermutationGroup g;
  g.n = s.n;
  all_permutations(s.n, [&](const Permutation& p) {
    if (is_invariant(s, p, tol)) g.generators.push_back(p);
  });
  return g;
}

PermutationGroup realizable_closure(const PermutationGroup& h, int n, int max_n) {
  if (n > max_n || n > 16) throw std::runtime_error("realizability budget exceeded");
  auto elements = h.elements();
  // Orbit id of every bitstring under H.
  std::vector<int> orbit_id(uint64_t{1} << n, -1);
  int next_id = 0;
  for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
    if (orbit_id[m] >= 0) continue;
    for (uint64_t o : mask_orbit(m, elements)) orbit_id[o] = next_id;
    ++next_id;
  }
  PermutationGroup closure;
  closure.n = n;
  all_permutations(n, [&](const Permutation& p) {
    for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
      uint64_t img = 0;
      uint64_t mm = m;
      while (mm) {
        int b = std::countr_zero(mm);
        mm &= mm - 1;
        img |= uint64_t{1} << p(b);
      }
      if (orbit_id[img] != orbit_id[m]) return;
    }
    closure.generators.push_back(p);
  });
  return closure;
}

bool is_realizable(const PermutationGroup& h, int n, int max_n) {
  PermutationGroup closure = realizable_closure(h, n, max_n);
  return same_group(closure, h);
}

std::vector<SparseState> orbit_basis(const PermutationGroup& h, int n, int k) {
  auto elements = h.elements();
  std::vector<SparseState> classes;
  std::set<uint64_t> assigned;
  for (uint64_t m : k_subsets(n, k)) {
    if (assigned.count(m)) continue;
    auto orbit = mask_orbit(m, elements);
    assigned.insert(orbit.begin(), orbit.end());
    classes.push_back(uniform_over_masks(n, orbit));
  }
  return classes;
}

SparseState proposition1_state(const PermutationGroup& h, int n) {
  SparseState s;
  s.n = n;
  s.local_dim = n;
  for (const Permutation& sigma : h.elements()) {
    std::vector<int> digits(n);
    for (int i = 0; i < n; ++i) digits[i] = sigma(i);
    s.amps[s.pack(digits)] += 1.0;
  }
  return s.normalize();
}

}  // namespace exst
