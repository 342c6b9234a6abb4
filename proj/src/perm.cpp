#include "exst/perm.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace exst {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

Permutation Permutation::from_cycle(int n, const std::vector<int>& cycle) {
  Permutation p = identity(n);
  for (size_t i = 0; i < cycle.size(); ++i) {
    int a = cycle[i];
    int b = cycle[(i + 1) % cycle.size()];
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("cycle index out of range");
    p.image[a] = b;
  }
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  Permutation r;
  r.image.resize(image.size());
  for (size_t i = 0; i < image.size(); ++i) r.image[i] = image[other.image[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.image.resize(image.size());
  for (size_t i = 0; i < image.size(); ++i) r.image[image[i]] = static_cast<int>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<Permutation> PermutationGroup::elements(uint64_t budget) const {
  std::set<std::vector<int>> seen;
  std::vector<Permutation> out;
  std::queue<Permutation> frontier;
  Permutation id = Permutation::identity(n);
  seen.insert(id.image);
  out.push_back(id);
  frontier.push(id);
  while (!frontier.empty()) {
    Permutation cur = frontier.front();
    frontier.pop();
    for (const Permutation& gen : generators) {
      if (gen.size() != n) throw std::invalid_argument("generator size mismatch");
      Permutation nxt = gen.compose(cur);
      if (seen.insert(nxt.image).second) {
        if (seen.size() > budget) throw std::runtime_error("group closure budget exceeded");
        out.push_back(nxt);
        frontier.push(nxt);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermutationGroup::contains(const Permutation& p, uint64_t budget) const {
  for (const Permutation& e : elements(budget))
    if (e == p) return true;
  return false;
}

PermutationGroup PermutationGroup::symmetric(int n) {
  PermutationGroup g;
  g.n = n;
  if (n >= 2) {
    g.generators.push_back(Permutation::from_cycle(n, {0, 1}));
    std::vector<int> full(n);
    std::iota(full.begin(), full.end(), 0);
    if (n > 2) g.generators.push_back(Permutation::from_cycle(n, full));
  }
  return g;
}

PermutationGroup PermutationGroup::cyclic(int n) {
  PermutationGroup g;
  g.n = n;
  std::vector<int> full(n);
  std::iota(full.begin(), full.end(), 0);
  if (n >= 2) g.generators.push_back(Permutation::from_cycle(n, full));
  return g;
}

PermutationGroup PermutationGroup::dihedral(int n) {
  PermutationGroup g = cyclic(n);
  Permutation refl;
  refl.image.resize(n);
  for (int i = 0; i < n; ++i) refl.image[i] = (n - i) % n;
  g.generators.push_back(refl);
  return g;
}

PermutationGroup PermutationGroup::alternating(int n) {
  PermutationGroup g;
  g.n = n;
  if (n >= 3) {
    g.generators.push_back(Permutation::from_cycle(n, {0, 1, 2}));
    if (n > 3) {
      std::vector<int> c;
      if (n % 2 == 1) {  // full cycle is even
        c.resize(n);
        std::iota(c.begin(), c.end(), 0);
      } else {  // cycle on 1..n-1 is even
        c.resize(n - 1);
        std::iota(c.begin(), c.end(), 1);
      }
      g.generators.push_back(Permutation::from_cycle(n, c));
    }
  }
  return g;
}

PermutationGroup PermutationGroup::trivial(int n) {
  PermutationGroup g;
  g.n = n;
  return g;
}

bool same_group(const PermutationGroup& a, const PermutationGroup& b, uint64_t budget) {
  if (a.n != b.n) return false;
  auto ea = a.elements(budget);
  auto eb = b.elements(budget);
  return ea == eb;  // both sorted
}

namespace {

std::vector<std::vector<int>> parse_blocks(const std::string& s) {
  // "[0,2|1,3]" -> {{0,2},{1,3}}
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("bad block syntax: " + s);
  std::vector<std::vector<int>> blocks(1);
  std::string num;
  auto flush = [&]() {
    if (!num.empty()) {
      blocks.back().push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char c : s.substr(1, s.size() - 2)) {
    if (c == ',') {
      flush();
    } else if (c == '|') {
      flush();
      blocks.emplace_back();
    } else if (c >= '0' && c <= '9') {
      num.push_back(c);
    } else if (c != ' ') {
      throw std::invalid_argument("bad block syntax: " + s);
    }
  }
  flush();
  return blocks;
}

}  // namespace

GroupSpec parse_group_preset(const std::string& name, int n) {
  GroupSpec spec;
  if (name == "symmetric") {
    spec.group = PermutationGroup::symmetric(n);
    return spec;
  }
  if (name == "cyclic") {
    spec.group = PermutationGroup::cyclic(n);
    return spec;
  }
  if (name == "dihedral") {
    spec.group = PermutationGroup::dihedral(n);
    return spec;
  }
  if (name == "alternating") {
    spec.group = PermutationGroup::alternating(n);
    return spec;
  }
  if (name == "trivial") {
    spec.group = PermutationGroup::trivial(n);
    return spec;
  }

  // Product form "S2xS3@[0,2|1,3,4]": symmetric factors on the listed
  // blocks, plus the elementwise swap for each pair of equal-size blocks
  // (the block-structure stabilizer the paper's product labels denote).
  auto at = name.find('@');
  if (at == std::string::npos) throw std::invalid_argument("unknown group preset: " + name);
  std::string factors = name.substr(0, at);
  auto blocks = parse_blocks(name.substr(at + 1));

  std::vector<int> sizes;
  size_t pos = 0;
  while (pos < factors.size()) {
    if (factors[pos] != 'S') throw std::invalid_argument("unknown group preset: " + name);
    ++pos;
    size_t q = pos;
    while (q < factors.size() && isdigit(factors[q])) ++q;
    sizes.push_back(std::stoi(factors.substr(pos, q - pos)));
    pos = q;
    if (pos < factors.size()) {
      if (factors[pos] != 'x') throw std::invalid_argument("unknown group preset: " + name);
      ++pos;
    }
  }
  if (sizes.size() != blocks.size()) throw std::invalid_argument("factor/block count mismatch: " + name);

  PermutationGroup g;
  g.n = n;
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (static_cast<int>(blocks[b].size()) != sizes[b])
      throw std::invalid_argument("block size mismatch: " + name);
    for (int v : blocks[b]) {
      if (v < 0 || v >= n) throw std::invalid_argument("block vertex out of range: " + name);
      spec.seed_order.push_back(v);
    }
    for (size_t i = 0; i + 1 < blocks[b].size(); ++i)
      g.generators.push_back(Permutation::from_cycle(n, {blocks[b][i], blocks[b][i + 1]}));
  }
  for (size_t b1 = 0; b1 < blocks.size(); ++b1)
    for (size_t b2 = b1 + 1; b2 < blocks.size(); ++b2) {
      if (blocks[b1].size() != blocks[b2].size()) continue;
      Permutation swap = Permutation::identity(n);
      for (size_t i = 0; i < blocks[b1].size(); ++i) {
        swap.image[blocks[b1][i]] = blocks[b2][i];
        swap.image[blocks[b2][i]] = blocks[b1][i];
      }
      g.generators.push_back(swap);
    }
  spec.group = g;
  return spec;
}

}  // namespace exst
