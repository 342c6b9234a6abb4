#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace exst {

/// A permutation of {0..n-1}, stored as its image array: p[i] = image of i.
struct Permutation {
  std::vector<int> image;

  int size() const { return static_cast<int>(image.size()); }
  int operator()(int i) const { return image[i]; }
  bool operator==(const Permutation& o) const { return image == o.image; }
  bool operator<(const Permutation& o) const { return image < o.image; }

  static Permutation identity(int n);
  static Permutation from_cycle(int n, const std::vector<int>& cycle);

  /// this ∘ other: (a*b)(i) = a(b(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;
};

/// A permutation group given by generators; elements enumerated on demand.
struct PermutationGroup {
  int n = 0;
  std::vector<Permutation> generators;

  /// Full element list via breadth-first closure. Throws if the order
  /// would exceed `budget`.
  std::vector<Permutation> elements(uint64_t budget = 1000000) const;
  uint64_t order(uint64_t budget = 1000000) const { return elements(budget).size(); }
  bool contains(const Permutation& p, uint64_t budget = 1000000) const;

  static PermutationGroup symmetric(int n);
  static PermutationGroup cyclic(int n);
  static PermutationGroup dihedral(int n);   // order 2n
  static PermutationGroup alternating(int n);
  static PermutationGroup trivial(int n);
};

bool same_group(const PermutationGroup& a, const PermutationGroup& b, uint64_t budget = 1000000);

/// Parsed named preset, e.g. "cyclic", "S2xS2@[0,2|1,3]". For embedded
/// products the seed hint lists the positions that receive the excitations
/// of a Dicke-like seed, block-concatenation order.
struct GroupSpec {
  PermutationGroup group;
  std::vector<int> seed_order;  // empty => natural order 0..n-1
};

/// Accepts: symmetric | cyclic | dihedral | alternating | trivial, or a
/// product form "S2xS2@[0,2|1,3]" (symmetric factors acting on the listed
/// blocks plus the elementwise block swaps between equal-size blocks).
GroupSpec parse_group_preset(const std::string& name, int n);

}  // namespace exst
