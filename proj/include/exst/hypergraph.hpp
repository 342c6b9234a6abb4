#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "exst/perm.hpp"

namespace exst {

inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

/// Hypergraph on vertices 0..n-1. Edges are strictly sorted vertex sets,
/// stored sorted lexicographically with no duplicates.
struct Hypergraph {
  int n = 0;
  std::vector<std::vector<int>> edges;
  std::optional<int> uniformity;  // k when all edges have size k

  int edge_count() const { return static_cast<int>(edges.size()); }
};

struct VertexPairStats {
  int degree_v = 0;
  int degree_w = 0;
  int section = 0;             // s_vw
  int joint_neighborhood = 0;  // n_vw
  int distance = kInfiniteDistance;
  int edge_count = 0;
};

struct HypergraphPredicates {
  bool connected = false;
  bool k_uniform = false;
  bool regular = false;
  bool distance1_regular = false;
};

struct MultipartiteResult {
  bool found = false;
  bool trivial = false;  // singleton classes only
  std::vector<std::vector<int>> partition;
};

/// Canonicalize and check a raw edge list. Out-of-range vertices and empty
/// edges throw std::invalid_argument; duplicate edges are dropped with a
/// note appended to `warnings` when given.
Hypergraph validate(int n, const std::vector<std::vector<int>>& raw_edges,
                    std::vector<std::string>* warnings = nullptr);

int degree(const Hypergraph& g, int v);
int section(const Hypergraph& g, int v, int w);
int joint_neighborhood(const Hypergraph& g, int v, int w);
int distance(const Hypergraph& g, int v, int w);
VertexPairStats pair_stats(const Hypergraph& g, int v, int w);
HypergraphPredicates predicates(const Hypergraph& g);

/// Finest partition V1|..|Vm with edge set equal to the product
/// {e1 ∪ .. ∪ em}; nullopt when no nontrivial split exists.
std::optional<std::vector<std::vector<int>>> product_decompose(const Hypergraph& g);

/// Color classes of a complete multipartite k-hypergraph (k = uniformity).
MultipartiteResult is_complete_multipartite(const Hypergraph& g);

/// All vertex permutations mapping the edge set onto itself (n <= budget).
PermutationGroup automorphism_group(const Hypergraph& g, int max_n = 10);
bool is_edge_transitive(const Hypergraph& g, int max_n = 10);

/// Shared-edge adjacency as index lists (2-uniform or general).
std::vector<std::vector<int>> adjacency(const Hypergraph& g);

}  // namespace exst
