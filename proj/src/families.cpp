#include "exst/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "exst/comb.hpp"

namespace exst {

PlatonicSolid parse_solid(const std::string& name) {
  if (name == "tetrahedron") return PlatonicSolid::Tetrahedron;
  if (name == "cube") return PlatonicSolid::Cube;
  if (name == "octahedron") return PlatonicSolid::Octahedron;
  if (name == "dodecahedron") return PlatonicSolid::Dodecahedron;
  if (name == "icosahedron") return PlatonicSolid::Icosahedron;
  throw std::invalid_argument("unknown solid: " + name);
}

Hypergraph complete_kuniform(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("complete_kuniform needs 1 <= k <= n");
  std::vector<std::vector<int>> edges;
  for (uint64_t m : k_subsets(n, k)) edges.push_back(subset_from_mask(m));
  return validate(n, edges);
}

Hypergraph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return validate(n, edges);
}

namespace {

// Incidence tables on standard coordinates; the families test re-derives
// them geometrically.
const std::vector<std::vector<int>> kTetraEdges = {
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
const std::vector<std::vector<int>> kTetraFaces = {
    {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

// Octahedron vertices +-e_i with antipodal pairs (2i, 2i+1), matching the
// orthoplex labelling.
const std::vector<std::vector<int>> kOctaEdges = {
    {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3},
    {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};
const std::vector<std::vector<int>> kOctaFaces = {
    {0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
    {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}};

// Cube vertices = 3-bit labels, edges at Hamming distance 1.
const std::vector<std::vector<int>> kCubeEdges = {
    {0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3},
    {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}};
const std::vector<std::vector<int>> kCubeFaces = {
    {0, 1, 2, 3}, {0, 1, 4, 5}, {0, 2, 4, 6}, {1, 3, 5, 7}, {2, 3, 6, 7}, {4, 5, 6, 7}};

// Icosahedron on sorted cyclic permutations of (0, ±1, ±phi).
const std::vector<std::vector<int>> kIcosaEdges = {
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 6},  {1, 2},  {1, 3},  {1, 5},  {1, 7},  {2, 4},
    {2, 5}, {2, 8}, {3, 6}, {3, 7}, {3, 9},  {4, 6},  {4, 8},  {4, 10}, {5, 7},  {5, 8},
    {5, 11}, {6, 9}, {6, 10}, {7, 9}, {7, 11}, {8, 10}, {8, 11}, {9, 10}, {9, 11}, {10, 11}};
const std::vector<std::vector<int>> kIcosaFaces = {
    {0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 6}, {0, 4, 6},  {1, 2, 5},  {1, 3, 7},
    {1, 5, 7}, {2, 4, 8}, {2, 5, 8}, {3, 6, 9}, {3, 7, 9},  {4, 6, 10}, {4, 8, 10},
    {5, 7, 11}, {5, 8, 11}, {6, 9, 10}, {7, 9, 11}, {8, 10, 11}, {9, 10, 11}};

// Dodecahedron on sorted (±1,±1,±1) plus cyclic permutations of (0, ±1/phi, ±phi).
const std::vector<std::vector<int>> kDodecaEdges = {
    {0, 1},  {0, 2},  {0, 4},  {1, 3},  {1, 5},  {2, 6},  {2, 8},  {3, 6},  {3, 9},  {4, 7},
    {4, 10}, {5, 7},  {5, 11}, {6, 12}, {7, 13}, {8, 10}, {8, 14}, {9, 11}, {9, 15}, {10, 16},
    {11, 17}, {12, 14}, {12, 15}, {13, 16}, {13, 17}, {14, 18}, {15, 19}, {16, 18}, {17, 19}, {18, 19}};
const std::vector<std::vector<int>> kDodecaFaces = {
    {0, 1, 2, 3, 6},     {0, 1, 4, 5, 7},     {0, 2, 4, 8, 10},    {1, 3, 5, 9, 11},
    {2, 6, 8, 12, 14},   {3, 6, 9, 12, 15},   {4, 7, 10, 13, 16},  {5, 7, 11, 13, 17},
    {8, 10, 14, 16, 18}, {9, 11, 15, 17, 19}, {12, 14, 15, 18, 19}, {13, 16, 17, 18, 19}};

}  // namespace

Hypergraph platonic(PlatonicSolid solid, PlatonicMode mode) {
  const bool edges = (mode == PlatonicMode::Edges);
  switch (solid) {
    case PlatonicSolid::Tetrahedron:
      return validate(4, edges ? kTetraEdges : kTetraFaces);
    case PlatonicSolid::Octahedron:
      return validate(6, edges ? kOctaEdges : kOctaFaces);
    case PlatonicSolid::Cube:
      return validate(8, edges ? kCubeEdges : kCubeFaces);
    case PlatonicSolid::Icosahedron:
      return validate(12, edges ? kIcosaEdges : kIcosaFaces);
    case PlatonicSolid::Dodecahedron:
      return validate(20, edges ? kDodecaEdges : kDodecaFaces);
  }
  throw std::invalid_argument("unknown solid");
}

Hypergraph simplex_hypergraph(int m, int k) {
  if (k < 1 || k > m - 1) throw std::invalid_argument("simplex_hypergraph needs 1 <= k <= m-1");
  return complete_kuniform(m, k);
}

Hypergraph orthoplex_hypergraph(int m, int k) {
  if (k < 2 || k > m) throw std::invalid_argument("orthoplex_hypergraph needs 2 <= k <= m");
  int n = 2 * m;
  std::vector<std::vector<int>> edges;
  for (uint64_t mask : k_subsets(n, k)) {
    bool ok = true;
    for (int i = 0; i < m; ++i) {
      uint64_t pair = (uint64_t{3} << (2 * i));
      if ((mask & pair) == pair) {
        ok = false;
        break;
      }
    }
    if (ok) edges.push_back(subset_from_mask(mask));
  }
  return validate(n, edges);
}

Hypergraph hypercube_graph(int m) {
  if (m < 2) throw std::invalid_argument("hypercube_graph needs m >= 2");
  int n = 1 << m;
  std::vector<std::vector<int>> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < m; ++b) {
      int w = v ^ (1 << b);
      if (v < w) edges.push_back({v, w});
    }
  return validate(n, edges);
}

Hypergraph hexagonal_torus(int rows, int cols) {
  // Brick-wall gluing: rows of horizontal cycles plus alternating vertical
  // rungs. Row cycles must have length >= 6 to keep the honeycomb
  // neighborhood structure, so orient the long side along the rows.
  int r = std::min(rows, cols), c = std::max(rows, cols);
  if (r < 4 || c < 6 || r % 2 != 0 || c % 2 != 0)
    throw std::invalid_argument("hexagonal_torus cut below minimal size (needs even dims, min >= 4, max >= 6)");
  auto idx = [&](int i, int j) { return ((i % r + r) % r) * c + ((j % c + c) % c); };
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      edges.push_back({idx(i, j), idx(i, j + 1)});
      if ((i + j) % 2 == 0) edges.push_back({idx(i, j), idx(i + 1, j)});
    }
  return validate(r * c, edges);
}

Hypergraph triangular_torus(int rows, int cols) {
  if (rows < 3 || cols < 3) throw std::invalid_argument("triangular_torus cut below minimal size (3x3)");
  auto idx = [&](int i, int j) { return ((i % rows + rows) % rows) * cols + ((j % cols + cols) % cols); };
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      edges.push_back({idx(i, j), idx(i, j + 1)});
      edges.push_back({idx(i, j), idx(i + 1, j)});
      edges.push_back({idx(i, j), idx(i + 1, j + 1)});
    }
  return validate(rows * cols, edges);
}

Hypergraph telescope() {
  return validate(4, {{0, 1, 2, 3}, {0}, {1, 2}});
}

}  // namespace exst
