#pragma once

#include <string>

#include "exst/hypergraph.hpp"

namespace exst {

enum class PlatonicSolid { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };
enum class PlatonicMode { Edges, Faces };

PlatonicSolid parse_solid(const std::string& name);

Hypergraph complete_kuniform(int n, int k);
Hypergraph cycle(int n);
Hypergraph platonic(PlatonicSolid solid, PlatonicMode mode);
Hypergraph simplex_hypergraph(int m, int k);

/// Vertices 0..2m-1 with antipodal pairs (2i, 2i+1); edges are the k-subsets
/// containing no antipodal pair.
Hypergraph orthoplex_hypergraph(int m, int k);

/// 2^m vertices labelled by bits, edges between Hamming-distance-1 labels.
Hypergraph hypercube_graph(int m);

/// Periodic brick-wall honeycomb cut; both dimensions even, min >= 4, max >= 6.
Hypergraph hexagonal_torus(int rows, int cols);
Hypergraph triangular_torus(int rows, int cols);

Hypergraph telescope();

}  // namespace exst
