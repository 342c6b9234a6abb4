#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exst/hypergraph.hpp"
#include "exst/state.hpp"

namespace exst {

/// Real symmetric operator on the fixed-excitation-number sector: basis is
/// the lexicographic list of weight-k bitmasks on n qubits.
struct SubspaceOperator {
  int n = 0;
  int k = 0;
  std::vector<uint64_t> basis;
  std::vector<double> mat;  // row-major, dim x dim

  int dim() const { return static_cast<int>(basis.size()); }
  double& at(int i, int j) { return mat[static_cast<size_t>(i) * basis.size() + j]; }
  double at(int i, int j) const { return mat[static_cast<size_t>(i) * basis.size() + j]; }
};

struct SpectrumReport {
  double top_eigenvalue = 0.0;
  int degeneracy = 0;
  double overlap = 0.0;  // |<target|top>|^2, meaningful when degeneracy == 1
  double residual = 0.0; // ||H|t> - mu|t>|| at the target's Rayleigh quotient
  std::string flags;
};

/// J+J- restricted to the weight-k sector (dimension C(n,k) <= budget).
SubspaceOperator build_dicke_jj(int n, int k, int dim_budget = 5000);

/// H_G = J+^G J-^G on the weight-k sector, J±^G summing over hyperedges.
SubspaceOperator build_hg(const Hypergraph& g, int k, int dim_budget = 5000);

/// Conditional-hopping three-body Hamiltonian of a graph on the k=2 sector.
SubspaceOperator build_3body(const Hypergraph& g, int dim_budget = 5000);

/// Dense symmetric diagonalization (cyclic Jacobi); degeneracy counted at
/// 1e-8 below the top.
SpectrumReport top_eigenpair(const SubspaceOperator& op, const SparseState& target);

/// Sector vector of a state (coefficients on the weight-k basis).
std::vector<double> sector_vector(const SubspaceOperator& op, const SparseState& s);

}  // namespace exst
