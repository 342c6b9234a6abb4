#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "exst/hypergraph.hpp"
#include "exst/perm.hpp"

namespace exst {

using cplx = std::complex<double>;

/// Sparse pure state on n subsystems of dimension local_dim. Basis labels
/// are digit-packed integers with subsystem 0 as the most significant digit
/// (so label order equals string order). Amplitudes below 1e-15 are pruned.
struct SparseState {
  int n = 0;
  int local_dim = 2;
  std::map<uint64_t, cplx> amps;

  double norm2() const;
  SparseState& normalize();
  void prune(double eps = 1e-15);

  uint64_t pack(const std::vector<int>& digits) const;
  std::vector<int> unpack(uint64_t label) const;
  std::string label_string(uint64_t label) const;
  uint64_t label_from_string(const std::string& s) const;
};

/// Dense Hermitian matrix, row-major.
struct DensityMatrix {
  int dim = 0;
  std::vector<cplx> a;

  cplx& at(int i, int j) { return a[static_cast<size_t>(i) * dim + j]; }
  const cplx& at(int i, int j) const { return a[static_cast<size_t>(i) * dim + j]; }
  double trace_real() const;
  bool is_hermitian(double tol = 1e-12) const;
};

SparseState excitation_state(const Hypergraph& g);

/// sigma acting on subsystems: the digit at position sigma(i) of the image
/// label equals the digit at position i of the source.
SparseState permute_state(const SparseState& s, const Permutation& sigma);

/// Partial trace onto `subset` (order kept as given), from the sparse
/// support without materializing the full vector.
DensityMatrix reduced_density(const SparseState& s, const std::vector<int>& subset);

/// The 4x4 two-vertex reduction of an excitation-state in closed form;
/// requires a uniform hypergraph. Basis order |vw>: 00,01,10,11.
DensityMatrix reduced_2q_closed_form(const Hypergraph& g, int v, int w);

double fidelity(const SparseState& a, const SparseState& b);

/// True when the state factors as a tensor product over the partition blocks.
bool separability_check(const SparseState& s, const std::vector<std::vector<int>>& partition,
                        double tol = 1e-10);

}  // namespace exst
