#pragma once

#include <complex>
#include <vector>

namespace exst {

/// Eigenvalues of a small dense complex matrix (row-major, dim x dim) via
/// the characteristic polynomial (Faddeev-LeVerrier) and Durand-Kerner
/// root iteration. Intended for dim <= 8.
std::vector<std::complex<double>> small_complex_eigenvalues(
    const std::vector<std::complex<double>>& m, int dim);

/// Cyclic Jacobi for a dense symmetric matrix (row-major). Returns
/// eigenvalues ascending; eigenvectors as columns of `vecs` when non-null.
std::vector<double> jacobi_eigensymmetric(std::vector<double> m, int dim,
                                          std::vector<double>* vecs = nullptr,
                                          int max_sweeps = 100);

}  // namespace exst
