#include "exst/smalleig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace exst {

using cd = std::complex<double>;

std::vector<cd> small_complex_eigenvalues(const std::vector<cd>& m, int dim) {
  if (static_cast<int>(m.size()) != dim * dim) throw std::invalid_argument("matrix size mismatch");
  // Characteristic polynomial by Faddeev-LeVerrier:
  // p(x) = x^d + c[1] x^(d-1) + ... + c[d].
  std::vector<cd> c(dim + 1, cd{0.0, 0.0});
  c[0] = 1.0;
  std::vector<cd> M(m.size(), cd{0.0, 0.0});  // running M_k
  auto mat_mul = [&](const std::vector<cd>& a, const std::vector<cd>& b) {
    std::vector<cd> r(dim * dim, cd{0.0, 0.0});
    for (int i = 0; i < dim; ++i)
      for (int kk = 0; kk < dim; ++kk) {
        cd aik = a[i * dim + kk];
        if (aik == cd{0.0, 0.0}) continue;
        for (int j = 0; j < dim; ++j) r[i * dim + j] += aik * b[kk * dim + j];
      }
    return r;
  };
  std::vector<cd> Mk = m;
  for (int k = 1; k <= dim; ++k) {
    if (k > 1) {
      // M_k = A (M_{k-1} + c_{k-1} I)
      std::vector<cd> t = M;
      for (int i = 0; i < dim; ++i) t[i * dim + i] += c[k - 1];
      Mk = mat_mul(m, t);
    }
    cd tr{0.0, 0.0};
    for (int i = 0; i < dim; ++i) tr += Mk[i * dim + i];
    c[k] = -tr / static_cast<double>(k);
    M = Mk;
  }

  // Durand-Kerner on the monic polynomial.
  double scale = 0.0;
  for (int k = 1; k <= dim; ++k) scale = std::max(scale, std::pow(std::abs(c[k]), 1.0 / k));
  if (scale == 0.0) return std::vector<cd>(dim, cd{0.0, 0.0});
  std::vector<cd> roots(dim);
  cd seed{0.4, 0.9};
  cd cur{1.0, 0.0};
  for (int i = 0; i < dim; ++i) {
    cur *= seed;
    roots[i] = cur * scale;
  }
  auto poly = [&](cd x) {
    cd p{1.0, 0.0};
    for (int k = 1; k <= dim; ++k) p = p * x + c[k];
    return p;
  };
  for (int iter = 0; iter < 500; ++iter) {
    double delta = 0.0;
    for (int i = 0; i < dim; ++i) {
      cd denom{1.0, 0.0};
      for (int j = 0; j < dim; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      if (denom == cd{0.0, 0.0}) denom = cd{1e-30, 0.0};
      cd step = poly(roots[i]) / denom;
      roots[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-14 * std::max(1.0, scale)) break;
  }
  return roots;
}

std::vector<double> jacobi_eigensymmetric(std::vector<double> a, int dim,
                                          std::vector<double>* vecs, int max_sweeps) {
  if (static_cast<int>(a.size()) != dim * dim) throw std::invalid_argument("matrix size mismatch");
  std::vector<double> v;
  if (vecs) {
    v.assign(static_cast<size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) v[static_cast<size_t>(i) * dim + i] = 1.0;
  }
  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * dim + j]; };
  double scale = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) scale = std::max(scale, std::abs(at(i, j)));
  if (scale == 0.0) scale = 1.0;

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) off += at(i, j) * at(i, j);
    if (std::sqrt(off) < 1e-13 * scale * dim) break;
    for (int p = 0; p < dim; ++p)
      for (int q = p + 1; q < dim; ++q) {
        double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double cth = 1.0 / std::sqrt(t * t + 1.0);
        double sth = t * cth;
        for (int i = 0; i < dim; ++i) {
          double aip = at(i, p), aiq = at(i, q);
          at(i, p) = cth * aip - sth * aiq;
          at(i, q) = sth * aip + cth * aiq;
        }
        for (int i = 0; i < dim; ++i) {
          double api = at(p, i), aqi = at(q, i);
          at(p, i) = cth * api - sth * aqi;
          at(q, i) = sth * api + cth * aqi;
        }
        if (vecs)
          for (int i = 0; i < dim; ++i) {
            double vip = v[static_cast<size_t>(i) * dim + p];
            double viq = v[static_cast<size_t>(i) * dim + q];
            v[static_cast<size_t>(i) * dim + p] = cth * vip - sth * viq;
            v[static_cast<size_t>(i) * dim + q] = sth * vip + cth * viq;
          }
      }
  }
  if (sweep == max_sweeps) throw std::runtime_error("jacobi did not converge");

  std::vector<int> order(dim);
  for (int i = 0; i < dim; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return at(x, x) < at(y, y); });
  std::vector<double> evals(dim);
  for (int i = 0; i < dim; ++i) evals[i] = at(order[i], order[i]);
  if (vecs) {
    vecs->assign(static_cast<size_t>(dim) * dim, 0.0);
    for (int col = 0; col < dim; ++col)
      for (int i = 0; i < dim; ++i)
        (*vecs)[static_cast<size_t>(i) * dim + col] = v[static_cast<size_t>(i) * dim + order[col]];
  }
  return evals;
}

}  // namespace exst
