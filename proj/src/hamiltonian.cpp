#include "exst/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "exst/comb.hpp"
#include "exst/smalleig.hpp"

namespace exst {

namespace {

SubspaceOperator make_sector(int n, int k, int dim_budget) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("bad sector parameters");
  uint64_t dim = binom_u64(n, k);
  if (dim > static_cast<uint64_t>(dim_budget))
    throw std::runtime_error("sector dimension budget exceeded: C(" + std::to_string(n) + "," +
                             std::to_string(k) + ") = " + std::to_string(dim));
  SubspaceOperator op;
  op.n = n;
  op.k = k;
  op.basis = k_subsets(n, k);
  op.mat.assign(op.basis.size() * op.basis.size(), 0.0);
  return op;
}

std::map<uint64_t, int> index_of(const SubspaceOperator& op) {
  std::map<uint64_t, int> idx;
  for (size_t i = 0; i < op.basis.size(); ++i) idx[op.basis[i]] = static_cast<int>(i);
  return idx;
}

}  // namespace

SubspaceOperator build_dicke_jj(int n, int k, int dim_budget) {
  SubspaceOperator op = make_sector(n, k, dim_budget);
  auto idx = index_of(op);
  for (size_t col = 0; col < op.basis.size(); ++col) {
    uint64_t s = op.basis[col];
    op.at(static_cast<int>(col), static_cast<int>(col)) += k;  // j = i back-hops
    uint64_t rem = s;
    while (rem) {
      int i = std::countr_zero(rem);
      rem &= rem - 1;
      uint64_t without = s & ~(uint64_t{1} << i);
      for (int j = 0; j < n; ++j) {
        if ((s >> j) & 1) continue;
        uint64_t t = without | (uint64_t{1} << j);
        op.at(idx.at(t), static_cast<int>(col)) += 1.0;
      }
    }
  }
  return op;
}

SubspaceOperator build_hg(const Hypergraph& g, int k, int dim_budget) {
  if (g.uniformity && k < *g.uniformity)
    throw std::invalid_argument("sector excitation number below hypergraph uniformity");
  SubspaceOperator op = make_sector(g.n, k, dim_budget);
  auto idx = index_of(op);
  std::vector<uint64_t> edge_masks;
  for (const auto& e : g.edges) edge_masks.push_back(mask_from_subset(e));
  for (size_t col = 0; col < op.basis.size(); ++col) {
    uint64_t s = op.basis[col];
    for (uint64_t e : edge_masks) {
      if ((s & e) != e) continue;  // J-^G needs the edge fully excited
      uint64_t rest = s & ~e;
      for (uint64_t e2 : edge_masks) {
        if (popcount64(e2) != popcount64(e)) continue;  // stay in the sector
        if ((rest & e2) != 0) continue;                 // J+^G needs free sites
        uint64_t t = rest | e2;
        op.at(idx.at(t), static_cast<int>(col)) += 1.0;
      }
    }
  }
  return op;
}

SubspaceOperator build_3body(const Hypergraph& g, int dim_budget) {
  if (!g.uniformity || *g.uniformity != 2)
    throw std::invalid_argument("three-body Hamiltonian needs a 2-uniform graph");
  SubspaceOperator op = make_sector(g.n, 2, dim_budget);
  auto idx = index_of(op);
  auto adj = adjacency(g);
  std::vector<std::set<int>> nbr(g.n);
  for (int v = 0; v < g.n; ++v) nbr[v] = std::set<int>(adj[v].begin(), adj[v].end());

  for (size_t col = 0; col < op.basis.size(); ++col) {
    uint64_t s = op.basis[col];
    auto verts = subset_from_mask(s);
    int a = verts[0], b = verts[1];
    // diagonal: hop out and back through an occupied middle site
    double diag = 0.0;
    diag += nbr[a].size() - (nbr[a].count(b) ? 1 : 0);
    diag += nbr[b].size() - (nbr[b].count(a) ? 1 : 0);
    op.at(static_cast<int>(col), static_cast<int>(col)) += diag;
    // off-diagonal: v hops to x through the shared occupied site w
    for (auto [v, w] : {std::pair{a, b}, std::pair{b, a}}) {
      if (!nbr[w].count(v)) continue;
      for (int x : nbr[w]) {
        if (x == v || x == w || ((s >> x) & 1)) continue;
        uint64_t t = (s & ~(uint64_t{1} << v)) | (uint64_t{1} << x);
        op.at(idx.at(t), static_cast<int>(col)) += 1.0;
      }
    }
  }
  return op;
}

std::vector<double> sector_vector(const SubspaceOperator& op, const SparseState& s) {
  if (s.n != op.n || s.local_dim != 2) throw std::invalid_argument("state/sector shape mismatch");
  auto idx = index_of(op);
  std::vector<double> t(op.basis.size(), 0.0);
  for (const auto& [label, amp] : s.amps) {
    std::vector<int> digits = s.unpack(label);
    uint64_t mask = 0;
    int weight = 0;
    for (int v = 0; v < s.n; ++v)
      if (digits[v]) {
        mask |= uint64_t{1} << v;
        ++weight;
      }
    if (weight != op.k) continue;  // outside the sector
    if (std::abs(amp.imag()) > 1e-12)
      throw std::invalid_argument("sector projection expects real amplitudes");
    t[idx.at(mask)] = amp.real();
  }
  return t;
}

SpectrumReport top_eigenpair(const SubspaceOperator& op, const SparseState& target) {
  const int dim = op.dim();
  std::vector<double> vecs;
  std::vector<double> evals = jacobi_eigensymmetric(op.mat, dim, &vecs);
  SpectrumReport rep;
  rep.top_eigenvalue = evals.back();
  rep.degeneracy = 0;
  for (double ev : evals)
    if (rep.top_eigenvalue - ev < 1e-8) ++rep.degeneracy;

  std::vector<double> t = sector_vector(op, target);
  double tn2 = 0.0;
  for (double x : t) tn2 += x * x;
  if (tn2 > 1e-24) {
    double ov = 0.0;
    for (int i = 0; i < dim; ++i) ov += t[i] * vecs[static_cast<size_t>(i) * dim + dim - 1];
    rep.overlap = ov * ov / tn2;
    // residual ||H t - mu t|| at the Rayleigh quotient, t normalized
    std::vector<double> ht(dim, 0.0);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) ht[i] += op.at(i, j) * t[j];
    double mu = 0.0;
    for (int i = 0; i < dim; ++i) mu += t[i] * ht[i];
    mu /= tn2;
    double r2 = 0.0;
    for (int i = 0; i < dim; ++i) {
      double d = ht[i] - mu * t[i];
      r2 += d * d;
    }
    rep.residual = std::sqrt(r2 / tn2);
  } else {
    rep.flags = "target has no support in the sector";
    rep.overlap = 0.0;
    rep.residual = -1.0;
  }
  return rep;
}

}  // namespace exst
