#include "exst/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "exst/comb.hpp"
#include "exst/smalleig.hpp"

namespace exst {

double concurrence_wootters(const DensityMatrix& rho) {
  if (rho.dim != 4) throw std::invalid_argument("wootters concurrence needs a 4x4 matrix");
  if (!rho.is_hermitian(1e-9)) throw std::invalid_argument("density matrix not hermitian");
  // spin flip: (sy ⊗ sy) rho* (sy ⊗ sy); in the computational basis the
  // operator maps |ij> -> (-1)^(i+j+...)|~i ~j>: matrix form below.
  // (sy⊗sy)[a][b] nonzero at b = 3-a with signs {-1, +1, +1, -1}.
  static const double sign[4] = {-1.0, 1.0, 1.0, -1.0};
  std::vector<cplx> flipped(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      flipped[i * 4 + j] = sign[i] * sign[j] * std::conj(rho.at(3 - i, 3 - j));
  std::vector<cplx> prod(16, cplx{0.0, 0.0});
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      cplx rik = rho.at(i, k);
      if (rik == cplx{0.0, 0.0}) continue;
      for (int j = 0; j < 4; ++j) prod[i * 4 + j] += rik * flipped[k * 4 + j];
    }
  auto eig = small_complex_eigenvalues(prod, 4);
  std::vector<double> lam;
  for (const cplx& z : eig) {
    if (std::abs(z.imag()) > 1e-7) throw std::runtime_error("unexpected complex eigenvalue in rho*rho~");
    lam.push_back(std::sqrt(std::max(0.0, z.real())));
  }
  std::sort(lam.rbegin(), lam.rend());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double concurrence_excitation(const Hypergraph& g, int v, int w) {
  if (v == w) throw std::invalid_argument("concurrence requires distinct vertices");
  if (!g.uniformity)
    throw std::invalid_argument("closed-form concurrence requires a uniform hypergraph");
  VertexPairStats st = pair_stats(g, v, w);
  double e = st.edge_count;
  double lambda = e - st.degree_v - st.degree_w + st.section;
  double val = 2.0 / e * (st.joint_neighborhood - std::sqrt(st.section * lambda));
  return std::max(0.0, val);
}

bool ppt_entangled(const Hypergraph& g, int v, int w) {
  VertexPairStats st = pair_stats(g, v, w);
  double lambda = st.edge_count - st.degree_v - st.degree_w + st.section;
  double n2 = static_cast<double>(st.joint_neighborhood) * st.joint_neighborhood;
  return n2 > lambda * st.section;
}

double concurrence_regular(const Hypergraph& g, int v, int w) {
  HypergraphPredicates p = predicates(g);
  if (!p.connected || !p.distance1_regular)
    throw std::invalid_argument("regular-form concurrence needs a connected distance-1 regular graph");
  VertexPairStats st = pair_stats(g, v, w);
  double e = st.edge_count;
  if (st.distance == 1) {
    double c = st.joint_neighborhood -
               std::sqrt(st.section * (e - 2.0 * st.degree_v + st.section));
    return 2.0 / e * std::max(0.0, c);
  }
  if (st.distance == 2) return 2.0 / e * st.joint_neighborhood;
  return 0.0;
}

double c_v_rest_state(const SparseState& s, int v) {
  DensityMatrix rho = reduced_density(s, {v});
  cplx det = rho.at(0, 0) * rho.at(1, 1) - rho.at(0, 1) * rho.at(1, 0);
  return 2.0 * std::sqrt(std::max(0.0, det.real()));
}

double c_v_rest_graph(const Hypergraph& g, int v) {
  double e = g.edge_count();
  double d = degree(g, v);
  return std::sqrt(std::max(0.0, 4.0 * d * (e - d) / (e * e)));
}

double entanglement_ratio(const Hypergraph& g, int v) {
  double rest2 = c_v_rest_graph(g, v);
  rest2 *= rest2;
  if (rest2 <= 0.0) throw std::invalid_argument("isolated vertex has no entanglement ratio");
  double sum = 0.0;
  for (int w = 0; w < g.n; ++w) {
    if (w == v) continue;
    double c = concurrence_excitation(g, v, w);
    sum += c * c;
  }
  return sum / rest2;
}

double monogamy_gap(const Hypergraph& g, int v) {
  double rest2 = c_v_rest_graph(g, v);
  rest2 *= rest2;
  double sum = 0.0;
  for (int w = 0; w < g.n; ++w) {
    if (w == v) continue;
    double c = concurrence_excitation(g, v, w);
    sum += c * c;
  }
  return rest2 - sum;
}

NodeEntanglement analyze_vertex(const Hypergraph& g, int v) {
  NodeEntanglement node;
  node.vertex = v;
  SparseState psi;
  if (!g.uniformity) psi = excitation_state(g);
  node.c_v_rest = g.uniformity ? c_v_rest_graph(g, v) : c_v_rest_state(psi, v);
  double sum = 0.0;
  for (int w = 0; w < g.n; ++w) {
    if (w == v) continue;
    ConcurrenceReport rep;
    rep.v = v;
    rep.w = w;
    rep.distance = distance(g, v, w);
    if (g.uniformity) {
      rep.concurrence = concurrence_excitation(g, v, w);
      rep.method = "closed_form";
    } else {
      rep.concurrence = concurrence_wootters(reduced_density(psi, {v, w}));
      rep.method = "wootters";
    }
    sum += rep.concurrence * rep.concurrence;
    node.pairwise.push_back(rep);
  }
  double rest2 = node.c_v_rest * node.c_v_rest;
  node.gamma = rest2 > 0.0 ? sum / rest2 : 0.0;
  node.monogamy_gap = rest2 - sum;
  return node;
}

double gamma_v_path_count(const Hypergraph& g, int v) {
  if (!g.uniformity || *g.uniformity != 2)
    throw std::invalid_argument("gamma_v path count needs a 2-uniform graph");
  if (!predicates(g).regular) throw std::invalid_argument("gamma_v path count needs a regular graph");
  double sum = 0.0;
  for (int w = 0; w < g.n; ++w) {
    if (w == v) continue;
    if (distance(g, v, w) == 2) {
      double nvw = joint_neighborhood(g, v, w);
      sum += nvw * nvw;
    }
  }
  return sum;
}

double local_network_bound(int n, int d) {
  return 2.0 / (n - 2.0) * (d - 1.0) / d;
}

double flat_network_estimate(int n, int d) {
  return 1.0 / (n - 2.0) * (d - 1.0) * (d - 1.0) / d;
}

FamilyClosedForm dicke_closed_form(int n, int k) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("dicke closed form needs 1 <= k <= n-1");
  FamilyClosedForm f;
  double e = binom_d(n, k);
  double diff = binom_d(n - 2, k - 1) - std::sqrt(binom_d(n - 2, k) * binom_d(n - 2, k - 2));
  f.c_dist1 = std::max(0.0, 2.0 / e * diff);
  f.c_dist2 = 0.0;  // complete hypergraph: every pair is adjacent
  f.gamma = (n - 1.0) / (binom_d(n - 1, k) * binom_d(n - 1, k - 1)) * diff * diff;
  f.asymptotic_gamma = 2.0 * k - 1.0 - 2.0 * std::sqrt(static_cast<double>(k) * (k - 1));
  return f;
}

FamilyClosedForm cycle_closed_form(int n) {
  if (n < 3) throw std::invalid_argument("cycle closed form needs n >= 3");
  FamilyClosedForm f;
  if (n == 3) {
    // triangle = complete graph on 3 vertices
    return dicke_closed_form(3, 2);
  }
  f.c_dist1 = 0.0;
  f.c_dist2 = (n == 4) ? 1.0 : 2.0 / n;
  f.gamma = (n == 4) ? 1.0 : 1.0 / (n - 2.0);
  f.asymptotic_gamma = 0.0;
  return f;
}

FamilyClosedForm orthoplex2_closed_form(int m) {
  if (m < 2) throw std::invalid_argument("orthoplex closed form needs m >= 2");
  FamilyClosedForm f;
  double e = 2.0 * m * (m - 1.0);
  if (m == 2) {  // square = C4
    return cycle_closed_form(4);
  }
  double lambda = 2.0 * m * m - 6.0 * m + 5.0;
  f.c_dist1 = std::max(0.0, 2.0 / e * (2.0 * m - 4.0 - std::sqrt(lambda)));
  f.c_dist2 = 2.0 / m;
  if (m <= 3) {
    f.gamma = 1.0 / (m - 1.0);
  } else {
    double r = std::sqrt(lambda);
    f.gamma = (6.0 * m * m - 4.0 * m * (r + 5.0) + 8.0 * r + 19.0) / (2.0 * (m - 1.0) * (m - 1.0));
  }
  f.asymptotic_gamma = 3.0 - 2.0 * std::sqrt(2.0);
  return f;
}

FamilyClosedForm hypercube2_closed_form(int m) {
  if (m < 2) throw std::invalid_argument("hypercube closed form needs m >= 2");
  FamilyClosedForm f;
  f.c_dist1 = 0.0;
  f.c_dist2 = std::pow(2.0, 3.0 - m) / m;
  f.gamma = 4.0 * (m - 1.0) / (m * (std::pow(2.0, m) - 2.0));
  f.asymptotic_gamma = 0.0;
  return f;
}

FamilyClosedForm hex_torus_closed_form(int n_vertices) {
  if (n_vertices < 9) throw std::invalid_argument("hexagonal closed form needs n >= 9");
  FamilyClosedForm f;
  f.c_dist1 = 0.0;
  f.c_dist2 = 2.0 / n_vertices;
  f.gamma = 4.0 / 3.0 / (n_vertices - 2.0);
  f.asymptotic_gamma = 0.0;
  return f;
}

PhaseThresholds phase_thresholds(double n) {
  if (n < 8.0) throw std::invalid_argument("phase thresholds need N >= 8");
  PhaseThresholds t;
  t.d1 = n / std::cbrt(2.0);
  t.equation = "x(x^2 - sqrt(x/2))^2 = (1-x) x^4, x = d/N, n_vw = d^2/N; d2/N = sqrt(x*)";
  auto balance = [](double x) {
    double lhs = x * std::pow(x * x - std::sqrt(x / 2.0), 2.0);
    double rhs = (1.0 - x) * std::pow(x, 4.0);
    return lhs - rhs;
  };
  double lo = t.d1 / n + 1e-9, hi = 1.0 - 1e-12;
  if (balance(lo) >= 0.0 || balance(hi) <= 0.0) throw std::runtime_error("no balance root in bracket");
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (balance(mid) < 0.0 ? lo : hi) = mid;
  }
  t.balance_root = 0.5 * (lo + hi);
  t.d2 = n * std::sqrt(t.balance_root);
  return t;
}

}  // namespace exst
