#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exst/hypergraph.hpp"
#include "exst/state.hpp"

namespace exst {

struct ConcurrenceReport {
  int v = 0;
  int w = 0;
  double concurrence = 0.0;
  std::string method;  // wootters | closed_form | regular_form
  int distance = kInfiniteDistance;
};

struct NodeEntanglement {
  int vertex = 0;
  double c_v_rest = 0.0;
  double gamma = 0.0;
  double monogamy_gap = 0.0;
  std::vector<ConcurrenceReport> pairwise;
};

/// Wootters concurrence of a two-qubit density matrix.
double concurrence_wootters(const DensityMatrix& rho);

/// Closed form max{0, (2/|E|)(n_vw - sqrt(s_vw * lambda))} for uniform
/// hypergraphs; lambda = |E| - d_v - d_w + s_vw.
double concurrence_excitation(const Hypergraph& g, int v, int w);

/// PPT verdict: entangled iff n_vw^2 > lambda * s_vw.
bool ppt_entangled(const Hypergraph& g, int v, int w);

/// Three-case form for connected distance-1 regular graphs.
double concurrence_regular(const Hypergraph& g, int v, int w);

/// Generalized concurrence of one subsystem against the rest: 2 sqrt(det rho_v).
double c_v_rest_state(const SparseState& s, int v);
/// Closed form sqrt(4 d_v (|E|-d_v) / |E|^2) for the excitation-state of g.
double c_v_rest_graph(const Hypergraph& g, int v);

double entanglement_ratio(const Hypergraph& g, int v);
double monogamy_gap(const Hypergraph& g, int v);
NodeEntanglement analyze_vertex(const Hypergraph& g, int v);

/// gamma_v = sum over distance-2 vertices of n_vw^2 (2-uniform regular).
double gamma_v_path_count(const Hypergraph& g, int v);
double local_network_bound(int n, int d);
double flat_network_estimate(int n, int d);

struct FamilyClosedForm {
  double c_dist1 = 0.0;
  double c_dist2 = 0.0;
  double gamma = 0.0;
  double asymptotic_gamma = 0.0;
};

/// Closed-form concurrence/ratio for: dicke(N,k), cycle(N), orthoplex2(m),
/// hypercube2(m), hex_torus(N).
FamilyClosedForm dicke_closed_form(int n, int k);
FamilyClosedForm cycle_closed_form(int n);
FamilyClosedForm orthoplex2_closed_form(int m);
FamilyClosedForm hypercube2_closed_form(int m);
FamilyClosedForm hex_torus_closed_form(int n_vertices);

struct PhaseThresholds {
  double d1 = 0.0;            // onset of distance-1 entanglement
  double d2 = 0.0;            // distance-1 contribution overtakes distance-2
  double balance_root = 0.0;  // raw root x* of the contribution balance in x = d/N
  std::string equation;       // the relation solved, documented verbatim
};

/// d1 = N / 2^(1/3); d2 from the contribution balance
/// x(x^2 - sqrt(x/2))^2 = (1-x) x^4 solved by bisection on (d1/N, 1).
/// The published transition degree corresponds to sqrt(x*), which is what
/// d2 reports; the raw root is kept alongside.
PhaseThresholds phase_thresholds(double n);

}  // namespace exst
