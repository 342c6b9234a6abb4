#include "exst/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace exst {

int gate_cnot_cost(GateKind k) {
  switch (k) {
    case GateKind::U1: return 10;
    case GateKind::U2: return 6;
    case GateKind::U3: return 1;
    case GateKind::U4: return 3;
    case GateKind::X: return 0;
  }
  return 0;
}

std::string gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::U1: return "U1";
    case GateKind::U2: return "U2";
    case GateKind::U3: return "U3";
    case GateKind::U4: return "U4";
    case GateKind::X: return "X";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& s) {
  if (s == "U1") return GateKind::U1;
  if (s == "U2") return GateKind::U2;
  if (s == "U3") return GateKind::U3;
  if (s == "U4") return GateKind::U4;
  if (s == "X") return GateKind::X;
  throw std::invalid_argument("unknown gate kind: " + s);
}

int Circuit::cnot_cost() const {
  int c = 0;
  for (const Gate& g : gates) c += gate_cnot_cost(g.kind);
  return c;
}

namespace {

// Merge-plane basis patterns on the gate targets; pattern bit i is the
// digit of target i. Returns {u, t}: sqrt(a)|u> + sqrt(b)|t> -> sqrt(a+b)|t>.
// In ket notation (first target leftmost): U1/U2 merge |101> into |001>,
// U3 merges |11> into |01>, U4 merges |01> into |10>.
std::pair<int, int> merge_plane(GateKind k, int arity) {
  switch (k) {
    case GateKind::U1:
    case GateKind::U2:
      if (arity != 3) throw std::invalid_argument("U1/U2 need three targets");
      return {1 | 4, 4};
    case GateKind::U3:
      if (arity != 2) throw std::invalid_argument("U3 needs two targets");
      return {1 | 2, 2};
    case GateKind::U4:
      if (arity != 2) throw std::invalid_argument("U4 needs two targets");
      return {2, 1};
    default:
      throw std::invalid_argument("gate has no merge plane");
  }
}

}  // namespace

SparseState apply_circuit(const SparseState& s, const Circuit& c) {
  if (s.n != c.n) throw std::invalid_argument("circuit/state shape mismatch");
  if (s.local_dim != 2) throw std::invalid_argument("circuits act on qubits");
  SparseState cur = s;
  for (const Gate& g : c.gates) {
    for (int t : g.targets)
      if (t < 0 || t >= c.n) throw std::invalid_argument("gate target out of range");
    if (g.kind == GateKind::X) {
      SparseState next;
      next.n = cur.n;
      next.local_dim = 2;
      for (const auto& [label, amp] : cur.amps) {
        std::vector<int> digits = cur.unpack(label);
        digits[g.targets.at(0)] ^= 1;
        next.amps[next.pack(digits)] = amp;
      }
      cur = std::move(next);
      continue;
    }
    const int arity = static_cast<int>(g.targets.size());
    auto [u_pat, t_pat] = merge_plane(g.kind, arity);
    double r = std::sqrt(g.a + g.b);
    if (r <= 0.0) continue;  // zero-weight rotation; identity
    double alpha = std::sqrt(g.a) / r;  // coefficient on |u>
    double beta = std::sqrt(g.b) / r;   // coefficient on |t>
    // Givens: |u> -> beta|u> + alpha|t>; |t> -> -alpha|u> + beta|t>;
    // transposed swaps the sign pattern.
    SparseState next;
    next.n = cur.n;
    next.local_dim = 2;
    for (const auto& [label, amp] : cur.amps) {
      std::vector<int> digits = cur.unpack(label);
      int pat = 0;
      for (int i = 0; i < arity; ++i) pat = (pat << 1) | digits[g.targets[arity - 1 - i]];
      // pat bit i corresponds to target i (bit 0 = first target).
      if (pat == u_pat || pat == t_pat) {
        auto emit = [&](int pattern, double coef) {
          if (coef == 0.0) return;
          std::vector<int> d2 = digits;
          for (int i = 0; i < arity; ++i) d2[g.targets[i]] = (pattern >> i) & 1;
          next.amps[next.pack(d2)] += coef * amp;
        };
        double cu, ct;  // images of this basis vector
        if (!g.transposed) {
          if (pat == u_pat) {
            cu = beta;
            ct = alpha;
          } else {
            cu = -alpha;
            ct = beta;
          }
        } else {
          if (pat == u_pat) {
            cu = beta;
            ct = -alpha;
          } else {
            cu = alpha;
            ct = beta;
          }
        }
        emit(u_pat, cu);
        emit(t_pat, ct);
      } else {
        next.amps[next.pack(digits)] += amp;
      }
    }
    next.prune();
    cur = std::move(next);
  }
  return cur;
}

Circuit synthesize_disentangler(const Hypergraph& g, const std::vector<int>& order_in) {
  if (!g.uniformity || *g.uniformity != 2)
    throw std::invalid_argument("circuit synthesis supports 2-uniform graphs only");
  if (!predicates(g).connected) throw std::invalid_argument("circuit synthesis needs a connected graph");

  std::vector<int> order = order_in;
  if (order.empty()) {
    order.resize(g.n);
    std::iota(order.begin(), order.end(), 0);
  }
  {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < g.n; ++i)
      if (i >= static_cast<int>(sorted.size()) || sorted[i] != i)
        throw std::invalid_argument("deletion order must be a permutation of the vertices");
  }

  Circuit c;
  c.n = g.n;
  std::set<std::pair<int, int>> live;
  for (const auto& e : g.edges) live.insert({e[0], e[1]});
  std::vector<int> weight(g.n, 0);  // degree at deletion time

  for (int step = 0; step + 1 < g.n; ++step) {
    int v = order[step];
    std::vector<int> nbrs;
    for (const auto& [a, b] : live) {
      if (a == v) nbrs.push_back(b);
      if (b == v) nbrs.push_back(a);
    }
    std::sort(nbrs.begin(), nbrs.end());
    int d = static_cast<int>(nbrs.size());
    weight[v] = d;
    if (d == 0) continue;
    int last = nbrs.back();
    if (d == 1) {
      c.gates.push_back({GateKind::U3, {last, v}, 1.0, 0.0, false});
    } else {
      for (int i = 1; i <= d - 2; ++i)
        c.gates.push_back({GateKind::U1, {nbrs[i - 1], last, v}, 1.0, static_cast<double>(i - 1), false});
      c.gates.push_back({GateKind::U2, {nbrs[d - 2], last, v}, 1.0, static_cast<double>(d - 2), false});
      c.gates.push_back({GateKind::U3, {last, v}, 1.0, static_cast<double>(d - 1), false});
    }
    for (int w : nbrs) live.erase({std::min(v, w), std::max(v, w)});
  }

  // W-merge chain onto the anchor (first vertex in deletion order); one U4
  // per non-anchor vertex, zero-weight ones included as identity rotations.
  int anchor = order.front();
  double acc = weight[anchor];
  for (int i = 1; i < g.n; ++i) {
    int u = order[i];
    c.gates.push_back({GateKind::U4, {anchor, u}, static_cast<double>(weight[u]), acc, false});
    acc += weight[u];
  }
  return c;
}

Circuit invert(const Circuit& c) {
  Circuit r;
  r.n = c.n;
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    Gate g = *it;
    if (g.kind != GateKind::X) g.transposed = !g.transposed;
    r.gates.push_back(g);
  }
  return r;
}

Circuit preparation_circuit(const Hypergraph& g, const std::vector<int>& order) {
  Circuit dis = synthesize_disentangler(g, order);
  int anchor = order.empty() ? 0 : order.front();
  Circuit prep;
  prep.n = g.n;
  prep.gates.push_back({GateKind::X, {anchor}, 0.0, 0.0, false});
  Circuit inv = invert(dis);
  prep.gates.insert(prep.gates.end(), inv.gates.begin(), inv.gates.end());
  return prep;
}

RegimeEstimate regime_estimate(const Hypergraph& g) {
  if (!g.uniformity || *g.uniformity != 2)
    throw std::invalid_argument("regime estimate applies to graphs");
  double vcount = g.n;
  double ecount = g.edge_count();
  RegimeEstimate r;
  if (ecount <= 1.25 * vcount) {
    r.regime = "sparse";
    r.estimate = static_cast<int>(4 * (vcount - 1));
  } else if (ecount <= 1.75 * vcount) {
    r.regime = "medium";
    r.estimate = static_cast<int>(7 * (vcount - 1));
  } else {
    r.regime = "dense";
    r.estimate = static_cast<int>(10 * ecount + 2 * vcount - 2);
  }
  return r;
}

}  // namespace exst
