#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exst/hypergraph.hpp"
#include "exst/state.hpp"

namespace exst {

enum class GateKind { U1, U2, U3, U4, X };

int gate_cnot_cost(GateKind k);  // U1:10 U2:6 U3:1 U4:3 X:0
std::string gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& s);

/// Real Givens rotation on a two-dimensional computational-basis subspace of
/// the target qubits, identity elsewhere. params (a,b) define the merged
/// superposition: sqrt(a)|u> + sqrt(b)|t> maps to sqrt(a+b)|t>.
/// Merge planes (|u>, |t>) by kind, targets listed first-to-last:
///   U1/U2 on (x, y, v): |101> -> |001>
///   U3    on (y, v):    |11>  -> |01>
///   U4    on (anchor, i): |01> -> |10>
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> targets;
  double a = 0.0;
  double b = 0.0;
  bool transposed = false;
};

struct Circuit {
  int n = 0;
  std::vector<Gate> gates;

  int cnot_cost() const;
};

/// Vertex-deletion disentangler for a connected graph: applied to the
/// excitation-state it yields the basis state with one excitation on the
/// first vertex of the deletion order.
Circuit synthesize_disentangler(const Hypergraph& g, const std::vector<int>& order = {});

Circuit invert(const Circuit& c);

/// X on the anchor followed by the inverse disentangler; maps |0...0> to
/// the excitation-state of g.
Circuit preparation_circuit(const Hypergraph& g, const std::vector<int>& order = {});

SparseState apply_circuit(const SparseState& s, const Circuit& c);

struct RegimeEstimate {
  std::string regime;  // sparse | medium | dense
  int estimate = 0;
};

/// Paper cost regimes: |E|~|V| -> 4(|V|-1); |E|~1.5|V| -> 7(|V|-1);
/// denser -> 10|E| + 2|V| - 2.
RegimeEstimate regime_estimate(const Hypergraph& g);

}  // namespace exst
