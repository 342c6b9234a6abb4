#include "exst/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace exst {

using nlohmann::json;

json hypergraph_to_json(const Hypergraph& g) {
  json j;
  j["n"] = g.n;
  j["edges"] = g.edges;
  return j;
}

Hypergraph hypergraph_from_json(const json& j, std::vector<std::string>* warnings) {
  if (!j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("hypergraph JSON needs \"n\" and \"edges\"");
  return validate(j.at("n").get<int>(), j.at("edges").get<std::vector<std::vector<int>>>(), warnings);
}

json state_to_json(const SparseState& s) {
  json amps = json::object();
  for (const auto& [label, amp] : s.amps)
    amps[s.label_string(label)] = json::array({amp.real(), amp.imag()});
  json j;
  j["n"] = s.n;
  j["local_dim"] = s.local_dim;
  j["amps"] = amps;
  return j;
}

SparseState state_from_json(const json& j) {
  SparseState s;
  s.n = j.at("n").get<int>();
  s.local_dim = j.value("local_dim", 2);
  for (auto it = j.at("amps").begin(); it != j.at("amps").end(); ++it) {
    const auto& v = it.value();
    cplx amp = v.is_array() ? cplx{v.at(0).get<double>(), v.size() > 1 ? v.at(1).get<double>() : 0.0}
                            : cplx{v.get<double>(), 0.0};
    s.amps[s.label_from_string(it.key())] = amp;
  }
  return s;
}

json group_to_json(const PermutationGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators) gens.push_back(p.image);
  json j;
  j["n"] = g.n;
  j["generators"] = gens;
  return j;
}

PermutationGroup group_from_json(const json& j) {
  PermutationGroup g;
  g.n = j.at("n").get<int>();
  for (const auto& images : j.at("generators")) {
    Permutation p;
    p.image = images.get<std::vector<int>>();
    if (static_cast<int>(p.image.size()) != g.n)
      throw std::invalid_argument("generator length mismatch");
    std::vector<char> seen(g.n, 0);
    for (int x : p.image) {
      if (x < 0 || x >= g.n || seen[x]) throw std::invalid_argument("generator is not a permutation");
      seen[x] = 1;
    }
    g.generators.push_back(p);
  }
  return g;
}

json circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates) {
    json jg;
    jg["kind"] = gate_kind_name(g.kind);
    jg["targets"] = g.targets;
    jg["params"] = json::array({g.a, g.b});
    if (g.transposed) jg["transposed"] = true;
    gates.push_back(jg);
  }
  json j;
  j["n"] = c.n;
  j["gates"] = gates;
  j["cnot_cost"] = c.cnot_cost();
  return j;
}

Circuit circuit_from_json(const json& j) {
  Circuit c;
  c.n = j.at("n").get<int>();
  for (const auto& jg : j.at("gates")) {
    Gate g;
    g.kind = gate_kind_from_name(jg.at("kind").get<std::string>());
    g.targets = jg.at("targets").get<std::vector<int>>();
    if (jg.contains("params")) {
      g.a = jg.at("params").at(0).get<double>();
      g.b = jg.at("params").at(1).get<double>();
    }
    g.transposed = jg.value("transposed", false);
    c.gates.push_back(g);
  }
  return c;
}

json spectrum_to_json(const SpectrumReport& r) {
  json j;
  j["top_eigenvalue"] = r.top_eigenvalue;
  j["degeneracy"] = r.degeneracy;
  j["overlap"] = r.overlap;
  j["residual"] = r.residual;
  if (!r.flags.empty()) j["flags"] = r.flags;
  return j;
}

json noisefit_to_json(const NoiseFit& f) {
  json j;
  j["means"] = f.means;
  j["amplitude"] = f.amplitude;
  j["decay"] = f.decay;
  j["floor"] = f.floor;
  j["residual"] = f.residual;
  j["converged"] = f.converged;
  j["fitted"] = f.fitted;
  return j;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

Hypergraph load_hypergraph(const std::string& path) {
  return hypergraph_from_json(load_json(path));
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

std::string format_fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
  return std::string(buf);
}

}  // namespace exst
