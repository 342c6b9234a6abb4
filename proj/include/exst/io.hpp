#pragma once

#include <string>

#include <json.hpp>

#include "exst/circuit.hpp"
#include "exst/hamiltonian.hpp"
#include "exst/hypergraph.hpp"
#include "exst/noisefit.hpp"
#include "exst/perm.hpp"
#include "exst/state.hpp"

namespace exst {

nlohmann::json hypergraph_to_json(const Hypergraph& g);
Hypergraph hypergraph_from_json(const nlohmann::json& j,
                                std::vector<std::string>* warnings = nullptr);

nlohmann::json state_to_json(const SparseState& s);
SparseState state_from_json(const nlohmann::json& j);

nlohmann::json group_to_json(const PermutationGroup& g);
PermutationGroup group_from_json(const nlohmann::json& j);

nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

nlohmann::json spectrum_to_json(const SpectrumReport& r);
nlohmann::json noisefit_to_json(const NoiseFit& f);

Hypergraph load_hypergraph(const std::string& path);
nlohmann::json load_json(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

std::string format_fixed(double x, int decimals = 6);

}  // namespace exst
