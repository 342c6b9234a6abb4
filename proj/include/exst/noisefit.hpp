#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace exst {

struct CountsHistogram {
  int n = 0;
  std::map<std::string, uint64_t> counts;

  uint64_t total() const;
};

struct NoiseFit {
  std::vector<double> means;   // stratum means actually fitted
  double amplitude = 0.0;      // alpha
  double decay = 0.0;          // beta
  double floor = 0.0;          // gamma
  double residual = 0.0;       // sum of squared deviations
  bool converged = true;
  std::vector<double> fitted;  // model values at k = 0..means-1
};

/// Weight-2 strings whose excitations sit on cyclically adjacent positions.
std::set<std::string> signal_set(int n);

/// Noise strata N_0..N_n: weight-k strings minus the signal set.
std::vector<std::set<std::string>> noise_strata(int n);

/// Mean probability per stratum; absent (nullopt) for empty strata.
std::vector<std::optional<double>> stratum_means(const CountsHistogram& h);

double signal_probability(const CountsHistogram& h);

/// Least squares fit of mean_k ~ alpha exp(-beta k) + gamma, parameters
/// nonnegative; grid initialization plus Gauss-Newton refinement.
NoiseFit fit_noise_model(const std::vector<double>& means);

/// Accepts {"counts": {...}} or flat {"bits": count} JSON, or CSV lines
/// "bitstring,count". reverse_bits flips the qubit order on ingestion.
CountsHistogram load_counts(const std::string& path, bool reverse_bits = false);

}  // namespace exst
