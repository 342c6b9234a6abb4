#include "exst/noisefit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace exst {

uint64_t CountsHistogram::total() const {
  uint64_t t = 0;
  for (const auto& [bits, c] : counts) t += c;
  return t;
}

std::set<std::string> signal_set(int n) {
  if (n < 3) throw std::invalid_argument("signal set needs n >= 3");
  std::set<std::string> s;
  for (int i = 0; i < n; ++i) {
    std::string bits(n, '0');
    bits[i] = '1';
    bits[(i + 1) % n] = '1';
    s.insert(bits);
  }
  return s;
}

std::vector<std::set<std::string>> noise_strata(int n) {
  auto sig = signal_set(n);
  std::vector<std::set<std::string>> strata(n + 1);
  for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
    std::string bits(n, '0');
    int w = 0;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) {
        bits[i] = '1';
        ++w;
      }
    if (!sig.count(bits)) strata[w].insert(bits);
  }
  return strata;
}

std::vector<std::optional<double>> stratum_means(const CountsHistogram& h) {
  auto strata = noise_strata(h.n);
  double total = static_cast<double>(h.total());
  if (total <= 0.0) throw std::invalid_argument("histogram has no counts");
  std::vector<std::optional<double>> means;
  for (const auto& stratum : strata) {
    if (stratum.empty()) {
      means.push_back(std::nullopt);
      continue;
    }
    double sum = 0.0;
    for (const auto& bits : stratum) {
      auto it = h.counts.find(bits);
      if (it != h.counts.end()) sum += static_cast<double>(it->second);
    }
    means.push_back(sum / total / static_cast<double>(stratum.size()));
  }
  return means;
}

double signal_probability(const CountsHistogram& h) {
  double total = static_cast<double>(h.total());
  if (total <= 0.0) throw std::invalid_argument("histogram has no counts");
  double sum = 0.0;
  for (const auto& bits : signal_set(h.n)) {
    auto it = h.counts.find(bits);
    if (it != h.counts.end()) sum += static_cast<double>(it->second);
  }
  return sum / total;
}

namespace {

// Linear LSQ for (alpha, gamma) at fixed beta, clamped to >= 0.
void linear_fit(const std::vector<double>& y, double beta, double& alpha, double& gamma) {
  const int m = static_cast<int>(y.size());
  double see = 0, se1 = 0, s11 = 0, sey = 0, s1y = 0;
  for (int k = 0; k < m; ++k) {
    double e = std::exp(-beta * k);
    see += e * e;
    se1 += e;
    s11 += 1.0;
    sey += e * y[k];
    s1y += y[k];
  }
  double det = see * s11 - se1 * se1;
  if (std::abs(det) < 1e-14) {
    alpha = 0.0;
    gamma = s1y / s11;
  } else {
    alpha = (sey * s11 - se1 * s1y) / det;
    gamma = (see * s1y - se1 * sey) / det;
  }
  if (alpha < 0.0) {
    alpha = 0.0;
    gamma = s1y / s11;
  }
  if (gamma < 0.0) {
    gamma = 0.0;
    alpha = std::max(0.0, sey / see);
  }
}

double sse(const std::vector<double>& y, double a, double b, double c) {
  double s = 0.0;
  for (size_t k = 0; k < y.size(); ++k) {
    double d = y[k] - (a * std::exp(-b * k) + c);
    s += d * d;
  }
  return s;
}

}  // namespace

NoiseFit fit_noise_model(const std::vector<double>& means) {
  if (means.size() < 3) throw std::invalid_argument("fit needs at least three stratum means");
  NoiseFit fit;
  fit.means = means;

  double best = 1e300;
  double ba = 0, bb = 0, bc = 0;
  for (int i = 0; i <= 400; ++i) {
    double beta = 10.0 * i / 400.0;
    double a, c;
    linear_fit(means, beta, a, c);
    double s = sse(means, a, beta, c);
    if (s < best) {
      best = s;
      ba = a;
      bb = beta;
      bc = c;
    }
  }

  // Gauss-Newton refinement on (alpha, beta, gamma), projected nonnegative.
  double a = ba, b = bb, c = bc;
  bool converged = false;
  for (int iter = 0; iter < 200; ++iter) {
    double j[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    double g[3] = {0, 0, 0};
    for (size_t k = 0; k < means.size(); ++k) {
      double e = std::exp(-b * k);
      double r = means[k] - (a * e + c);
      double dr[3] = {e, -a * k * e, 1.0};  // d(model)/d(param)
      for (int p = 0; p < 3; ++p) {
        g[p] += r * dr[p];
        for (int q = 0; q < 3; ++q) j[p][q] += dr[p] * dr[q];
      }
    }
    for (int p = 0; p < 3; ++p) j[p][p] += 1e-12;
    // solve 3x3 j * step = g
    double m[3][4];
    for (int p = 0; p < 3; ++p) {
      for (int q = 0; q < 3; ++q) m[p][q] = j[p][q];
      m[p][3] = g[p];
    }
    for (int p = 0; p < 3; ++p) {
      int piv = p;
      for (int q = p + 1; q < 3; ++q)
        if (std::abs(m[q][p]) > std::abs(m[piv][p])) piv = q;
      std::swap(m[p], m[piv]);
      if (std::abs(m[p][p]) < 1e-300) continue;
      for (int q = p + 1; q < 3; ++q) {
        double f = m[q][p] / m[p][p];
        for (int r2 = p; r2 < 4; ++r2) m[q][r2] -= f * m[p][r2];
      }
    }
    double step[3] = {0, 0, 0};
    for (int p = 2; p >= 0; --p) {
      double s = m[p][3];
      for (int q = p + 1; q < 3; ++q) s -= m[p][q] * step[q];
      step[p] = (std::abs(m[p][p]) < 1e-300) ? 0.0 : s / m[p][p];
    }
    double na = std::max(0.0, a + step[0]);
    double nb = std::max(0.0, b + step[1]);
    double nc = std::max(0.0, c + step[2]);
    if (sse(means, na, nb, nc) <= sse(means, a, b, c) + 1e-18) {
      double delta = std::abs(na - a) + std::abs(nb - b) + std::abs(nc - c);
      a = na;
      b = nb;
      c = nc;
      if (delta < 1e-12) {
        converged = true;
        break;
      }
    } else {
      converged = true;  // at a (possibly constrained) minimum
      break;
    }
  }

  fit.amplitude = a;
  fit.decay = b;
  fit.floor = c;
  fit.residual = sse(means, a, b, c);
  fit.converged = converged || fit.residual <= best + 1e-18;
  for (size_t k = 0; k < means.size(); ++k) fit.fitted.push_back(a * std::exp(-b * k) + c);
  return fit;
}

CountsHistogram load_counts(const std::string& path, bool reverse_bits) {
  CountsHistogram h;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open counts file: " + path);
  std::map<std::string, uint64_t> raw;
  if (path.size() > 4 && path.substr(path.size() - 4) == ".csv") {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      auto comma = line.find(',');
      if (comma == std::string::npos) throw std::runtime_error("bad counts CSV line: " + line);
      std::string bits = line.substr(0, comma);
      raw[bits] += std::stoull(line.substr(comma + 1));
    }
  } else {
    nlohmann::json j;
    in >> j;
    const nlohmann::json& obj = j.contains("counts") ? j.at("counts") : j;
    for (auto it = obj.begin(); it != obj.end(); ++it)
      raw[it.key()] += it.value().get<uint64_t>();
  }
  if (raw.empty()) throw std::runtime_error("counts file is empty: " + path);
  h.n = static_cast<int>(raw.begin()->first.size());
  for (const auto& [bits, count] : raw) {
    if (static_cast<int>(bits.size()) != h.n)
      throw std::runtime_error("inconsistent bitstring length: " + bits);
    for (char ch : bits)
      if (ch != '0' && ch != '1') throw std::runtime_error("bad bitstring: " + bits);
    std::string key = bits;
    if (reverse_bits) std::reverse(key.begin(), key.end());
    h.counts[key] += count;
  }
  return h;
}

}  // namespace exst
