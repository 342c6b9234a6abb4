#include "exst/state.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace exst {

double SparseState::norm2() const {
  double s = 0.0;
  for (const auto& [label, amp] : amps) s += std::norm(amp);
  return s;
}

SparseState& SparseState::normalize() {
  double nrm = std::sqrt(norm2());
  if (nrm <= 0.0) throw std::runtime_error("cannot normalize a zero state");
  for (auto& [label, amp] : amps) amp /= nrm;
  prune();
  return *this;
}

void SparseState::prune(double eps) {
  for (auto it = amps.begin(); it != amps.end();) {
    if (std::abs(it->second) < eps)
      it = amps.erase(it);
    else
      ++it;
  }
}

uint64_t SparseState::pack(const std::vector<int>& digits) const {
  uint64_t label = 0;
  for (int d : digits) {
    if (d < 0 || d >= local_dim) throw std::invalid_argument("digit out of range");
    label = label * static_cast<uint64_t>(local_dim) + static_cast<uint64_t>(d);
  }
  return label;
}

std::vector<int> SparseState::unpack(uint64_t label) const {
  std::vector<int> digits(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(label % local_dim);
    label /= local_dim;
  }
  return digits;
}

std::string SparseState::label_string(uint64_t label) const {
  std::string s;
  for (int d : unpack(label)) {
    if (local_dim <= 10) {
      s.push_back(static_cast<char>('0' + d));
    } else {
      if (!s.empty()) s.push_back('.');
      s += std::to_string(d);
    }
  }
  return s;
}

uint64_t SparseState::label_from_string(const std::string& s) const {
  if (static_cast<int>(s.size()) != n) throw std::invalid_argument("label length mismatch: " + s);
  std::vector<int> digits;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad label: " + s);
    digits.push_back(c - '0');
  }
  return pack(digits);
}

SparseState excitation_state(const Hypergraph& g) {
  if (g.edges.empty()) throw std::invalid_argument("excitation state needs at least one edge");
  SparseState s;
  s.n = g.n;
  s.local_dim = 2;
  double amp = 1.0 / std::sqrt(static_cast<double>(g.edges.size()));
  for (const auto& e : g.edges) {
    std::vector<int> digits(g.n, 0);
    for (int v : e) digits[v] = 1;
    s.amps[s.pack(digits)] = amp;
  }
  return s;
}

SparseState permute_state(const SparseState& s, const Permutation& sigma) {
  if (sigma.size() != s.n) throw std::invalid_argument("permutation size mismatch");
  SparseState out;
  out.n = s.n;
  out.local_dim = s.local_dim;
  for (const auto& [label, amp] : s.amps) {
    std::vector<int> digits = s.unpack(label);
    std::vector<int> moved(s.n);
    for (int i = 0; i < s.n; ++i) moved[sigma(i)] = digits[i];
    out.amps[out.pack(moved)] += amp;
  }
  out.prune();
  return out;
}

double DensityMatrix::trace_real() const {
  double t = 0.0;
  for (int i = 0; i < dim; ++i) t += at(i, i).real();
  return t;
}

bool DensityMatrix::is_hermitian(double tol) const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j <= i; ++j)
      if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
  return true;
}

DensityMatrix reduced_density(const SparseState& s, const std::vector<int>& subset) {
  if (subset.empty()) throw std::invalid_argument("subset must be nonempty");
  std::vector<char> seen(s.n, 0);
  for (int v : subset) {
    if (v < 0 || v >= s.n) throw std::invalid_argument("subset vertex out of range");
    if (seen[v]++) throw std::invalid_argument("subset vertices must be distinct");
  }
  double dim_d = std::pow(static_cast<double>(s.local_dim), static_cast<double>(subset.size()));
  if (dim_d > 4096.0) throw std::invalid_argument("reduction dimension budget exceeded (2^12)");
  int dim = static_cast<int>(dim_d + 0.5);

  // Group support by the complement label, then accumulate outer products.
  std::map<std::vector<int>, std::vector<std::pair<int, cplx>>> groups;
  for (const auto& [label, amp] : s.amps) {
    std::vector<int> digits = s.unpack(label);
    int sub = 0;
    for (int v : subset) sub = sub * s.local_dim + digits[v];
    std::vector<int> rest;
    rest.reserve(s.n - subset.size());
    for (int v = 0; v < s.n; ++v)
      if (!std::count(subset.begin(), subset.end(), v)) rest.push_back(digits[v]);
    groups[rest].emplace_back(sub, amp);
  }
  DensityMatrix rho;
  rho.dim = dim;
  rho.a.assign(static_cast<size_t>(dim) * dim, cplx{0.0, 0.0});
  for (const auto& [rest, members] : groups)
    for (const auto& [i, ai] : members)
      for (const auto& [j, aj] : members) rho.at(i, j) += ai * std::conj(aj);
  return rho;
}

DensityMatrix reduced_2q_closed_form(const Hypergraph& g, int v, int w) {
  if (v == w) throw std::invalid_argument("closed form requires distinct vertices");
  if (!g.uniformity) throw std::invalid_argument("closed form requires a uniform hypergraph");
  VertexPairStats st = pair_stats(g, v, w);
  double e = static_cast<double>(st.edge_count);
  double lambda = e - st.degree_v - st.degree_w + st.section;
  DensityMatrix rho;
  rho.dim = 4;
  rho.a.assign(16, cplx{0.0, 0.0});
  rho.at(0, 0) = lambda / e;
  rho.at(1, 1) = (st.degree_w - st.section) / e;
  rho.at(2, 2) = (st.degree_v - st.section) / e;
  rho.at(3, 3) = st.section / e;
  rho.at(1, 2) = st.joint_neighborhood / e;
  rho.at(2, 1) = st.joint_neighborhood / e;
  return rho;
}

double fidelity(const SparseState& a, const SparseState& b) {
  if (a.n != b.n || a.local_dim != b.local_dim) throw std::invalid_argument("state shape mismatch");
  cplx ov{0.0, 0.0};
  for (const auto& [label, amp] : a.amps) {
    auto it = b.amps.find(label);
    if (it != b.amps.end()) ov += std::conj(amp) * it->second;
  }
  return std::norm(ov);
}

bool separability_check(const SparseState& s, const std::vector<std::vector<int>>& partition,
                        double tol) {
  std::vector<char> covered(s.n, 0);
  for (const auto& block : partition)
    for (int v : block) {
      if (v < 0 || v >= s.n || covered[v]) throw std::invalid_argument("partition must cover each vertex once");
      covered[v] = 1;
    }
  if (!std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; }))
    throw std::invalid_argument("partition must cover all vertices");
  if (s.amps.empty()) return false;

  // Candidate factors read off against a reference support element, then
  // the product is compared amplitude by amplitude.
  auto ref_it = std::max_element(s.amps.begin(), s.amps.end(), [](const auto& x, const auto& y) {
    return std::abs(x.second) < std::abs(y.second);
  });
  std::vector<int> ref = s.unpack(ref_it->first);
  cplx ref_amp = ref_it->second;

  // factor_B(x_B) = psi(x_B, ref_rest) -- unnormalized.
  std::vector<std::map<std::vector<int>, cplx>> factors(partition.size());
  for (const auto& [label, amp] : s.amps) {
    std::vector<int> digits = s.unpack(label);
    for (size_t b = 0; b < partition.size(); ++b) {
      bool rest_matches = true;
      for (int v = 0; v < s.n; ++v) {
        if (std::count(partition[b].begin(), partition[b].end(), v)) continue;
        if (digits[v] != ref[v]) {
          rest_matches = false;
          break;
        }
      }
      if (rest_matches) {
        std::vector<int> key;
        for (int v : partition[b]) key.push_back(digits[v]);
        factors[b][key] = amp;
      }
    }
  }

  // psi(x) * ref_amp^(m-1) must equal the product of factor values.
  double scale = std::abs(ref_amp);
  for (const auto& [label, amp] : s.amps) {
    std::vector<int> digits = s.unpack(label);
    cplx prod{1.0, 0.0};
    for (size_t b = 0; b < partition.size(); ++b) {
      std::vector<int> key;
      for (int v : partition[b]) key.push_back(digits[v]);
      auto it = factors[b].find(key);
      if (it == factors[b].end()) return false;
      prod *= it->second;
    }
    cplx lhs = amp * std::pow(ref_amp, static_cast<double>(partition.size() - 1));
    if (std::abs(lhs - prod) > tol * std::max(1.0, scale)) return false;
  }
  // Product support must not exceed the state's support.
  size_t prod_support = 1;
  for (const auto& f : factors) prod_support *= f.size();
  return prod_support == s.amps.size();
}

}  // namespace exst
