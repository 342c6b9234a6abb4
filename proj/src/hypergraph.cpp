#include "exst/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace exst {

Hypergraph validate(int n, const std::vector<std::vector<int>>& raw_edges,
                    std::vector<std::string>* warnings) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  std::set<std::vector<int>> canon;
  for (const auto& raw : raw_edges) {
    if (raw.empty()) throw std::invalid_argument("empty edge");
    std::vector<int> e = raw;
    std::sort(e.begin(), e.end());
    for (int v : e)
      if (v < 0 || v >= n) throw std::invalid_argument("vertex index out of range: " + std::to_string(v));
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("repeated vertex inside an edge");
    if (!canon.insert(e).second && warnings) warnings->push_back("duplicate edge dropped");
  }
  Hypergraph g;
  g.n = n;
  g.edges.assign(canon.begin(), canon.end());
  if (!g.edges.empty()) {
    size_t k = g.edges.front().size();
    bool uniform = std::all_of(g.edges.begin(), g.edges.end(),
                               [&](const auto& e) { return e.size() == k; });
    if (uniform) g.uniformity = static_cast<int>(k);
  }
  return g;
}

static void check_vertex(const Hypergraph& g, int v) {
  if (v < 0 || v >= g.n) throw std::invalid_argument("vertex index out of range");
}

int degree(const Hypergraph& g, int v) {
  check_vertex(g, v);
  int d = 0;
  for (const auto& e : g.edges)
    if (std::binary_search(e.begin(), e.end(), v)) ++d;
  return d;
}

int section(const Hypergraph& g, int v, int w) {
  check_vertex(g, v);
  check_vertex(g, w);
  if (v == w) throw std::invalid_argument("section requires distinct vertices");
  int s = 0;
  for (const auto& e : g.edges)
    if (std::binary_search(e.begin(), e.end(), v) && std::binary_search(e.begin(), e.end(), w)) ++s;
  return s;
}

int joint_neighborhood(const Hypergraph& g, int v, int w) {
  check_vertex(g, v);
  check_vertex(g, w);
  if (v == w) throw std::invalid_argument("joint neighborhood requires distinct vertices");
  // Count sets W, disjoint from {v,w}, with W+v and W+w both edges.
  std::set<std::vector<int>> with_v;
  for (const auto& e : g.edges) {
    if (!std::binary_search(e.begin(), e.end(), v)) continue;
    if (std::binary_search(e.begin(), e.end(), w)) continue;
    std::vector<int> rest;
    for (int x : e)
      if (x != v) rest.push_back(x);
    with_v.insert(rest);
  }
  int count = 0;
  for (const auto& e : g.edges) {
    if (!std::binary_search(e.begin(), e.end(), w)) continue;
    if (std::binary_search(e.begin(), e.end(), v)) continue;
    std::vector<int> rest;
    for (int x : e)
      if (x != w) rest.push_back(x);
    if (with_v.count(rest)) ++count;
  }
  return count;
}

std::vector<std::vector<int>> adjacency(const Hypergraph& g) {
  std::vector<std::set<int>> adj(g.n);
  for (const auto& e : g.edges)
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j) {
        adj[e[i]].insert(e[j]);
        adj[e[j]].insert(e[i]);
      }
  std::vector<std::vector<int>> out(g.n);
  for (int v = 0; v < g.n; ++v) out[v].assign(adj[v].begin(), adj[v].end());
  return out;
}

int distance(const Hypergraph& g, int v, int w) {
  check_vertex(g, v);
  check_vertex(g, w);
  if (v == w) throw std::invalid_argument("distance requires distinct vertices");
  auto adj = adjacency(g);
  std::vector<int> dist(g.n, -1);
  dist[v] = 0;
  std::deque<int> q{v};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (x == w) return dist[x];
    for (int y : adj[x])
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
  }
  return kInfiniteDistance;
}

VertexPairStats pair_stats(const Hypergraph& g, int v, int w) {
  VertexPairStats st;
  st.degree_v = degree(g, v);
  st.degree_w = degree(g, w);
  st.section = section(g, v, w);
  st.joint_neighborhood = joint_neighborhood(g, v, w);
  st.distance = distance(g, v, w);
  st.edge_count = g.edge_count();
  return st;
}

HypergraphPredicates predicates(const Hypergraph& g) {
  HypergraphPredicates p;
  p.k_uniform = g.uniformity.has_value();

  auto adj = adjacency(g);
  std::vector<char> seen(g.n, 0);
  if (g.n > 0) {
    std::deque<int> q{0};
    seen[0] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          q.push_back(y);
        }
    }
    p.connected = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  }

  p.regular = true;
  int d0 = g.n > 0 ? degree(g, 0) : 0;
  for (int v = 1; v < g.n; ++v)
    if (degree(g, v) != d0) {
      p.regular = false;
      break;
    }

  p.distance1_regular = p.regular;
  if (p.regular) {
    int s = -1;
    for (int v = 0; v < g.n && p.distance1_regular; ++v)
      for (int w : adj[v]) {
        if (w <= v) continue;
        int svw = section(g, v, w);
        if (s < 0) s = svw;
        if (svw != s || svw == 0) {
          p.distance1_regular = false;
          break;
        }
      }
  }
  return p;
}

namespace {

// Edge set restricted to a vertex block, as a set of sorted traces.
std::set<std::vector<int>> edge_traces(const Hypergraph& g, const std::vector<int>& block) {
  std::set<int> bs(block.begin(), block.end());
  std::set<std::vector<int>> traces;
  for (const auto& e : g.edges) {
    std::vector<int> t;
    for (int v : e)
      if (bs.count(v)) t.push_back(v);
    traces.insert(t);
  }
  return traces;
}

// True when E = {t1 ∪ t2 : t1 ∈ traces(V1), t2 ∈ traces(V2)} and the
// per-block excitation count is constant.
bool splits_as_product(const Hypergraph& g, const std::vector<int>& v1, const std::vector<int>& v2) {
  std::set<int> s1(v1.begin(), v1.end());
  size_t c1 = std::string::npos;
  for (const auto& e : g.edges) {
    size_t in1 = 0;
    for (int v : e)
      if (s1.count(v)) ++in1;
    if (c1 == std::string::npos) c1 = in1;
    if (in1 != c1) return false;
    if (in1 == e.size()) return false;  // an edge must meet both sides
  }
  if (c1 == 0) return false;
  auto t1 = edge_traces(g, v1);
  auto t2 = edge_traces(g, v2);
  if (t1.size() * t2.size() != g.edges.size()) return false;
  std::set<std::vector<int>> rebuilt;
  for (const auto& a : t1)
    for (const auto& b : t2) {
      std::vector<int> u;
      u.reserve(a.size() + b.size());
      std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
      rebuilt.insert(u);
    }
  std::set<std::vector<int>> orig(g.edges.begin(), g.edges.end());
  return rebuilt == orig;
}

Hypergraph induced(const Hypergraph& g, const std::vector<int>& block) {
  std::map<int, int> relabel;
  for (size_t i = 0; i < block.size(); ++i) relabel[block[i]] = static_cast<int>(i);
  std::set<std::vector<int>> traces = edge_traces(g, block);
  std::vector<std::vector<int>> edges;
  for (const auto& t : traces) {
    if (t.empty()) continue;
    std::vector<int> e;
    for (int v : t) e.push_back(relabel[v]);
    edges.push_back(e);
  }
  return validate(static_cast<int>(block.size()), edges);
}

void decompose_rec(const Hypergraph& g, const std::vector<int>& labels,
                   std::vector<std::vector<int>>& out) {
  int n = g.n;
  if (n >= 2 && n <= 20 && !g.edges.empty()) {
    // Binary splits with vertex 0 pinned to the first block.
    for (uint64_t m = 1; m < (uint64_t{1} << (n - 1)); ++m) {
      uint64_t mask = (m << 1) | 1;
      std::vector<int> v1, v2;
      for (int v = 0; v < n; ++v) ((mask >> v) & 1 ? v1 : v2).push_back(v);
      if (v2.empty()) continue;
      if (splits_as_product(g, v1, v2)) {
        std::vector<int> l1, l2;
        for (int v : v1) l1.push_back(labels[v]);
        for (int v : v2) l2.push_back(labels[v]);
        decompose_rec(induced(g, v1), l1, out);
        decompose_rec(induced(g, v2), l2, out);
        return;
      }
    }
  }
  out.push_back(labels);
}

}  // namespace

std::optional<std::vector<std::vector<int>>> product_decompose(const Hypergraph& g) {
  if (g.n < 2 || g.edges.empty()) return std::nullopt;
  std::vector<int> labels(g.n);
  for (int v = 0; v < g.n; ++v) labels[v] = v;
  std::vector<std::vector<int>> parts;
  decompose_rec(g, labels, parts);
  if (parts.size() <= 1) return std::nullopt;
  std::sort(parts.begin(), parts.end());
  return parts;
}

MultipartiteResult is_complete_multipartite(const Hypergraph& g) {
  MultipartiteResult r;
  if (!g.uniformity) throw std::invalid_argument("complete multipartite test needs a uniform hypergraph");
  int k = *g.uniformity;
  // Classes: u ~ v iff never co-edged. Must be an equivalence for the
  // complete multipartite structure.
  std::vector<int> cls(g.n, -1);
  int nc = 0;
  for (int v = 0; v < g.n; ++v) {
    if (cls[v] >= 0) continue;
    cls[v] = nc;
    for (int w = v + 1; w < g.n; ++w)
      if (cls[w] < 0 && section(g, v, w) == 0) cls[w] = nc;
    ++nc;
  }
  // Equivalence check: same class => never co-edged; different => co-edged.
  for (int v = 0; v < g.n; ++v)
    for (int w = v + 1; w < g.n; ++w) {
      bool co = section(g, v, w) > 0;
      if ((cls[v] == cls[w]) == co) return r;
    }
  if (nc != k) {
    if (nc == g.n) {
      // Singleton classes: complete k-uniform graph, trivially multipartite.
      r.found = true;
      r.trivial = true;
      for (int v = 0; v < g.n; ++v) r.partition.push_back({v});
    }
    return r;
  }
  std::vector<std::vector<int>> part(nc);
  for (int v = 0; v < g.n; ++v) part[cls[v]].push_back(v);
  // Every transversal must be an edge.
  uint64_t expect = 1;
  for (const auto& p : part) expect *= p.size();
  if (expect != g.edges.size()) return r;
  for (const auto& e : g.edges) {
    std::set<int> hit;
    for (int v : e) hit.insert(cls[v]);
    if (static_cast<int>(hit.size()) != k) return r;
  }
  r.found = true;
  std::sort(part.begin(), part.end());
  r.partition = part;
  return r;
}

namespace {

struct AutSearch {
  const Hypergraph& g;
  std::set<std::vector<int>> edge_set;
  std::vector<int> deg;
  std::vector<std::multiset<int>> sizes;  // per-vertex incident-edge sizes
  std::vector<Permutation> found;

  explicit AutSearch(const Hypergraph& gg) : g(gg) {
    edge_set.insert(g.edges.begin(), g.edges.end());
    deg.resize(g.n);
    sizes.resize(g.n);
    for (const auto& e : g.edges)
      for (int v : e) {
        ++deg[v];
        sizes[v].insert(static_cast<int>(e.size()));
      }
  }

  bool image_consistent(const std::vector<int>& img, int placed) const {
    // All edges fully inside the placed prefix must map to edges.
    for (const auto& e : g.edges) {
      std::vector<int> m;
      bool full = true;
      for (int v : e) {
        if (v < placed)
          m.push_back(img[v]);
        else {
          full = false;
          break;
        }
      }
      if (!full) continue;
      std::sort(m.begin(), m.end());
      if (!edge_set.count(m)) return false;
    }
    return true;
  }

  void rec(std::vector<int>& img, std::vector<char>& used, int placed) {
    if (placed == g.n) {
      Permutation p;
      p.image = img;
      found.push_back(p);
      return;
    }
    for (int t = 0; t < g.n; ++t) {
      if (used[t]) continue;
      if (deg[t] != deg[placed] || sizes[t] != sizes[placed]) continue;
      img[placed] = t;
      used[t] = 1;
      if (image_consistent(img, placed + 1)) rec(img, used, placed + 1);
      used[t] = 0;
    }
  }
};

}  // namespace

PermutationGroup automorphism_group(const Hypergraph& g, int max_n) {
  if (g.n > max_n) throw std::runtime_error("automorphism search budget exceeded (n > " +
                                            std::to_string(max_n) + ")");
  AutSearch search(g);
  std::vector<int> img(g.n, -1);
  std::vector<char> used(g.n, 0);
  search.rec(img, used, 0);
  PermutationGroup grp;
  grp.n = g.n;
  grp.generators = search.found;  // explicit element list doubles as generators
  return grp;
}

bool is_edge_transitive(const Hypergraph& g, int max_n) {
  if (g.edges.empty()) return true;
  auto aut = automorphism_group(g, max_n);
  std::set<std::vector<int>> orbit;
  orbit.insert(g.edges.front());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(orbit.begin(), orbit.end());
    for (const auto& e : cur)
      for (const auto& p : aut.generators) {
        std::vector<int> m;
        for (int v : e) m.push_back(p(v));
        std::sort(m.begin(), m.end());
        if (orbit.insert(m).second) grew = true;
      }
  }
  return orbit.size() == g.edges.size();
}

}  // namespace exst
