#include "arith/graph.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace arith {

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::path: return "path";
    case GraphKind::cycle: return "cycle";
    case GraphKind::star: return "star";
    case GraphKind::general: return "general";
  }
  throw std::logic_error("unknown graph kind");
}

GraphKind graph_kind_from_string(const std::string& name) {
  if (name == "path") return GraphKind::path;
  if (name == "cycle") return GraphKind::cycle;
  if (name == "star") return GraphKind::star;
  if (name == "general") return GraphKind::general;
  throw std::invalid_argument("unknown graph kind: '" + name + "'");
}

Graph::Graph(GraphKind kind, std::vector<std::vector<long>> adj)
    : kind_(kind), n_(static_cast<long>(adj.size())), adj_(std::move(adj)) {
  if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (long i = 0; i < n_; ++i) {
    if (static_cast<long>(adj_[i].size()) != n_) {
      throw std::invalid_argument("adjacency matrix is not square");
    }
    if (adj_[i][i] != 0) {
      throw std::invalid_argument("loops are not supported (vertex " +
                                  std::to_string(i + 1) + ")");
    }
    for (long j = 0; j < n_; ++j) {
      if (adj_[i][j] < 0) throw std::invalid_argument("negative edge multiplicity");
      if (adj_[i][j] != adj_[j][i]) {
        throw std::invalid_argument("adjacency matrix is not symmetric");
      }
    }
  }

  nbrs_.resize(n_);
  for (long i = 0; i < n_; ++i) {
    for (long j = 0; j < n_; ++j) {
      if (adj_[i][j] > 0) nbrs_[i].emplace_back(j, adj_[i][j]);
    }
  }

  // Connectivity by BFS from vertex 0.
  if (n_ > 1) {
    std::vector<char> seen(n_, 0);
    std::vector<long> queue{0};
    seen[0] = 1;
    long reached = 1;
    while (!queue.empty()) {
      long v = queue.back();
      queue.pop_back();
      for (auto [w, mult] : nbrs_[v]) {
        (void)mult;
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          queue.push_back(w);
        }
      }
    }
    if (reached != n_) throw std::invalid_argument("graph is not connected");
  }
}

Graph Graph::path(long n) {
  if (n < 2) throw std::invalid_argument("path needs n >= 2");
  std::vector<std::vector<long>> adj(n, std::vector<long>(n, 0));
  for (long i = 0; i + 1 < n; ++i) adj[i][i + 1] = adj[i + 1][i] = 1;
  return Graph(GraphKind::path, std::move(adj));
}

Graph Graph::cycle(long n) {
  if (n < 2) throw std::invalid_argument("cycle needs n >= 2");
  std::vector<std::vector<long>> adj(n, std::vector<long>(n, 0));
  if (n == 2) {
    adj[0][1] = adj[1][0] = 2;
  } else {
    for (long i = 0; i + 1 < n; ++i) adj[i][i + 1] = adj[i + 1][i] = 1;
    adj[0][n - 1] = adj[n - 1][0] = 1;
  }
  return Graph(GraphKind::cycle, std::move(adj));
}

Graph Graph::star(long leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  long n = leaves + 1;
  std::vector<std::vector<long>> adj(n, std::vector<long>(n, 0));
  for (long i = 1; i < n; ++i) adj[0][i] = adj[i][0] = 1;
  return Graph(GraphKind::star, std::move(adj));
}

Graph Graph::general(std::vector<std::vector<long>> adjacency) {
  return Graph(GraphKind::general, std::move(adjacency));
}

long Graph::multiplicity(long u, long v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) {
    throw std::out_of_range("vertex index out of range");
  }
  return adj_[u - 1][v - 1];
}

long Graph::degree(long v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex index out of range");
  long sum = 0;
  for (auto [w, mult] : nbrs_[v - 1]) {
    (void)w;
    sum += mult;
  }
  return sum;
}

Graph make_graph(GraphKind kind, long n) {
  switch (kind) {
    case GraphKind::path: return Graph::path(n);
    case GraphKind::cycle: return Graph::cycle(n);
    case GraphKind::star: return Graph::star(n);
    case GraphKind::general:
      throw std::invalid_argument("general graphs need an explicit adjacency matrix");
  }
  throw std::logic_error("unknown graph kind");
}

namespace {

GraphPtr cached(GraphKind kind, long n) {
  static std::mutex mutex;
  static std::map<std::pair<GraphKind, long>, GraphPtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(kind, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto g = std::make_shared<const Graph>(make_graph(kind, n));
  cache.emplace(key, g);
  return g;
}

}  // namespace

GraphPtr shared_path(long n) { return cached(GraphKind::path, n); }
GraphPtr shared_cycle(long n) { return cached(GraphKind::cycle, n); }
GraphPtr shared_star(long leaves) { return cached(GraphKind::star, leaves); }

GraphPtr shared_graph(GraphKind kind, long n) {
  if (kind == GraphKind::general) {
    throw std::invalid_argument("general graphs are not cached");
  }
  return cached(kind, n);
}

}  // namespace arith
