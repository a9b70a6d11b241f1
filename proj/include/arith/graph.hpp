#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace arith {

enum class GraphKind { path, cycle, star, general };

std::string to_string(GraphKind kind);
GraphKind graph_kind_from_string(const std::string& name);

/// Undirected multigraph with nonnegative integer edge multiplicities and
/// vertices labeled 1..n at the API boundary. Loops are rejected and
/// connectivity is checked at construction; instances are immutable.
class Graph {
 public:
  static Graph path(long n);       // n >= 2
  static Graph cycle(long n);      // n >= 2; cycle(2) carries a double edge
  static Graph star(long leaves);  // leaves >= 1; center is vertex 1
  static Graph general(std::vector<std::vector<long>> adjacency);

  long size() const { return n_; }
  GraphKind kind() const { return kind_; }

  /// Edge multiplicity between vertices u and v (1-based).
  long multiplicity(long u, long v) const;

  /// Degree of vertex v (1-based), counting multiplicities.
  long degree(long v) const;

  /// Dense adjacency storage, row-major, 0-based.
  const std::vector<std::vector<long>>& adjacency() const { return adj_; }

  /// 0-based (neighbor, multiplicity) lists, for fast neighbor sums.
  const std::vector<std::vector<std::pair<long, long>>>& neighbor_lists() const {
    return nbrs_;
  }

  bool operator==(const Graph& other) const {
    return kind_ == other.kind_ && adj_ == other.adj_;
  }

 private:
  Graph(GraphKind kind, std::vector<std::vector<long>> adj);

  GraphKind kind_;
  long n_;
  std::vector<std::vector<long>> adj_;
  std::vector<std::vector<std::pair<long, long>>> nbrs_;
};

using GraphPtr = std::shared_ptr<const Graph>;

/// Canonical labeled graph of the given family. n is the vertex count for
/// path/cycle and the leaf count for star.
Graph make_graph(GraphKind kind, long n);

/// Memoized shared instances of the canonical families (thread-safe).
GraphPtr shared_path(long n);
GraphPtr shared_cycle(long n);
GraphPtr shared_star(long leaves);
GraphPtr shared_graph(GraphKind kind, long n);

}  // namespace arith
