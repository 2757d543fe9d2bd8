#pragma once

#include <Eigen/Core>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "consensus/protocol.hpp"

namespace consensus {

// Directed graph on agent indices (0-based internally, 1-based in the text
// formats). An edge (i,j) means x_i appears in the support of f_j.
// Self-dependencies are tracked separately; edges never contain (i,i).
struct DependencyGraph {
  DependencyGraph() = default;
  explicit DependencyGraph(std::size_t node_count)
      : n(node_count), self_dependent(node_count, false) {}

  void add_edge(std::size_t i, std::size_t j);

  // In-neighbors N_i = {j : (j,i) in edges}, sorted ascending.
  std::vector<std::size_t> in_neighbors(std::size_t i) const;
  std::size_t in_degree(std::size_t i) const;

  bool operator==(const DependencyGraph&) const = default;

  std::size_t n = 0;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::vector<bool> self_dependent;
};

// Strongly connected components (path-equivalence classes), ordered by
// smallest member. A class is maximal when no edge enters it from outside.
struct NodePartition {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> maximal;

  std::size_t maximal_count() const;
  std::size_t class_of(std::size_t node) const;
};

enum class ProtocolKind { Linear, Squared, Product };

DependencyGraph build_dependency_graph(const Protocol& p);
NodePartition path_equivalence_classes(const DependencyGraph& g);
bool is_strongly_connected(const DependencyGraph& g);
bool has_directed_spanning_tree(const DependencyGraph& g);

// L = D - A with in-degree diagonal: L(i,i) = |N_i| and L(i,j) = -1 for each
// in-neighbor j of i, so the linear protocol is exactly dx/dt = -L x.
Eigen::MatrixXi laplacian(const DependencyGraph& g);

// The three protocol families built from the in-neighbor sets:
//   linear   sum_j x_j   - |N_i| x_i
//   squared  sum_j x_j^2 - |N_i| x_i^2
//   product  prod_j x_j  - x_i^|N_i|
// Nodes with no in-neighbors get f_i = 0.
Protocol generate_protocol(const DependencyGraph& g, ProtocolKind kind);

// Edge-list format: "N <count>" then "E i j" per edge (1-based), '#' starts
// a comment. Throws ParseError with location on malformed input.
DependencyGraph parse_edge_list(const std::string& text);
std::string format_edge_list(const DependencyGraph& g);

// Deterministic DOT export; maximal classes are rendered as outlined
// clusters.
std::string to_dot(const DependencyGraph& g);

}  // namespace consensus
