#include "consensus/depgraph.hpp"

#include <algorithm>
#include <sstream>
#include <stack>
#include <stdexcept>

#include "consensus/parse_error.hpp"

namespace consensus {

void DependencyGraph::add_edge(std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw std::invalid_argument("edge node out of range");
  if (i == j) throw std::invalid_argument("self-loops are not stored as edges");
  edges.emplace(i, j);
}

std::vector<std::size_t> DependencyGraph::in_neighbors(std::size_t i) const {
  std::vector<std::size_t> nbrs;
  for (const auto& [u, v] : edges)
    if (v == i) nbrs.push_back(u);
  return nbrs;  // set iteration keeps them sorted
}

std::size_t DependencyGraph::in_degree(std::size_t i) const {
  return in_neighbors(i).size();
}

std::size_t NodePartition::maximal_count() const {
  return static_cast<std::size_t>(
      std::count(maximal.begin(), maximal.end(), true));
}

std::size_t NodePartition::class_of(std::size_t node) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t v : classes[c])
      if (v == node) return c;
  throw std::out_of_range("node not covered by partition");
}

DependencyGraph build_dependency_graph(const Protocol& p) {
  DependencyGraph g(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i : p.polys[j].support()) {
      if (i == j)
        g.self_dependent[j] = true;
      else
        g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

// Iterative Tarjan; returns the component index per node.
std::vector<std::size_t> tarjan_components(const DependencyGraph& g,
                                           std::size_t& component_count) {
  std::size_t n = g.n;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : g.edges) adj[u].push_back(v);

  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> comp(n, 0);
  std::stack<std::size_t> stk;
  int next_index = 0;
  component_count = 0;

  struct Frame {
    std::size_t v;
    std::size_t child = 0;
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::stack<Frame> frames;
    frames.push({root});
    while (!frames.empty()) {
      Frame& f = frames.top();
      std::size_t v = f.v;
      if (f.child == 0) {
        index[v] = lowlink[v] = next_index++;
        stk.push(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (f.child < adj[v].size()) {
        std::size_t w = adj[v][f.child++];
        if (index[w] == -1) {
          frames.push({w});
          descended = true;
          break;
        }
        if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
      }
      if (descended) continue;
      if (lowlink[v] == index[v]) {
        while (true) {
          std::size_t w = stk.top();
          stk.pop();
          on_stack[w] = false;
          comp[w] = component_count;
          if (w == v) break;
        }
        ++component_count;
      }
      frames.pop();
      if (!frames.empty()) {
        std::size_t parent = frames.top().v;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
    }
  }
  return comp;
}

}  // namespace

NodePartition path_equivalence_classes(const DependencyGraph& g) {
  std::size_t count = 0;
  std::vector<std::size_t> comp = tarjan_components(g, count);

  std::vector<std::vector<std::size_t>> classes(count);
  for (std::size_t v = 0; v < g.n; ++v) classes[comp[v]].push_back(v);
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<std::size_t> class_index(g.n);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t v : classes[c]) class_index[v] = c;

  std::vector<bool> maximal(classes.size(), true);
  for (const auto& [u, v] : g.edges)
    if (class_index[u] != class_index[v]) maximal[class_index[v]] = false;

  return NodePartition{std::move(classes), std::move(maximal)};
}

bool is_strongly_connected(const DependencyGraph& g) {
  return path_equivalence_classes(g).classes.size() == 1;
}

bool has_directed_spanning_tree(const DependencyGraph& g) {
  return path_equivalence_classes(g).maximal_count() == 1;
}

Eigen::MatrixXi laplacian(const DependencyGraph& g) {
  Eigen::MatrixXi l = Eigen::MatrixXi::Zero(static_cast<int>(g.n),
                                            static_cast<int>(g.n));
  for (const auto& [j, i] : g.edges) {
    l(static_cast<int>(i), static_cast<int>(i)) += 1;
    l(static_cast<int>(i), static_cast<int>(j)) -= 1;
  }
  return l;
}

Protocol generate_protocol(const DependencyGraph& g, ProtocolKind kind) {
  Ring ring = Ring::numbered(g.n);
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < g.n; ++i) {
    std::vector<std::size_t> nbrs = g.in_neighbors(i);
    if (nbrs.empty()) {
      polys.emplace_back(ring);
      continue;
    }
    int deg = static_cast<int>(nbrs.size());
    Polynomial f(ring);
    switch (kind) {
      case ProtocolKind::Linear: {
        for (std::size_t j : nbrs) f = f + Polynomial::variable(ring, j);
        f = f - Polynomial::variable(ring, i) * Rational(deg);
        break;
      }
      case ProtocolKind::Squared: {
        for (std::size_t j : nbrs) f = f + Polynomial::variable(ring, j, 2);
        f = f - Polynomial::variable(ring, i, 2) * Rational(deg);
        break;
      }
      case ProtocolKind::Product: {
        Polynomial prod = Polynomial::constant(ring, 1);
        for (std::size_t j : nbrs) prod = prod * Polynomial::variable(ring, j);
        f = prod - Polynomial::variable(ring, i, deg);
        break;
      }
      default:
        throw std::invalid_argument("unknown protocol kind");
    }
    polys.push_back(std::move(f));
  }
  return Protocol(std::move(ring), std::move(polys));
}

DependencyGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool have_n = false;
  DependencyGraph g;
  std::vector<std::pair<std::size_t, std::size_t>> pending;

  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream line(raw);
    std::string directive;
    if (!(line >> directive)) continue;  // blank
    if (directive == "N") {
      long long count = -1;
      if (!(line >> count) || count < 1)
        throw ParseError(lineno, 1, "expected positive node count after N");
      if (have_n) throw ParseError(lineno, 1, "duplicate N directive");
      g = DependencyGraph(static_cast<std::size_t>(count));
      have_n = true;
    } else if (directive == "E") {
      long long i = 0, j = 0;
      if (!(line >> i >> j))
        throw ParseError(lineno, 1, "expected E <i> <j>");
      if (!have_n) throw ParseError(lineno, 1, "E before N directive");
      if (i < 1 || j < 1 || i > static_cast<long long>(g.n) ||
          j > static_cast<long long>(g.n))
        throw ParseError(lineno, 1, "edge node out of range");
      if (i == j) throw ParseError(lineno, 1, "self-loop edges are not allowed");
      g.add_edge(static_cast<std::size_t>(i - 1),
                 static_cast<std::size_t>(j - 1));
    } else {
      throw ParseError(lineno, 1, "unknown directive '" + directive + "'");
    }
    std::string trailing;
    if (line >> trailing)
      throw ParseError(lineno, 1, "trailing tokens on line");
  }
  if (!have_n) throw ParseError(lineno == 0 ? 1 : lineno, 1, "missing N directive");
  return g;
}

std::string format_edge_list(const DependencyGraph& g) {
  std::ostringstream out;
  out << "N " << g.n << "\n";
  for (const auto& [i, j] : g.edges)
    out << "E " << (i + 1) << " " << (j + 1) << "\n";
  return out.str();
}

std::string to_dot(const DependencyGraph& g) {
  NodePartition part = path_equivalence_classes(g);
  std::ostringstream out;
  out << "digraph dependency {\n";
  std::size_t cluster = 0;
  for (std::size_t c = 0; c < part.classes.size(); ++c) {
    if (part.maximal[c]) {
      out << "  subgraph cluster_" << cluster++ << " {\n"
          << "    label=\"maximal\";\n";
      for (std::size_t v : part.classes[c])
        out << "    x" << (v + 1) << ";\n";
      out << "  }\n";
    } else {
      for (std::size_t v : part.classes[c]) out << "  x" << (v + 1) << ";\n";
    }
  }
  for (const auto& [i, j] : g.edges)
    out << "  x" << (i + 1) << " -> x" << (j + 1) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace consensus
