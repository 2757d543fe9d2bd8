// Command-line front end: Groebner computation, consensus checking, graph
// export, protocol generation and simulation.
//
// Exit codes: 0 success / necessary conditions pass / converged,
//             1 "consensus impossible" verdict or non-converged simulation,
//             2 usage or parse errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "consensus/analysis.hpp"
#include "consensus/depgraph.hpp"
#include "consensus/groebner.hpp"
#include "consensus/protocol_io.hpp"
#include "consensus/simulate.hpp"

namespace {

using namespace consensus;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MonomialOrder order_from_name(const std::string& name) {
  if (name == "lex") return MonomialOrder::lex();
  if (name == "grlex") return MonomialOrder::grlex();
  if (name == "grevlex") return MonomialOrder::grevlex();
  throw CLI::ValidationError("--order", "unknown order '" + name + "'");
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(item);
  return parts;
}

struct GroebnerOpts {
  std::string file;
  std::string order = "lex";
  std::string eliminate;
  std::vector<std::string> extra;
};

int cmd_groebner(const GroebnerOpts& opt, bool quiet) {
  Protocol p = parse_protocol(read_file(opt.file));
  std::vector<Polynomial> gens = p.polys;
  for (const auto& expr : opt.extra)
    gens.push_back(parse_polynomial(expr, p.ring));
  Ideal ideal(p.ring, std::move(gens));

  if (!opt.eliminate.empty()) {
    std::set<std::size_t> keep;
    for (std::size_t i = 0; i < p.ring.size(); ++i) keep.insert(i);
    for (const auto& name : split_csv(opt.eliminate)) {
      auto idx = p.ring.index_of(name);
      if (!idx)
        throw std::runtime_error("unknown variable in --eliminate: " + name);
      keep.erase(*idx);
    }
    std::vector<Polynomial> basis = elimination_ideal(ideal, keep);
    for (const auto& g : basis) std::cout << g.str() << "\n";
    if (basis.empty() && !quiet) std::cerr << "zero ideal\n";
    return 0;
  }

  GroebnerBasis gb = buchberger(ideal, order_from_name(opt.order));
  for (const auto& g : gb.elements()) std::cout << g.str(gb.order()) << "\n";
  if (gb.empty() && !quiet) std::cerr << "zero ideal\n";
  return 0;
}

int cmd_check(const std::string& file, std::size_t max_sweep_n, bool json,
              bool quiet) {
  Protocol p = parse_protocol(read_file(file));
  CheckReport report = run_all(p, max_sweep_n);
  if (json)
    std::cout << report.json().dump(2) << "\n";
  else if (quiet)
    std::cout << report.overall << "\n";
  else
    std::cout << report.text();
  return report.impossible ? 1 : 0;
}

int cmd_graph(const std::string& file, const std::string& format) {
  Protocol p = parse_protocol(read_file(file));
  DependencyGraph g = build_dependency_graph(p);
  if (format == "dot")
    std::cout << to_dot(g);
  else if (format == "edges")
    std::cout << format_edge_list(g);
  else
    throw CLI::ValidationError("--format", "unknown format '" + format + "'");
  return 0;
}

int cmd_gen(const std::string& graph_file, const std::string& kind_name) {
  DependencyGraph g = parse_edge_list(read_file(graph_file));
  ProtocolKind kind;
  if (kind_name == "linear")
    kind = ProtocolKind::Linear;
  else if (kind_name == "squared")
    kind = ProtocolKind::Squared;
  else if (kind_name == "product")
    kind = ProtocolKind::Product;
  else
    throw CLI::ValidationError("--kind", "unknown kind '" + kind_name + "'");
  std::cout << format_protocol(generate_protocol(g, kind));
  return 0;
}

struct SimulateOpts {
  std::string file;
  std::string x0;
  std::uint64_t seed = 0;
  bool seeded = false;
  double dt = 0.01;
  double t_end = 50.0;
  double spread_tol = 1e-6;
  double divergence_bound = 1e9;
  std::string out;
};

int cmd_simulate(const SimulateOpts& opt, bool quiet) {
  Protocol p = parse_protocol(read_file(opt.file));
  SimulationConfig cfg;
  cfg.dt = opt.dt;
  cfg.t_end = opt.t_end;
  cfg.spread_tol = opt.spread_tol;
  cfg.divergence_bound = opt.divergence_bound;

  std::size_t n = p.size();
  cfg.x0.resize(static_cast<Eigen::Index>(n));
  if (!opt.x0.empty()) {
    std::vector<std::string> parts = split_csv(opt.x0);
    if (parts.size() != n)
      throw std::runtime_error("--x0 needs exactly " + std::to_string(n) +
                               " values");
    for (std::size_t i = 0; i < n; ++i)
      cfg.x0[static_cast<Eigen::Index>(i)] = std::stod(parts[i]);
  } else if (opt.seeded) {
    // Uniform draw from (0, 2]; positivity suits the product family.
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> dist(0.0, 2.0);
    for (std::size_t i = 0; i < n; ++i) {
      double v = 0.0;
      while (v <= 0.0) v = dist(rng);
      cfg.x0[static_cast<Eigen::Index>(i)] = v;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      cfg.x0[static_cast<Eigen::Index>(i)] = static_cast<double>(i + 1);
  }

  Trajectory tr = integrate(p, cfg);

  std::ostream* sink = &std::cout;
  std::ofstream file_out;
  if (!opt.out.empty()) {
    file_out.open(opt.out);
    if (!file_out) throw std::runtime_error("cannot open output: " + opt.out);
    sink = &file_out;
  }
  write_trajectory_csv(tr, *sink);

  std::ostream& summary = opt.out.empty() ? std::cerr : std::cout;
  if (!quiet) {
    switch (tr.outcome.kind) {
      case OutcomeKind::Converged:
        summary << "outcome: converged t=" << tr.outcome.time
                << " value=" << tr.outcome.consensus_value << "\n";
        break;
      case OutcomeKind::HorizonReached:
        summary << "outcome: horizon_reached\n";
        break;
      case OutcomeKind::Diverged:
        summary << "outcome: diverged t=" << tr.outcome.time << "\n";
        break;
    }
  }
  return tr.outcome.kind == OutcomeKind::Converged ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial consensus-protocol analysis toolkit"};
  app.require_subcommand(1);
  bool json = false, quiet = false;
  app.add_flag("--json", json, "machine-readable output where supported");
  app.add_flag("--quiet", quiet, "suppress informational output");

  GroebnerOpts gopt;
  auto* sub_gb = app.add_subcommand(
      "groebner", "reduced Groebner basis of a protocol's polynomials");
  sub_gb->add_option("file", gopt.file, "protocol file")->required();
  sub_gb->add_option("--order", gopt.order, "lex|grlex|grevlex");
  sub_gb->add_option("--eliminate", gopt.eliminate,
                     "comma-separated variables to eliminate");
  sub_gb->add_option("--with", gopt.extra,
                     "extra generator polynomial (repeatable)");

  std::string check_file;
  std::size_t max_sweep_n = 8;
  auto* sub_check =
      app.add_subcommand("check", "run the necessary-condition battery");
  sub_check->add_option("file", check_file, "protocol file")->required();
  sub_check->add_option("--max-sweep-n", max_sweep_n,
                        "agent cap for the elimination sweeps");

  std::string graph_file_in, graph_format = "dot";
  auto* sub_graph =
      app.add_subcommand("graph", "export the dependency graph");
  sub_graph->add_option("file", graph_file_in, "protocol file")->required();
  sub_graph->add_option("--format", graph_format, "dot|edges");

  std::string gen_graph, gen_kind;
  auto* sub_gen = app.add_subcommand(
      "gen", "generate a protocol family from an edge-list graph");
  sub_gen->add_option("--graph", gen_graph, "edge-list file")->required();
  sub_gen->add_option("--kind", gen_kind, "linear|squared|product")
      ->required();

  SimulateOpts sopt;
  auto* sub_sim = app.add_subcommand("simulate", "integrate dx/dt = f(x)");
  sub_sim->add_option("file", sopt.file, "protocol file")->required();
  sub_sim->add_option("--x0", sopt.x0, "comma-separated initial state");
  auto* seed_opt =
      sub_sim->add_option("--seed", sopt.seed, "seeded x0 from (0,2]");
  sub_sim->add_option("--dt", sopt.dt, "step size");
  sub_sim->add_option("--t-end", sopt.t_end, "time horizon");
  sub_sim->add_option("--spread-tol", sopt.spread_tol, "consensus threshold");
  sub_sim->add_option("--divergence-bound", sopt.divergence_bound,
                      "state-magnitude abort threshold");
  sub_sim->add_option("--out", sopt.out, "trajectory CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    sopt.seeded = seed_opt->count() > 0;
    if (sub_gb->parsed()) return cmd_groebner(gopt, quiet);
    if (sub_check->parsed())
      return cmd_check(check_file, max_sweep_n, json, quiet);
    if (sub_graph->parsed()) return cmd_graph(graph_file_in, graph_format);
    if (sub_gen->parsed()) return cmd_gen(gen_graph, gen_kind);
    if (sub_sim->parsed()) return cmd_simulate(sopt, quiet);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
