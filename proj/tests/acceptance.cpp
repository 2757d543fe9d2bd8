// Acceptance suite: one PASS/FAIL line per criterion, exit code = number of
// failures. Criterion 1 shells out to the CLI binary baked in via
// CLI_BINARY_PATH; everything else runs against the library.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "consensus/analysis.hpp"
#include "consensus/depgraph.hpp"
#include "consensus/groebner.hpp"
#include "consensus/protocol_io.hpp"
#include "consensus/simulate.hpp"
#include "test_util.hpp"

using namespace consensus;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  int number;
  const char* title;
  bool (*run)(std::ostream& log);
};

const char* kShiftedLinear =
    "vars x1 x2 x3\n"
    "f1 = x1 + x2 + 1\n"
    "f2 = x1 + x3 + 3\n"
    "f3 = x2 - x3\n";

const char* kTwoIslands =
    "vars x1 x2 x3 x4\n"
    "f1 = x2 - x1\n"
    "f2 = x1 - x2\n"
    "f3 = 0\n"
    "f4 = x1*x2*x3 - x4^3\n";

DependencyGraph fig1_graph() {
  DependencyGraph g(5);
  for (auto [i, j] : {std::pair<std::size_t, std::size_t>{1, 0},
                      {4, 0},
                      {0, 1},
                      {2, 1},
                      {3, 1},
                      {1, 3},
                      {0, 4},
                      {2, 4}})
    g.add_edge(i, j);
  return g;
}

int run_cli(const std::string& args, std::string& output) {
  namespace fs = std::filesystem;
  fs::path out_file = fs::temp_directory_path() / "acceptance_cli_out.txt";
  std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " > " +
                    out_file.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream buf;
  buf << in.rdbuf();
  output = buf.str();
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

// 1. Inconsistent shifted linear system: reduced basis {1} in exact
//    arithmetic under every supported order, and the CLI flags it.
bool criterion1(std::ostream& log) {
  auto t0 = Clock::now();
  Ring r3 = Ring::numbered(3);
  std::vector<Polynomial> gens;
  for (const char* e : {"x1 + x2 + 1", "x1 + x3 + 3", "x2 - x3", "x1 - x2",
                        "x2 - x3"})
    gens.push_back(parse_polynomial(e, r3));
  Ideal ideal(r3, gens);
  Polynomial one = Polynomial::constant(r3, 1);
  for (const auto& ord : {MonomialOrder::lex(), MonomialOrder::grlex(),
                          MonomialOrder::grevlex()}) {
    GroebnerBasis gb = buchberger(ideal, ord);
    if (gb.elements().size() != 1 || gb.elements()[0] != one) {
      log << "reduced basis is not exactly {1}\n";
      return false;
    }
  }

  namespace fs = std::filesystem;
  fs::path file = fs::temp_directory_path() / "acceptance_ex1.protocol";
  std::ofstream(file) << kShiftedLinear;
  std::string output;
  int exit_code = run_cli("check " + file.string(), output);
  if (exit_code != 1) {
    log << "expected check exit code 1, got " << exit_code << "\n" << output;
    return false;
  }
  if (output.find("consensus_variety_condition") == std::string::npos) {
    log << "check output does not name consensus_variety_condition:\n"
        << output;
    return false;
  }
  double dt = seconds_since(t0);
  if (dt >= 1.0) {
    log << "took " << dt << " s (budget 1 s)\n";
    return false;
  }
  return true;
}

// 2. Two disconnected blocks: zero elimination ideal onto {x3, x4}, failed
//    spanning-tree condition with that witness, l = 2 / estimate 2, and the
//    graph oracle agrees with 2 maximal classes.
bool criterion2(std::ostream& log) {
  auto t0 = Clock::now();
  Protocol p = parse_protocol(kTwoIslands);
  if (!elimination_ideal(protocol_ideal(p), {2, 3}).empty()) {
    log << "elimination onto {x3, x4} is not the zero ideal\n";
    return false;
  }
  EliminationCheck e = check_elimination_spanning_tree(p);
  bool has_witness =
      std::find(e.zero_pairs.begin(), e.zero_pairs.end(),
                std::make_pair<std::size_t, std::size_t>(2, 3)) !=
      e.zero_pairs.end();
  if (e.verdict != Verdict::Fail || !has_witness) {
    log << "spanning-tree condition did not fail with witness {x3, x4}\n";
    return false;
  }
  ComponentEstimate c = estimate_component_count(p);
  if (!c.l_defined || c.l != 2 || c.estimate != 2) {
    log << "expected l = 2, estimate = 2; got l_defined=" << c.l_defined
        << " l=" << c.l << " estimate=" << c.estimate << "\n";
    return false;
  }
  std::size_t maximal =
      path_equivalence_classes(build_dependency_graph(p)).maximal_count();
  if (maximal != 2) {
    log << "graph oracle found " << maximal << " maximal classes, not 2\n";
    return false;
  }
  double dt = seconds_since(t0);
  if (dt >= 1.0) {
    log << "took " << dt << " s (budget 1 s)\n";
    return false;
  }
  return true;
}

// Shared by criteria 3 and 9: the three generated protocols on the example
// graph, integrated from pinned-friendly starts.
std::vector<Trajectory> example_runs(std::ostream& log, bool& ok) {
  ok = true;
  std::vector<Trajectory> runs;
  DependencyGraph g = fig1_graph();
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 2.0);

  for (auto kind :
       {ProtocolKind::Linear, ProtocolKind::Squared, ProtocolKind::Product}) {
    Protocol p = generate_protocol(g, kind);
    SimulationConfig cfg;
    cfg.x0.resize(5);
    if (kind == ProtocolKind::Linear) {
      cfg.x0 << 1, 2, 3, 4, 5;
    } else {
      for (int i = 0; i < 5; ++i) {
        double v = 0.0;
        while (v <= 0.0) v = unit(rng);  // x0 in (0, 2]
        cfg.x0[i] = v;
      }
    }
    Trajectory tr = integrate(p, cfg);
    if (tr.outcome.kind != OutcomeKind::Converged) {
      log << "protocol kind " << static_cast<int>(kind)
          << " did not converge\n";
      ok = false;
    } else {
      double pinned = cfg.x0[2];  // f3 = 0 holds agent 3 fixed
      if (std::abs(tr.outcome.consensus_value - pinned) > 1e-5) {
        log << "consensus value " << tr.outcome.consensus_value
            << " differs from pinned start " << pinned << "\n";
        ok = false;
      }
      if (consensus_metrics(tr).final_spread >= 1e-6) {
        log << "final spread not below 1e-6\n";
        ok = false;
      }
    }
    runs.push_back(std::move(tr));
  }
  return runs;
}

// 3. All three example protocols converge to the pinned agent's start value.
bool criterion3(std::ostream& log) {
  auto t0 = Clock::now();
  bool ok = false;
  example_runs(log, ok);
  double dt = seconds_since(t0);
  if (dt >= 2.0) {
    log << "took " << dt << " s (budget 2 s)\n";
    return false;
  }
  return ok;
}

// 4. Buchberger property suite on 200 seeded random generator sets.
bool criterion4(std::ostream& log) {
  auto t0 = Clock::now();
  testutil::Rng rng(101);
  auto ord = MonomialOrder::grevlex();
  for (int it = 0; it < 200; ++it) {
    std::size_t nvars = 2 + rng() % 3;  // up to 4 variables
    Ring ring = Ring::numbered(nvars);
    std::vector<Polynomial> gens;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i)
      gens.push_back(testutil::random_polynomial(rng, ring, 3, 3, 9));

    GroebnerBasis gb = buchberger(Ideal(ring, gens), ord);
    const auto& basis = gb.elements();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        if (!remainder(s_polynomial(basis[i], basis[j], ord), basis, ord)
                 .is_zero()) {
          log << "iteration " << it << ": S-polynomial does not reduce to 0\n";
          return false;
        }
    for (const auto& f : gens)
      if (!f.is_zero() && !ideal_membership(f, gb)) {
        log << "iteration " << it << ": input generator not in the basis\n";
        return false;
      }

    std::vector<Polynomial> permuted = gens;
    std::shuffle(permuted.begin(), permuted.end(), rng);
    if (buchberger(Ideal(ring, permuted), ord).elements() != basis) {
      log << "iteration " << it << ": basis changed under permutation\n";
      return false;
    }
    std::vector<Polynomial> scaled = gens;
    for (auto& f : scaled) {
      Rational c = testutil::random_coefficient(rng, 5) + Rational(6);
      f = f * c;  // c in [1, 11], never zero
    }
    if (buchberger(Ideal(ring, scaled), ord).elements() != basis) {
      log << "iteration " << it << ": basis changed under scaling\n";
      return false;
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 60.0) {
    log << "took " << dt << " s (budget 60 s)\n";
    return false;
  }
  return true;
}

// 5. Diagonal vanishing is equivalent to membership in the diagonal ideal.
bool criterion5(std::ostream& log) {
  testutil::Rng rng(103);
  for (int it = 0; it < 500; ++it) {
    std::size_t nvars = 2 + rng() % 4;  // up to 5 variables
    Ring ring = Ring::numbered(nvars);
    GroebnerBasis gb_diag =
        buchberger(diagonal_ideal(ring), MonomialOrder::lex());
    Polynomial f = testutil::random_polynomial(rng, ring, 4, 4, 9);
    bool diag = f.substitute_diagonal().is_zero();
    bool member = ideal_membership(f, gb_diag);
    if (diag != member) {
      log << "discrepancy at iteration " << it << ": f = " << f.str()
          << ", diagonal " << diag << " vs membership " << member << "\n";
      return false;
    }
  }
  return true;
}

// 6. The algebraic checks agree with the graph oracles on generated
//    protocols.
bool criterion6(std::ostream& log) {
  testutil::Rng rng(107);
  for (int it = 0; it < 50; ++it) {
    std::size_t n = 3 + rng() % 4;  // N in 3..6
    DependencyGraph g = testutil::random_digraph_no_isolated_rows(rng, n, 0.3);
    bool tree = has_directed_spanning_tree(g);
    std::size_t maximal = path_equivalence_classes(g).maximal_count();
    for (auto kind : {ProtocolKind::Linear, ProtocolKind::Squared,
                      ProtocolKind::Product}) {
      Protocol p = generate_protocol(g, kind);
      EliminationCheck e = check_elimination_spanning_tree(p);
      ComponentEstimate c = estimate_component_count(p);
      bool elim_tree = e.verdict == Verdict::Pass;
      if (e.verdict == Verdict::NotApplicable ||
          c.verdict == Verdict::NotApplicable || elim_tree != tree ||
          c.estimate != maximal) {
        log << "disagreement on graph " << it << ", kind "
            << static_cast<int>(kind) << ":\n"
            << format_edge_list(g) << format_protocol(p)
            << "graph spanning tree = " << tree
            << ", maximal classes = " << maximal
            << "; elimination verdict = " << to_string(e.verdict)
            << ", estimate verdict = " << to_string(c.verdict)
            << ", estimate = " << c.estimate << "\n";
        return false;
      }
    }
  }
  return true;
}

// 7. Division-algorithm golden case.
bool criterion7(std::ostream& log) {
  Ring r(std::vector<std::string>{"x", "y"});
  DivisionResult res =
      divide(parse_polynomial("x^2*y + x*y^2 + y^2", r),
             {parse_polynomial("x*y - 1", r), parse_polynomial("y^2 - 1", r)},
             MonomialOrder::lex());
  bool ok = res.quotients[0] == parse_polynomial("x + y", r) &&
            res.quotients[1] == parse_polynomial("1", r) &&
            res.remainder == parse_polynomial("x + y + 1", r);
  if (!ok)
    log << "got quotients [" << res.quotients[0].str() << ", "
        << res.quotients[1].str() << "], remainder " << res.remainder.str()
        << "\n";
  return ok;
}

// 8. Round-trip identity on 1000 random protocols and crash-free parsing of
//    10000 fuzzed strings.
bool criterion8(std::ostream& log) {
  testutil::Rng rng(109);
  for (int it = 0; it < 1000; ++it) {
    std::size_t n = 1 + rng() % 6;
    Ring ring = Ring::numbered(n);
    std::vector<Polynomial> polys;
    for (std::size_t i = 0; i < n; ++i)
      polys.push_back(testutil::random_polynomial(rng, ring, 4, 4, 9));
    Protocol p(ring, std::move(polys));
    if (!(parse_protocol(format_protocol(p)) == p)) {
      log << "round trip failed:\n" << format_protocol(p);
      return false;
    }
  }

  std::uniform_int_distribution<int> len(0, 60);
  std::uniform_int_distribution<int> byte(1, 255);
  std::uniform_int_distribution<int> mode(0, 2);
  const std::string structured = "xyzf0123456789 +-*/^=#\nvars";
  std::uniform_int_distribution<std::size_t> pick(0, structured.size() - 1);
  for (int it = 0; it < 10000; ++it) {
    std::string text;
    if (mode(rng) == 0) text = "vars x y\n";  // sometimes a valid prefix
    int count = len(rng);
    bool raw = mode(rng) == 0;
    for (int i = 0; i < count; ++i)
      text += raw ? static_cast<char>(byte(rng)) : structured[pick(rng)];
    try {
      parse_protocol(text);
    } catch (const ParseError& e) {
      if (e.line() < 1 || e.column() < 1) {
        log << "error without a location on fuzz case " << it << "\n";
        return false;
      }
    } catch (const std::exception& e) {
      log << "fuzz case " << it << " escaped as " << e.what() << "\n";
      return false;
    }
  }
  return true;
}

// 9. Interval contraction on the criterion-3 trajectories.
bool criterion9(std::ostream& log) {
  bool converged = false;
  std::vector<Trajectory> runs = example_runs(log, converged);
  if (!converged) return false;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (!consensus_metrics(runs[i]).interval_contracting) {
      log << "run " << i << ": interval expanded beyond the 1e-9 slack\n";
      return false;
    }
  }
  return true;
}

const Criterion kCriteria[] = {
    {1, "inconsistent system reduces to {1} and check exits 1", criterion1},
    {2, "disconnected blocks: elimination, estimate, graph oracle",
     criterion2},
    {3, "example protocols converge to the pinned value", criterion3},
    {4, "buchberger property suite (200 random generator sets)", criterion4},
    {5, "diagonal vanishing equals diagonal-ideal membership", criterion5},
    {6, "graph and algebra oracles agree on generated protocols", criterion6},
    {7, "division golden case", criterion7},
    {8, "parser round trip and fuzzing", criterion8},
    {9, "interval contraction on the example runs", criterion9},
};

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    std::ostringstream log;
    bool ok = false;
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log << "unexpected exception: " << e.what() << "\n";
    }
    std::cout << "criterion " << c.number << " (" << c.title
              << "): " << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) {
      std::cout << log.str();
      ++failures;
    }
  }
  return failures;
}
