#include "consensus/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "consensus/depgraph.hpp"

namespace consensus {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::NotApplicable:
      return "not-applicable";
  }
  return "not-applicable";
}

Ideal protocol_ideal(const Protocol& p) {
  return Ideal(p.ring, p.polys);  // Ideal drops the zero polynomials
}

Ideal diagonal_ideal(const Ring& ring) {
  if (ring.size() < 2)
    throw std::invalid_argument("diagonal ideal needs at least two variables");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i + 1 < ring.size(); ++i)
    gens.push_back(Polynomial::variable(ring, i) -
                   Polynomial::variable(ring, i + 1));
  return Ideal(ring, std::move(gens));
}

SupportCheck check_support_condition(const Protocol& p) {
  std::vector<bool> covered(p.size(), false);
  for (const auto& f : p.polys)
    for (std::size_t v : f.support()) covered[v] = true;
  SupportCheck res{Verdict::Pass, {}};
  for (std::size_t v = 0; v < covered.size(); ++v)
    if (!covered[v]) res.missing.push_back(v);
  if (!res.missing.empty()) res.verdict = Verdict::Fail;
  return res;
}

ZeroPolyCheck check_zero_polynomials(const Protocol& p) {
  ZeroPolyCheck res{Verdict::Pass, {}};
  for (std::size_t i = 0; i < p.polys.size(); ++i)
    if (p.polys[i].is_zero()) res.zero_indices.push_back(i);
  if (res.zero_indices.size() > 1) res.verdict = Verdict::Fail;
  return res;
}

namespace {

bool has_constant_term(const Polynomial& f) {
  auto it = f.terms().find(Monomial::unit(f.ring().size()));
  return it != f.terms().end();
}

}  // namespace

VarietyCheck check_consensus_variety(const Protocol& p) {
  if (p.size() < 2) return VarietyCheck{Verdict::NotApplicable, std::nullopt};
  Ideal sum = sum_ideal(protocol_ideal(p), diagonal_ideal(p.ring));
  GroebnerBasis gb = buchberger(sum, MonomialOrder::lex());
  VarietyCheck res{gb.is_unit() ? Verdict::Fail : Verdict::Pass, gb};
  if (res.verdict == Verdict::Pass)
    res.may_be_trivial_consensus =
        std::none_of(p.polys.begin(), p.polys.end(), has_constant_term);
  return res;
}

DiagonalCheck check_diagonal_equilibrium(const Protocol& p) {
  DiagonalCheck res{Verdict::Pass, {}};
  for (std::size_t i = 0; i < p.polys.size(); ++i)
    if (!p.polys[i].substitute_diagonal().is_zero()) res.failing.push_back(i);
  if (!res.failing.empty()) res.verdict = Verdict::Fail;
  return res;
}

namespace {

// Shared gating for the elimination-based checks (Theorem 3 hypothesis).
std::string elimination_gate(const Protocol& p, std::size_t max_sweep_n) {
  if (p.size() < 3) return "requires at least 3 agents";
  if (check_diagonal_equilibrium(p).verdict != Verdict::Pass)
    return "diagonal equilibrium fails, theorem hypothesis not met";
  if (protocol_ideal(p).is_zero())
    return "all protocol polynomials are zero";
  if (p.size() > max_sweep_n)
    return "agent count exceeds sweep cap (" + std::to_string(max_sweep_n) +
           ")";
  return "";
}

}  // namespace

EliminationCheck check_elimination_spanning_tree(const Protocol& p,
                                                 std::size_t max_sweep_n) {
  if (std::string gate = elimination_gate(p, max_sweep_n); !gate.empty())
    return EliminationCheck{Verdict::NotApplicable, {}, gate};

  Ideal ideal = protocol_ideal(p);
  EliminationCheck res{Verdict::Pass, {}, ""};
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (elimination_ideal(ideal, {a, b}).empty())
        res.zero_pairs.emplace_back(a, b);
    }
  }
  if (!res.zero_pairs.empty()) res.verdict = Verdict::Fail;
  return res;
}

ComponentEstimate estimate_component_count(const Protocol& p,
                                           std::size_t max_sweep_n) {
  ComponentEstimate res;
  if (std::string gate = elimination_gate(p, max_sweep_n); !gate.empty()) {
    res.verdict = Verdict::NotApplicable;
    res.note = gate;
    return res;
  }

  Ideal ideal = protocol_ideal(p);
  std::size_t n = p.size();
  auto next_combination = [n](std::vector<std::size_t>& s) -> bool {
    std::size_t l = s.size();
    for (std::size_t i = l; i-- > 0;) {
      if (s[i] != i + n - l) {
        ++s[i];
        for (std::size_t j = i + 1; j < l; ++j) s[j] = s[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  for (std::size_t l = 1; l <= n - 1 && !res.l_defined; ++l) {
    // Enumerate l-subsets of variables to eliminate.
    std::vector<std::size_t> subset(l);
    for (std::size_t i = 0; i < l; ++i) subset[i] = i;
    do {
      std::set<std::size_t> keep;
      for (std::size_t v = 0; v < n; ++v) keep.insert(v);
      for (std::size_t v : subset) keep.erase(v);
      if (elimination_ideal(ideal, keep).empty()) {
        res.l_defined = true;
        res.l = l;
        res.witness_eliminated = subset;
        break;
      }
    } while (next_combination(subset));
  }

  res.verdict = Verdict::Pass;
  res.estimate = res.l_defined ? n - res.l : 1;
  if (!res.l_defined)
    res.note = "no eliminated subset up to l = N-1 yields the zero ideal";
  return res;
}

const CheckResult* CheckReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string CheckReport::text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.name << ": " << to_string(c.verdict);
    if (!c.note.empty()) out << " (" << c.note << ")";
    out << "\n";
    for (const auto& w : c.witnesses) out << "  " << w << "\n";
  }
  out << "overall: " << overall << "\n";
  return out.str();
}

nlohmann::json CheckReport::json() const {
  nlohmann::json doc;
  doc["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    doc["checks"].push_back({{"check", c.name},
                             {"verdict", to_string(c.verdict)},
                             {"witness", c.witnesses},
                             {"note", c.note},
                             {"seconds", c.seconds}});
  }
  doc["impossible"] = impossible;
  doc["reasons"] = reasons;
  doc["overall"] = overall;
  return doc;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string var_name(const Protocol& p, std::size_t i) {
  return p.ring.name(i);
}

}  // namespace

CheckReport run_all(const Protocol& p, std::size_t max_sweep_n) {
  CheckReport report;
  auto add = [&](CheckResult r) { report.checks.push_back(std::move(r)); };

  {
    auto t0 = Clock::now();
    SupportCheck c = check_support_condition(p);
    CheckResult r{"support_condition", c.verdict, {}, "", 0};
    for (std::size_t v : c.missing)
      r.witnesses.push_back("missing: " + var_name(p, v));
    r.seconds = seconds_since(t0);
    add(std::move(r));
  }
  {
    auto t0 = Clock::now();
    ZeroPolyCheck c = check_zero_polynomials(p);
    CheckResult r{"zero_polynomial_condition", c.verdict, {}, "", 0};
    if (c.verdict == Verdict::Fail)
      for (std::size_t i : c.zero_indices)
        r.witnesses.push_back("f" + std::to_string(i + 1) + " = 0");
    r.seconds = seconds_since(t0);
    add(std::move(r));
  }
  {
    auto t0 = Clock::now();
    VarietyCheck c = check_consensus_variety(p);
    CheckResult r{"consensus_variety_condition", c.verdict, {}, "", 0};
    if (c.basis)
      for (const auto& g : c.basis->elements())
        r.witnesses.push_back(g.str(c.basis->order()));
    if (c.verdict == Verdict::Pass) {
      r.note = "nonempty over the complex numbers; real points not certified";
      if (c.may_be_trivial_consensus)
        r.note += "; may be trivial consensus at the origin";
    }
    r.seconds = seconds_since(t0);
    add(std::move(r));
  }
  {
    auto t0 = Clock::now();
    DiagonalCheck c = check_diagonal_equilibrium(p);
    CheckResult r{"diagonal_equilibrium", c.verdict, {}, "", 0};
    for (std::size_t i : c.failing)
      r.witnesses.push_back("f" + std::to_string(i + 1) +
                            " on the diagonal: " +
                            p.polys[i].substitute_diagonal().str());
    r.seconds = seconds_since(t0);
    add(std::move(r));
  }
  {
    auto t0 = Clock::now();
    EliminationCheck c = check_elimination_spanning_tree(p, max_sweep_n);
    CheckResult r{"elimination_spanning_tree", c.verdict, {}, c.note, 0};
    for (const auto& [a, b] : c.zero_pairs)
      r.witnesses.push_back("zero elimination ideal keeping {" +
                            var_name(p, a) + ", " + var_name(p, b) + "}");
    r.seconds = seconds_since(t0);
    add(std::move(r));
  }

  DependencyGraph graph = build_dependency_graph(p);
  NodePartition part = path_equivalence_classes(graph);
  {
    auto t0 = Clock::now();
    ComponentEstimate c = estimate_component_count(p, max_sweep_n);
    CheckResult r{"component_count_estimate", c.verdict, {}, c.note, 0};
    if (c.verdict == Verdict::Pass) {
      std::ostringstream w;
      if (c.l_defined) {
        w << "l = " << c.l << ", estimate = " << c.estimate
          << ", eliminated {";
        for (std::size_t i = 0; i < c.witness_eliminated.size(); ++i)
          w << (i ? ", " : "") << var_name(p, c.witness_eliminated[i]);
        w << "}";
      } else {
        w << "l undefined, estimate = 1";
      }
      r.witnesses.push_back(w.str());
      r.witnesses.push_back("graph maximal-class count = " +
                            std::to_string(part.maximal_count()));
    }
    r.seconds = seconds_since(t0);
    add(std::move(r));
  }
  {
    auto t0 = Clock::now();
    CheckResult r{"graph_spanning_tree",
                  has_directed_spanning_tree(graph) ? Verdict::Pass
                                                    : Verdict::Fail,
                  {},
                  "",
                  0};
    r.witnesses.push_back("maximal classes: " +
                          std::to_string(part.maximal_count()));
    r.seconds = seconds_since(t0);
    add(std::move(r));
  }
  {
    auto t0 = Clock::now();
    CheckResult r{"graph_strong_connectivity",
                  is_strongly_connected(graph) ? Verdict::Pass : Verdict::Fail,
                  {},
                  "informational; not necessary for consensus",
                  0};
    r.seconds = seconds_since(t0);
    add(std::move(r));
  }

  // Necessary conditions only; the informational checks never fail the run.
  static const char* necessary[] = {
      "support_condition", "zero_polynomial_condition",
      "consensus_variety_condition", "elimination_spanning_tree",
      "graph_spanning_tree"};
  for (const char* name : necessary) {
    const CheckResult* c = report.find(name);
    if (c && c->verdict == Verdict::Fail) report.reasons.push_back(name);
  }
  report.impossible = !report.reasons.empty();
  if (report.impossible) {
    std::ostringstream o;
    o << "consensus impossible (";
    for (std::size_t i = 0; i < report.reasons.size(); ++i)
      o << (i ? ", " : "") << report.reasons[i];
    o << ")";
    report.overall = o.str();
  } else {
    report.overall = "necessary conditions satisfied (not a proof of consensus)";
  }
  return report;
}

}  // namespace consensus
