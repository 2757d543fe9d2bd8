#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "consensus/groebner.hpp"
#include "consensus/protocol.hpp"

namespace consensus {

enum class Verdict { Pass, Fail, NotApplicable };
std::string to_string(Verdict v);  // "pass" / "fail" / "not-applicable"

// Ideal of the nonzero protocol polynomials.
Ideal protocol_ideal(const Protocol& p);
// J = <x1-x2, x2-x3, ..., x_{N-1}-x_N>, whose variety is the diagonal
// subspace. Requires at least two variables.
Ideal diagonal_ideal(const Ring& ring);

struct SupportCheck {
  Verdict verdict;
  std::vector<std::size_t> missing;  // variables in no support
};
// Every variable must appear in the support of some f_i.
SupportCheck check_support_condition(const Protocol& p);

struct ZeroPolyCheck {
  Verdict verdict;
  std::vector<std::size_t> zero_indices;
};
// At most one f_i may be the zero polynomial.
ZeroPolyCheck check_zero_polynomials(const Protocol& p);

struct VarietyCheck {
  Verdict verdict;
  std::optional<GroebnerBasis> basis;  // reduced GB of I+J
  bool may_be_trivial_consensus = false;
};
// Fails iff the reduced basis of I+J is {1} (empty complex variety). A pass
// certifies nonemptiness over the complex numbers only.
VarietyCheck check_consensus_variety(const Protocol& p);

struct DiagonalCheck {
  Verdict verdict;
  std::vector<std::size_t> failing;  // indices with f_i(t,...,t) != 0
};
// All-alpha diagonal equilibrium: f_i vanishes identically on the diagonal.
DiagonalCheck check_diagonal_equilibrium(const Protocol& p);

struct EliminationCheck {
  Verdict verdict;
  // Kept-variable pairs whose elimination ideal is the zero ideal.
  std::vector<std::pair<std::size_t, std::size_t>> zero_pairs;
  std::string note;
};
// For every 2-variable subset, the elimination ideal of I onto that pair
// must be nonzero. Applicable only when the diagonal check passes, N >= 3
// and I is not the zero ideal.
EliminationCheck check_elimination_spanning_tree(const Protocol& p,
                                                 std::size_t max_sweep_n = 8);

struct ComponentEstimate {
  Verdict verdict;  // not-applicable when gated; pass otherwise
  bool l_defined = false;
  std::size_t l = 0;
  std::size_t estimate = 0;              // N - l (1 when l undefined)
  std::vector<std::size_t> witness_eliminated;  // an l-subset realizing l
  std::string note;
};
// Smallest l such that eliminating some l variables yields the zero ideal;
// the component-count estimate is N - l.
ComponentEstimate estimate_component_count(const Protocol& p,
                                           std::size_t max_sweep_n = 8);

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::NotApplicable;
  std::vector<std::string> witnesses;
  std::string note;
  double seconds = 0.0;
};

struct CheckReport {
  std::vector<CheckResult> checks;
  bool impossible = false;
  std::vector<std::string> reasons;  // names of failed necessary checks
  std::string overall;

  const CheckResult* find(std::string_view name) const;
  std::string text() const;
  nlohmann::json json() const;
};

// Runs the full battery plus the graph-side checks. Graph strong
// connectivity and the component-count estimate are informational and never
// fail the report.
CheckReport run_all(const Protocol& p, std::size_t max_sweep_n = 8);

}  // namespace consensus
