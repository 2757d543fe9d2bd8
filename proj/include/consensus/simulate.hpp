#pragma once

#include <Eigen/Core>
#include <vector>

#include "consensus/protocol.hpp"

namespace consensus {

struct SimulationConfig {
  double dt = 0.01;
  double t_end = 50.0;
  Eigen::VectorXd x0;
  double spread_tol = 1e-6;
  double divergence_bound = 1e9;
};

enum class OutcomeKind { Converged, HorizonReached, Diverged };

struct Outcome {
  OutcomeKind kind = OutcomeKind::HorizonReached;
  double time = 0.0;
  double consensus_value = 0.0;  // state mean at the stopping step
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;
  Outcome outcome;
};

// Protocol with coefficients rounded to double once, for repeated
// right-hand-side evaluation.
class CompiledProtocol {
 public:
  explicit CompiledProtocol(const Protocol& p);

  std::size_t size() const { return rows_.size(); }
  Eigen::VectorXd operator()(const Eigen::VectorXd& x) const;

 private:
  struct CompiledTerm {
    double coefficient;
    std::vector<std::pair<int, int>> powers;  // (variable, exponent)
  };
  std::vector<std::vector<CompiledTerm>> rows_;
};

// f(x); throws on dimension mismatch.
Eigen::VectorXd evaluate(const Protocol& p, const Eigen::VectorXd& x);

// Classical fixed-step 4th-order integration of dx/dt = f(x). Stops early
// as converged when max_i x_i - min_i x_i < spread_tol, and as diverged when
// any component is non-finite or exceeds divergence_bound.
Trajectory integrate(const Protocol& p, const SimulationConfig& cfg);

struct ConsensusMetrics {
  std::vector<double> spread;  // max - min per recorded state
  double final_spread = 0.0;
  // True when max is non-increasing and min non-decreasing at every step
  // (1e-9 slack).
  bool interval_contracting = true;
  Outcome outcome;
};

ConsensusMetrics consensus_metrics(const Trajectory& tr);

}  // namespace consensus
