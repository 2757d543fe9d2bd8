#include "consensus/simulate.hpp"

#include <cmath>
#include <stdexcept>

namespace consensus {

CompiledProtocol::CompiledProtocol(const Protocol& p) {
  rows_.reserve(p.size());
  for (const auto& f : p.polys) {
    std::vector<CompiledTerm> row;
    for (const auto& [m, c] : f.terms()) {
      CompiledTerm term;
      term.coefficient = c.convert_to<double>();
      for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v] > 0) term.powers.emplace_back(static_cast<int>(v), m[v]);
      row.push_back(std::move(term));
    }
    rows_.push_back(std::move(row));
  }
}

Eigen::VectorXd CompiledProtocol::operator()(const Eigen::VectorXd& x) const {
  if (static_cast<std::size_t>(x.size()) != rows_.size())
    throw std::invalid_argument("state dimension does not match protocol");
  Eigen::VectorXd dx(x.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    double acc = 0.0;
    for (const auto& term : rows_[i]) {
      double val = term.coefficient;
      for (const auto& [v, e] : term.powers) {
        double base = x[v];
        for (int k = 0; k < e; ++k) val *= base;
      }
      acc += val;
    }
    dx[static_cast<Eigen::Index>(i)] = acc;
  }
  return dx;
}

Eigen::VectorXd evaluate(const Protocol& p, const Eigen::VectorXd& x) {
  return CompiledProtocol(p)(x);
}

namespace {

double spread_of(const Eigen::VectorXd& x) {
  return x.maxCoeff() - x.minCoeff();
}

bool state_ok(const Eigen::VectorXd& x, double bound) {
  return x.allFinite() && x.cwiseAbs().maxCoeff() <= bound;
}

}  // namespace

Trajectory integrate(const Protocol& p, const SimulationConfig& cfg) {
  if (cfg.dt <= 0 || cfg.t_end <= 0 || cfg.dt >= cfg.t_end)
    throw std::invalid_argument("invalid step size or horizon");
  if (cfg.spread_tol <= 0)
    throw std::invalid_argument("spread tolerance must be positive");
  if (static_cast<std::size_t>(cfg.x0.size()) != p.size())
    throw std::invalid_argument("initial state dimension mismatch");

  CompiledProtocol f(p);
  Trajectory tr;
  Eigen::VectorXd x = cfg.x0;
  tr.times.push_back(0.0);
  tr.states.push_back(x);

  if (!state_ok(x, cfg.divergence_bound)) {
    tr.outcome = Outcome{OutcomeKind::Diverged, 0.0, 0.0};
    return tr;
  }
  if (spread_of(x) < cfg.spread_tol) {
    tr.outcome = Outcome{OutcomeKind::Converged, 0.0, x.mean()};
    return tr;
  }

  const long steps = static_cast<long>(std::ceil(cfg.t_end / cfg.dt - 1e-12));
  const double h = cfg.dt;
  for (long step = 1; step <= steps; ++step) {
    Eigen::VectorXd k1 = f(x);
    Eigen::VectorXd k2 = f(x + 0.5 * h * k1);
    Eigen::VectorXd k3 = f(x + 0.5 * h * k2);
    Eigen::VectorXd k4 = f(x + h * k3);
    x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    double t = static_cast<double>(step) * h;
    tr.times.push_back(t);
    tr.states.push_back(x);
    if (!state_ok(x, cfg.divergence_bound)) {
      tr.outcome = Outcome{OutcomeKind::Diverged, t, 0.0};
      return tr;
    }
    if (spread_of(x) < cfg.spread_tol) {
      tr.outcome = Outcome{OutcomeKind::Converged, t, x.mean()};
      return tr;
    }
  }
  tr.outcome = Outcome{OutcomeKind::HorizonReached,
                       tr.times.back(), 0.0};
  return tr;
}

ConsensusMetrics consensus_metrics(const Trajectory& tr) {
  if (tr.states.empty())
    throw std::invalid_argument("empty trajectory");
  ConsensusMetrics m;
  m.outcome = tr.outcome;
  double prev_max = tr.states.front().maxCoeff();
  double prev_min = tr.states.front().minCoeff();
  for (const auto& x : tr.states) {
    double mx = x.maxCoeff(), mn = x.minCoeff();
    m.spread.push_back(mx - mn);
    if (mx > prev_max + 1e-9 || mn < prev_min - 1e-9)
      m.interval_contracting = false;
    prev_max = mx;
    prev_min = mn;
  }
  m.final_spread = m.spread.back();
  return m;
}

}  // namespace consensus
