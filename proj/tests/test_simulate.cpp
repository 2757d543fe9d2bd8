#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "consensus/protocol_io.hpp"
#include "consensus/simulate.hpp"

using namespace consensus;

namespace {

const char* kLinear5 =
    "vars x1 x2 x3 x4 x5\n"
    "f1 = x2 + x5 - 2*x1\n"
    "f2 = x1 + x3 + x4 - 3*x2\n"
    "f3 = 0\n"
    "f4 = x2 - x4\n"
    "f5 = x1 + x3 - 2*x5\n";

const char* kSymmetricPair =
    "vars x1 x2\n"
    "f1 = x2 - x1\n"
    "f2 = x1 - x2\n";

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double d : v) x[i++] = d;
  return x;
}

}  // namespace

TEST_CASE("evaluate") {
  Protocol p = parse_protocol(kLinear5);
  Eigen::VectorXd dx = evaluate(p, vec({1, 2, 3, 4, 5}));
  CHECK(dx[0] == doctest::Approx(5.0));
  CHECK(dx[1] == doctest::Approx(2.0));
  CHECK(dx[2] == 0.0);
  CHECK(dx[3] == doctest::Approx(-2.0));
  CHECK(dx[4] == doctest::Approx(-6.0));

  Protocol q = parse_protocol("vars x y\nf1 = 1/2*x*y^2\nf2 = -x\n");
  Eigen::VectorXd dq = evaluate(q, vec({3, 2}));
  CHECK(dq[0] == doctest::Approx(6.0));
  CHECK(dq[1] == doctest::Approx(-3.0));

  CHECK_THROWS_AS(evaluate(p, vec({1, 2})), std::invalid_argument);
}

TEST_CASE("linear spanning-tree protocol converges to the pinned value") {
  Protocol p = parse_protocol(kLinear5);
  SimulationConfig cfg;
  cfg.x0 = vec({1, 2, 3, 4, 5});
  Trajectory tr = integrate(p, cfg);
  CHECK(tr.outcome.kind == OutcomeKind::Converged);
  CHECK(tr.outcome.time > 0.0);
  // f3 = 0 pins agent 3 at its start value, so everyone meets at 3.
  CHECK(tr.outcome.consensus_value == doctest::Approx(3.0).epsilon(1e-6));

  // The pinned component never moves, bit for bit.
  for (const auto& x : tr.states) CHECK(x[2] == 3.0);

  ConsensusMetrics m = consensus_metrics(tr);
  CHECK(m.outcome.kind == OutcomeKind::Converged);
  CHECK(m.final_spread < 1e-6);
  CHECK(m.interval_contracting);
  CHECK(m.spread.front() == doctest::Approx(4.0));
}

TEST_CASE("zero dynamics reach the horizon unchanged") {
  Protocol p = parse_protocol("vars x1 x2\nf1 = 0\nf2 = 0\n");
  SimulationConfig cfg;
  cfg.x0 = vec({0, 1});
  Trajectory tr = integrate(p, cfg);
  CHECK(tr.outcome.kind == OutcomeKind::HorizonReached);
  CHECK(tr.times.size() == 5001);  // t_end/dt steps plus the initial state
  CHECK(tr.times.back() == doctest::Approx(50.0));
  CHECK(tr.states.back()[0] == 0.0);
  CHECK(tr.states.back()[1] == 1.0);
  CHECK(consensus_metrics(tr).final_spread == doctest::Approx(1.0));
}

TEST_CASE("finite-time blowup is reported as divergence") {
  Protocol p = parse_protocol("vars x1 x2\nf1 = x1^2\nf2 = 0\n");
  SimulationConfig cfg;
  cfg.x0 = vec({10, 0});
  cfg.divergence_bound = 1e6;
  Trajectory tr = integrate(p, cfg);
  CHECK(tr.outcome.kind == OutcomeKind::Diverged);
  CHECK(tr.outcome.time > 0.0);
  CHECK(tr.outcome.time < 1.0);  // dx/dt = x^2 from 10 blows up near t = 0.1
}

TEST_CASE("immediate stopping at t = 0") {
  Protocol p = parse_protocol(kSymmetricPair);
  SimulationConfig cfg;
  cfg.x0 = vec({4, 4});
  Trajectory tr = integrate(p, cfg);
  CHECK(tr.outcome.kind == OutcomeKind::Converged);
  CHECK(tr.outcome.time == 0.0);
  CHECK(tr.outcome.consensus_value == doctest::Approx(4.0));
  CHECK(tr.states.size() == 1);

  cfg.x0 = vec({4, std::nan("")});
  CHECK(integrate(p, cfg).outcome.kind == OutcomeKind::Diverged);
}

TEST_CASE("rk4 matches the closed-form solution of the symmetric pair") {
  // x1(t) = 1 - exp(-2t), x2(t) = 1 + exp(-2t) from x0 = (0, 2).
  Protocol p = parse_protocol(kSymmetricPair);
  SimulationConfig cfg;
  cfg.x0 = vec({0, 2});
  cfg.t_end = 1.0;
  cfg.spread_tol = 1e-12;

  auto error_at_t1 = [&](double dt) {
    SimulationConfig c = cfg;
    c.dt = dt;
    Trajectory tr = integrate(p, c);
    const Eigen::VectorXd& x = tr.states.back();
    double e = std::exp(-2.0);
    return std::max(std::abs(x[0] - (1 - e)), std::abs(x[1] - (1 + e)));
  };

  double coarse = error_at_t1(0.01);
  CHECK(coarse < 1e-8);
  // Fourth-order method: halving the step shrinks the error by about 16.
  double fine = error_at_t1(0.005);
  CHECK(fine < coarse / 10.0);

  // The symmetric coupling conserves the mean.
  Trajectory tr = integrate(p, cfg);
  for (const auto& x : tr.states) CHECK(x.mean() == doctest::Approx(1.0));
}

TEST_CASE("configuration validation") {
  Protocol p = parse_protocol(kSymmetricPair);
  SimulationConfig cfg;
  cfg.x0 = vec({0, 1});

  SimulationConfig bad = cfg;
  bad.dt = 0;
  CHECK_THROWS_AS(integrate(p, bad), std::invalid_argument);
  bad = cfg;
  bad.dt = 100.0;  // dt >= t_end
  CHECK_THROWS_AS(integrate(p, bad), std::invalid_argument);
  bad = cfg;
  bad.spread_tol = 0;
  CHECK_THROWS_AS(integrate(p, bad), std::invalid_argument);
  bad = cfg;
  bad.x0 = vec({0, 1, 2});
  CHECK_THROWS_AS(integrate(p, bad), std::invalid_argument);

  CHECK_THROWS_AS(consensus_metrics(Trajectory{}), std::invalid_argument);
}

TEST_CASE("metrics flag an expanding interval") {
  Protocol p = parse_protocol("vars x1 x2\nf1 = x1\nf2 = -x2\n");
  SimulationConfig cfg;
  cfg.x0 = vec({1, -1});
  cfg.t_end = 1.0;
  Trajectory tr = integrate(p, cfg);
  ConsensusMetrics m = consensus_metrics(tr);
  CHECK_FALSE(m.interval_contracting);
  CHECK(m.spread.back() > m.spread.front());
}
