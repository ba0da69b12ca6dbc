#ifndef VOLFILT_MODEL_HPP
#define VOLFILT_MODEL_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace volfilt {

// Finite-state volatility chain: state labels a_1..a_M, generator matrix
// and initial distribution. Labels are carried as numeric values but
// states are always addressed by index; duplicate label values are legal.
struct ChainSpec {
  std::vector<double> states;
  Eigen::MatrixXd generator;     // entries lambda(a_i, a_j), rows sum to 0
  Eigen::VectorXd initial_dist;  // length M, sums to 1

  int num_states() const { return static_cast<int>(states.size()); }

  // Throws InvalidSpecError on a structural violation.
  void validate() const;
};

// Per-state market coefficients: drift m(a_i), volatility v(a_i) and
// observation intensity n(a_i).
struct MarketMap {
  std::vector<double> drift;
  std::vector<double> vol;
  std::vector<double> intensity;

  // `require_intensity` additionally demands at least one n(a_i) > 0.
  void validate(int num_states, bool require_intensity) const;
};

// Time spent in each state over an interval plus the state at its end.
struct OccupationVector {
  Eigen::VectorXd occupation;  // L_i >= 0, sums to the interval length
  int end_state = 0;
};

// Probability vector over chain states at a time stamp.
struct Posterior {
  double time = 0.0;
  Eigen::VectorXd probs;

  void validate() const;
};

// P(t) = exp(t * generator); row j is the law of the state at time t when
// starting from a_j.
Eigen::MatrixXd transition_matrix(const ChainSpec& chain, double t);

// Solves pi = L^T pi (unique for irreducible chains); used for grid
// defaults, not part of the filter itself.
Eigen::VectorXd stationary_distribution(const ChainSpec& chain);

// Advances d pi_i/dt = sum_j lambda(a_j, a_i) pi_j by dt with fixed-step
// classic RK4 (steps no longer than dt_max) and renormalizes after every
// step.
Posterior forward_kolmogorov_step(const ChainSpec& chain, const Posterior& pi, double dt,
                                  double dt_max = 1e-3);

// Gaussian parameters of a log-return conditional on occupation times:
// mean sum_i (m_i - v_i^2/2) L_i and variance sum_i v_i^2 L_i.
struct ReturnParams {
  double mean = 0.0;
  double var = 0.0;
};
ReturnParams log_return_params(const MarketMap& market, const OccupationVector& occ);

// Conditional density of a log-return y given the occupation times.
double log_return_density(const MarketMap& market, const OccupationVector& occ, double y);

// Digest binding a (chain, market) pair; tables and run artifacts carry it.
std::uint64_t model_digest(const ChainSpec& chain, const MarketMap& market);

}  // namespace volfilt

#endif  // VOLFILT_MODEL_HPP
