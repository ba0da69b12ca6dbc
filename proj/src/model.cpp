#include "volfilt/model.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <string>

#include "volfilt/digest.hpp"
#include "volfilt/errors.hpp"

namespace volfilt {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559005768;

bool all_finite(const Eigen::MatrixXd& m) { return m.allFinite(); }
}  // namespace

void ChainSpec::validate() const {
  const int m = num_states();
  if (m < 1) throw InvalidSpecError("chain: needs at least one state");
  if (generator.rows() != m || generator.cols() != m)
    throw InvalidSpecError("chain: generator must be " + std::to_string(m) + "x" +
                           std::to_string(m));
  if (!all_finite(generator)) throw InvalidSpecError("chain: non-finite generator entry");
  for (double a : states)
    if (!std::isfinite(a)) throw InvalidSpecError("chain: non-finite state label");
  for (int i = 0; i < m; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < m; ++j) {
      if (i != j && generator(i, j) < 0.0)
        throw InvalidSpecError("chain: negative off-diagonal rate at (" + std::to_string(i) +
                               "," + std::to_string(j) + ")");
      row_sum += generator(i, j);
    }
    if (std::abs(row_sum) > 1e-12)
      throw InvalidSpecError("chain: generator row " + std::to_string(i) +
                             " does not sum to zero");
  }
  if (initial_dist.size() != m)
    throw InvalidSpecError("chain: initial distribution length mismatch");
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    const double p = initial_dist(i);
    if (!(p >= 0.0)) throw InvalidSpecError("chain: negative initial probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw InvalidSpecError("chain: initial distribution does not sum to one");
}

void MarketMap::validate(int num_states, bool require_intensity) const {
  const auto check_len = [&](const std::vector<double>& v, const char* name) {
    if (static_cast<int>(v.size()) != num_states)
      throw InvalidSpecError(std::string("market: ") + name + " length mismatch");
    for (double x : v)
      if (!std::isfinite(x)) throw InvalidSpecError(std::string("market: non-finite ") + name);
  };
  check_len(drift, "drift");
  check_len(vol, "vol");
  check_len(intensity, "intensity");
  for (double v : vol)
    if (!(v > 0.0)) throw InvalidSpecError("market: volatility must be positive");
  bool any_positive = false;
  for (double n : intensity) {
    if (n < 0.0) throw InvalidSpecError("market: negative intensity");
    if (n > 0.0) any_positive = true;
  }
  if (require_intensity && !any_positive)
    throw InvalidSpecError("market: cox arrivals need at least one positive intensity");
}

void Posterior::validate() const {
  if (probs.size() < 1) throw InvalidSpecError("posterior: empty probability vector");
  double total = 0.0;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    if (!(probs(i) >= 0.0)) throw InvalidSpecError("posterior: negative probability");
    total += probs(i);
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw InvalidSpecError("posterior: probabilities do not sum to one");
}

Eigen::MatrixXd transition_matrix(const ChainSpec& chain, double t) {
  chain.validate();
  if (!(t >= 0.0)) throw RangeError("transition_matrix: t must be non-negative");
  return (t * chain.generator).exp();
}

Eigen::VectorXd stationary_distribution(const ChainSpec& chain) {
  chain.validate();
  const int m = chain.num_states();
  // Solve pi^T Lambda = 0 with the normalization constraint appended.
  Eigen::MatrixXd a(m + 1, m);
  a.topRows(m) = chain.generator.transpose();
  a.row(m).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(m + 1);
  b(m) = 1.0;
  Eigen::VectorXd pi = a.colPivHouseholderQr().solve(b);
  pi = pi.cwiseMax(0.0);
  return pi / pi.sum();
}

namespace {

// One classic RK4 step of pi' = G^T pi.
void rk4_generator_step(const Eigen::MatrixXd& gt, Eigen::VectorXd& pi, double h) {
  const Eigen::VectorXd k1 = gt * pi;
  const Eigen::VectorXd k2 = gt * (pi + 0.5 * h * k1);
  const Eigen::VectorXd k3 = gt * (pi + 0.5 * h * k2);
  const Eigen::VectorXd k4 = gt * (pi + h * k3);
  pi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  pi = pi.cwiseMax(0.0);
  pi /= pi.sum();
}

}  // namespace

Posterior forward_kolmogorov_step(const ChainSpec& chain, const Posterior& pi, double dt,
                                  double dt_max) {
  chain.validate();
  pi.validate();
  if (!(dt > 0.0)) throw RangeError("forward_kolmogorov_step: dt must be positive");
  if (!(dt_max > 0.0)) throw RangeError("forward_kolmogorov_step: dt_max must be positive");
  const Eigen::MatrixXd gt = chain.generator.transpose();
  const int steps = static_cast<int>(std::ceil(dt / dt_max - 1e-12));
  const double h = dt / std::max(steps, 1);
  Posterior out{pi.time + dt, pi.probs};
  for (int s = 0; s < std::max(steps, 1); ++s) rk4_generator_step(gt, out.probs, h);
  return out;
}

ReturnParams log_return_params(const MarketMap& market, const OccupationVector& occ) {
  ReturnParams p;
  for (Eigen::Index i = 0; i < occ.occupation.size(); ++i) {
    const double l = occ.occupation(i);
    const double v2 = market.vol[i] * market.vol[i];
    p.mean += (market.drift[i] - 0.5 * v2) * l;
    p.var += v2 * l;
  }
  return p;
}

double log_return_density(const MarketMap& market, const OccupationVector& occ, double y) {
  if (!(occ.occupation.sum() > 0.0))
    throw DegenerateError("log_return_density: zero total occupation");
  const ReturnParams p = log_return_params(market, occ);
  const double d = y - p.mean;
  return std::exp(-0.5 * d * d / p.var) / std::sqrt(kTwoPi * p.var);
}

std::uint64_t model_digest(const ChainSpec& chain, const MarketMap& market) {
  Digest d;
  d.absorb(chain.num_states());
  d.absorb(chain.states);
  for (int i = 0; i < chain.generator.rows(); ++i)
    for (int j = 0; j < chain.generator.cols(); ++j) d.absorb(chain.generator(i, j));
  for (Eigen::Index i = 0; i < chain.initial_dist.size(); ++i) d.absorb(chain.initial_dist(i));
  d.absorb(market.drift);
  d.absorb(market.vol);
  d.absorb(market.intensity);
  return d.value();
}

}  // namespace volfilt
