#ifndef VOLFILT_SIMULATE_HPP
#define VOLFILT_SIMULATE_HPP

#include <cstdint>
#include <vector>

#include "volfilt/model.hpp"

namespace volfilt {

struct PathSegment {
  int state = 0;
  double start = 0.0;
  double end = 0.0;
};

// Cadlag trajectory of the volatility chain: contiguous segments covering
// [0, horizon], consecutive segments in distinct states.
struct PathSegmentList {
  std::vector<PathSegment> segments;
  double horizon = 0.0;
  int num_states = 0;

  // State occupied at time t (right-continuous; t == horizon maps to the
  // final segment).
  int state_at(double t) const;

  void validate() const;
};

struct TickRecord {
  double tau = 0.0;
  double x = 0.0;
};

// Ordered observations (tau_k, X_k) of the log-price. records[0] is the
// (0, x0) anchor; subsequent times are strictly increasing.
struct TickSeries {
  std::vector<TickRecord> records;

  double x0() const { return records.front().x; }
  // Observations after the anchor.
  int num_ticks() const { return static_cast<int>(records.size()) - 1; }

  // Throws DataError naming the offending row.
  void validate() const;
};

struct SimOutput {
  TickSeries ticks;
  PathSegmentList truth;
  std::uint64_t seed = 0;
  std::uint64_t model_hash = 0;
};

// Samples a chain path on [0, horizon]: initial state from the initial
// distribution, exponential holding times, jumps proportional to
// off-diagonal row entries. Absorbing rows run to the horizon.
PathSegmentList simulate_chain(const ChainSpec& chain, double horizon, std::uint64_t rng_seed);

// Cox arrivals with conditional intensity n(theta_t): homogeneous Poisson
// sampling within each segment. All-zero intensities give an empty list.
std::vector<double> simulate_cox_arrivals(const PathSegmentList& path, const MarketMap& market,
                                          std::uint64_t rng_seed);

// Exact conditional Gaussian increments of the log-price at the given
// times; times must be sorted and inside [0, horizon].
TickSeries simulate_log_price(const PathSegmentList& path, const MarketMap& market,
                              const std::vector<double>& times, double x0,
                              std::uint64_t rng_seed);

// Exact occupation times of each state on (s, t] plus the state at t.
OccupationVector occupation_on_interval(const PathSegmentList& path, double s, double t);

// Arrival times on a fixed grid: h, 2h, ... up to the horizon.
std::vector<double> fixed_grid_times(double horizon, double h);

// Chain path + arrivals + log-price in one call, with the three RNG
// streams split from one seed.
SimOutput simulate_run(const ChainSpec& chain, const MarketMap& market, double horizon,
                       double x0, std::uint64_t rng_seed, bool fixed_grid = false,
                       double grid_step = 0.0);

}  // namespace volfilt

#endif  // VOLFILT_SIMULATE_HPP
