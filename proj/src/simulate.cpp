#include "volfilt/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "volfilt/errors.hpp"
#include "volfilt/rng.hpp"

namespace volfilt {

int PathSegmentList::state_at(double t) const {
  if (segments.empty()) throw RangeError("path: empty segment list");
  if (t < segments.front().start || t > horizon + 1e-12)
    throw RangeError("path: time outside [0, horizon]");
  // First segment whose end lies strictly beyond t.
  auto it = std::upper_bound(segments.begin(), segments.end(), t,
                             [](double value, const PathSegment& seg) { return value < seg.end; });
  if (it == segments.end()) return segments.back().state;
  return it->state;
}

void PathSegmentList::validate() const {
  if (segments.empty()) throw InvalidSpecError("path: no segments");
  if (segments.front().start != 0.0) throw InvalidSpecError("path: must start at 0");
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    if (!(s.end > s.start)) throw InvalidSpecError("path: empty or reversed segment");
    if (s.state < 0 || s.state >= num_states) throw InvalidSpecError("path: state out of range");
    if (i > 0) {
      if (segments[i - 1].end != s.start) throw InvalidSpecError("path: segments not contiguous");
      if (segments[i - 1].state == s.state)
        throw InvalidSpecError("path: consecutive segments share a state");
    }
  }
  if (std::abs(segments.back().end - horizon) > 1e-12)
    throw InvalidSpecError("path: segments do not cover the horizon");
}

void TickSeries::validate() const {
  if (records.empty()) throw DataError("ticks: empty series");
  if (records.front().tau != 0.0) throw DataError("ticks: row 0 must have tau = 0");
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& r = records[k];
    if (!std::isfinite(r.tau) || !std::isfinite(r.x))
      throw DataError("ticks: non-finite value at row " + std::to_string(k));
    if (k > 0 && !(r.tau > records[k - 1].tau))
      throw DataError("ticks: tau not strictly increasing at row " + std::to_string(k));
  }
}

namespace {

// Shared path sampler; `engine` positioning defines the substream.
void sample_chain_path(const ChainSpec& chain, double horizon, rng::Philox& engine,
                       std::vector<PathSegment>& out) {
  out.clear();
  const int m = chain.num_states();
  int state = engine.discrete(chain.initial_dist, m, 1.0);
  double t = 0.0;
  std::vector<double> jump_weights(m);
  while (t < horizon) {
    const double rate = -chain.generator(state, state);
    double hold = horizon - t;
    if (rate > 0.0) hold = engine.exponential(rate);
    const double end = std::min(t + hold, horizon);
    out.push_back({state, t, end});
    if (end >= horizon) break;
    for (int j = 0; j < m; ++j) jump_weights[j] = j == state ? 0.0 : chain.generator(state, j);
    state = engine.discrete(jump_weights, m, rate);
    t = end;
  }
  out.back().end = horizon;
}

}  // namespace

PathSegmentList simulate_chain(const ChainSpec& chain, double horizon, std::uint64_t rng_seed) {
  chain.validate();
  if (!(horizon > 0.0)) throw RangeError("simulate_chain: horizon must be positive");
  rng::Philox engine(rng_seed, rng::make_stream(rng::kStreamChain, 0));
  PathSegmentList path;
  path.horizon = horizon;
  path.num_states = chain.num_states();
  sample_chain_path(chain, horizon, engine, path.segments);
  return path;
}

std::vector<double> simulate_cox_arrivals(const PathSegmentList& path, const MarketMap& market,
                                          std::uint64_t rng_seed) {
  path.validate();
  market.validate(path.num_states, false);
  rng::Philox engine(rng_seed, rng::make_stream(rng::kStreamArrivals, 0));
  std::vector<double> times;
  for (const auto& seg : path.segments) {
    const double rate = market.intensity[seg.state];
    if (rate <= 0.0) continue;
    double t = seg.start;
    for (;;) {
      t += engine.exponential(rate);
      if (t >= seg.end) break;
      times.push_back(t);
    }
  }
  return times;
}

TickSeries simulate_log_price(const PathSegmentList& path, const MarketMap& market,
                              const std::vector<double>& times, double x0,
                              std::uint64_t rng_seed) {
  path.validate();
  market.validate(path.num_states, false);
  rng::Philox engine(rng_seed, rng::make_stream(rng::kStreamReturns, 0));
  TickSeries ticks;
  ticks.records.push_back({0.0, x0});
  double prev_t = 0.0;
  double x = x0;
  for (double t : times) {
    if (!(t > prev_t)) throw RangeError("simulate_log_price: times not strictly increasing");
    if (t > path.horizon + 1e-12) throw RangeError("simulate_log_price: time beyond horizon");
    const OccupationVector occ = occupation_on_interval(path, prev_t, t);
    const ReturnParams p = log_return_params(market, occ);
    x += p.mean + std::sqrt(p.var) * engine.normal();
    ticks.records.push_back({t, x});
    prev_t = t;
  }
  return ticks;
}

OccupationVector occupation_on_interval(const PathSegmentList& path, double s, double t) {
  if (!(s >= 0.0) || !(s < t) || t > path.horizon + 1e-12)
    throw RangeError("occupation_on_interval: need 0 <= s < t <= horizon");
  OccupationVector occ;
  occ.occupation = Eigen::VectorXd::Zero(path.num_states);
  for (const auto& seg : path.segments) {
    const double lo = std::max(seg.start, s);
    const double hi = std::min(seg.end, t);
    if (hi > lo) occ.occupation(seg.state) += hi - lo;
  }
  occ.end_state = path.state_at(t);
  return occ;
}

std::vector<double> fixed_grid_times(double horizon, double h) {
  if (!(h > 0.0)) throw InvalidSpecError("fixed grid: step must be positive");
  std::vector<double> times;
  const int count = static_cast<int>(std::floor(horizon / h + 1e-9));
  times.reserve(count);
  for (int k = 1; k <= count; ++k) times.push_back(k * h);
  return times;
}

SimOutput simulate_run(const ChainSpec& chain, const MarketMap& market, double horizon,
                       double x0, std::uint64_t rng_seed, bool fixed_grid, double grid_step) {
  SimOutput out;
  out.seed = rng_seed;
  out.model_hash = model_digest(chain, market);
  out.truth = simulate_chain(chain, horizon, rng_seed);
  const std::vector<double> times =
      fixed_grid ? fixed_grid_times(horizon, grid_step)
                 : simulate_cox_arrivals(out.truth, market, rng_seed);
  out.ticks = simulate_log_price(out.truth, market, times, x0, rng_seed);
  return out;
}

}  // namespace volfilt
