#ifndef VOLFILT_STRUCTURE_TABLE_HPP
#define VOLFILT_STRUCTURE_TABLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "volfilt/model.hpp"

namespace volfilt {

// Monte Carlo tables of the observation kernels consumed by the filter:
//
//   q_ji(t, z)  = E_j[ 1{theta_t = a_i} exp(-int_0^t n(theta_u) du) rho_{0,t}(z) ]
//   qbar_ji(t)  = E_j[ 1{theta_t = a_i} exp(-int_0^t n(theta_u) du) ]
//
// i.e. the products r_ji * p_ji and rbar_ji * p_ji on (t, z) grids, with
// per-cell standard errors and a digest binding the table to the model it
// was built from.
struct StructureTable {
  int num_states = 0;
  std::vector<double> t_grid;  // strictly increasing, all positive
  std::vector<double> z_grid;  // strictly increasing

  // Row-major layout: q[((j*M + i)*T + ti)*Z + zi], q_bar[(j*M + i)*T + ti].
  std::vector<double> q;
  std::vector<double> q_se;
  std::vector<double> q_bar;
  std::vector<double> q_bar_se;

  std::int64_t n_samples = 0;
  std::uint64_t model_hash = 0;

  // Per-state coefficients the table was built with; kept so queries and
  // tail extrapolation are self-contained.
  std::vector<double> states;
  std::vector<double> drift;
  std::vector<double> vol;
  std::vector<double> intensity;

  int t_count() const { return static_cast<int>(t_grid.size()); }
  int z_count() const { return static_cast<int>(z_grid.size()); }

  std::size_t q_index(int j, int i, int ti, int zi) const {
    return ((static_cast<std::size_t>(j) * num_states + i) * t_grid.size() + ti) * z_grid.size() +
           zi;
  }
  std::size_t q_bar_index(int j, int i, int ti) const {
    return (static_cast<std::size_t>(j) * num_states + i) * t_grid.size() + ti;
  }

  double t_min() const { return t_grid.front(); }
  double t_max() const { return t_grid.back(); }
};

// Builds the table by simulating `n_samples` chain paths of length
// t_grid.back() per start state; one path serves every t node (common
// random numbers). `threads` <= 0 picks the hardware count; the result is
// identical for any thread count.
StructureTable build_table(const ChainSpec& chain, const MarketMap& market,
                           const std::vector<double>& t_grid, const std::vector<double>& z_grid,
                           std::int64_t n_samples, std::uint64_t rng_seed, int threads = 0);

// Bilinear interpolation in (t, z). t outside the grid is an error; z
// outside the grid extrapolates along the analytic Gaussian tail of the
// largest state variance.
double query_q(const StructureTable& table, int j, int i, double t, double z);

// Linear interpolation in t; same range contract as query_q.
double query_q_bar(const StructureTable& table, int j, int i, double t);

// Versioned binary round trip with CRC integrity check.
void save_table(const StructureTable& table, const std::string& path);
StructureTable load_table(const std::string& path);
// Additionally verifies the stored digest against `expected_hash`.
StructureTable load_table(const std::string& path, std::uint64_t expected_hash);

// CSV export for inspection: one row per (j, i, t, z) cell.
void export_table_csv(const StructureTable& table, const std::string& path);

}  // namespace volfilt

#endif  // VOLFILT_STRUCTURE_TABLE_HPP
