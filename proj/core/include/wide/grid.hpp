#pragma once

#include <span>
#include <vector>

namespace wide {

enum class GridKind { periodic, dirichlet };

/// Uniform 1-D spatial grid.
///
/// Periodic grids store N points x_i = i*h on [0, L) with h = L/N and
/// identify x_N with x_0.  Dirichlet grids store the N interior points
/// x_i = (i+1)*h of [0, L] with h = L/(N+1); boundary values are 0 and
/// are never stored.
struct SpatialGrid {
  GridKind kind = GridKind::periodic;
  double length = 0.0;  // domain measure L
  int n_points = 0;     // stored point count N
  double h = 0.0;

  double point(int i) const {
    return kind == GridKind::periodic ? i * h : (i + 1) * h;
  }
  bool operator==(const SpatialGrid&) const = default;
};

SpatialGrid build_spatial_grid(GridKind kind, double length, int n_points);

/// Uniform time grid on [0, t_max] with the integrated exponential weight
/// of each node-centered cell.
///
/// cell_weights[j] = integral of exp(-t/epsilon) over cell j, evaluated in
/// closed form; cells are centered at the nodes with half-cells at both
/// endpoints, so the weights stay meaningful even when epsilon << dt.
/// Trailing entries may underflow to exactly zero once exp(-t/epsilon) does.
struct TimeGrid {
  double epsilon = 0.0;
  double dt = 0.0;
  double t_obs = 0.0;
  double t_max = 0.0;
  int n_steps = 0;  // M, nodes are t_j = j*dt for j = 0..M
  std::vector<double> cell_weights;

  double node(int j) const { return j * dt; }
  /// Last node index with t_j <= t_obs (+ round-off slack).
  int obs_steps() const;
  bool operator==(const TimeGrid&) const = default;
};

TimeGrid build_time_grid(double epsilon, double t_obs, double dt,
                         double tail_factor = 40.0);

/// Real-valued function sampled on a SpatialGrid.
struct SpatialField {
  SpatialGrid grid;
  std::vector<double> values;

  int size() const { return static_cast<int>(values.size()); }
  double& operator[](int i) { return values[i]; }
  double operator[](int i) const { return values[i]; }
};

SpatialField make_field(const SpatialGrid& grid, double fill = 0.0);

/// h-weighted L2 pairing: h * sum_i a_i b_i.
double inner_product(const SpatialField& a, const SpatialField& b);
double l2_norm(const SpatialField& a);

/// u(t_j, x_i) on a TimeGrid x SpatialGrid pair, row-major in time.
struct SpaceTimeField {
  SpatialGrid sgrid;
  TimeGrid tgrid;
  std::vector<double> values;  // (M+1) * N

  int rows() const { return tgrid.n_steps + 1; }
  int cols() const { return sgrid.n_points; }
  double& at(int j, int i) { return values[static_cast<size_t>(j) * cols() + i]; }
  double at(int j, int i) const { return values[static_cast<size_t>(j) * cols() + i]; }
  std::span<double> row(int j) {
    return {values.data() + static_cast<size_t>(j) * cols(), static_cast<size_t>(cols())};
  }
  std::span<const double> row(int j) const {
    return {values.data() + static_cast<size_t>(j) * cols(), static_cast<size_t>(cols())};
  }
  SpatialField row_field(int j) const;
};

SpaceTimeField make_space_time_field(const SpatialGrid& sgrid, const TimeGrid& tgrid,
                                     double fill = 0.0);

/// First rows 0..tgrid.obs_steps() of u, with the time grid trimmed to the
/// observation window.
SpaceTimeField restrict_to_observation(const SpaceTimeField& u);

/// Trapezoid-in-time, h-weighted-in-space L2 norm of (a - b) over the rows
/// both fields share.  Used for Cauchy differences and oracle comparisons.
double space_time_l2_diff(const SpaceTimeField& a, const SpaceTimeField& b);
double space_time_l2_norm(const SpaceTimeField& a);

namespace detail {
bool all_finite(std::span<const double> xs);
}

}  // namespace wide
