#include "wide/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wide/errors.hpp"

namespace wide {

SpatialGrid build_spatial_grid(GridKind kind, double length, int n_points) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw InvalidDomainError("spatial grid: length must be positive, got " +
                             std::to_string(length));
  }
  if (n_points < 4) {
    throw InvalidDomainError("spatial grid: need at least 4 points, got " +
                             std::to_string(n_points));
  }
  SpatialGrid g;
  g.kind = kind;
  g.length = length;
  g.n_points = n_points;
  g.h = kind == GridKind::periodic ? length / n_points : length / (n_points + 1);
  return g;
}

int TimeGrid::obs_steps() const {
  int j = static_cast<int>(std::floor(t_obs / dt + 0.5));
  return std::clamp(j, 0, n_steps);
}

TimeGrid build_time_grid(double epsilon, double t_obs, double dt, double tail_factor) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InvalidDomainError("time grid: epsilon must be positive");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InvalidDomainError("time grid: dt must be positive");
  }
  if (!(t_obs > 0.0) || !std::isfinite(t_obs)) {
    throw InvalidDomainError("time grid: t_obs must be positive");
  }
  if (dt >= t_obs) {
    throw InvalidDomainError("time grid: dt = " + std::to_string(dt) +
                             " does not resolve t_obs = " + std::to_string(t_obs));
  }
  if (tail_factor < 10.0) {
    throw InvalidDomainError("time grid: tail factor must be >= 10");
  }

  TimeGrid g;
  g.epsilon = epsilon;
  g.dt = dt;
  g.t_obs = t_obs;
  double horizon = t_obs + tail_factor * epsilon;
  g.n_steps = static_cast<int>(std::ceil(horizon / dt - 1e-12));
  g.t_max = g.n_steps * dt;

  // omega_j = eps * (exp(-a/eps) - exp(-b/eps)) over the node-centered cell
  // [a, b]; evaluated directly so nothing cancels even when eps << dt.
  g.cell_weights.resize(g.n_steps + 1);
  for (int j = 0; j <= g.n_steps; ++j) {
    double a = std::max(0.0, (j - 0.5) * dt);
    double b = std::min(g.t_max, (j + 0.5) * dt);
    g.cell_weights[j] = epsilon * (std::exp(-a / epsilon) - std::exp(-b / epsilon));
  }
  return g;
}

SpatialField make_field(const SpatialGrid& grid, double fill) {
  SpatialField f;
  f.grid = grid;
  f.values.assign(grid.n_points, fill);
  return f;
}

double inner_product(const SpatialField& a, const SpatialField& b) {
  if (a.grid != b.grid || a.values.size() != b.values.size()) {
    throw GridMismatchError("inner_product: fields live on different grids");
  }
  double s = 0.0;
  for (size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * b.values[i];
  return a.grid.h * s;
}

double l2_norm(const SpatialField& a) { return std::sqrt(inner_product(a, a)); }

SpatialField SpaceTimeField::row_field(int j) const {
  SpatialField f;
  f.grid = sgrid;
  auto r = row(j);
  f.values.assign(r.begin(), r.end());
  return f;
}

SpaceTimeField make_space_time_field(const SpatialGrid& sgrid, const TimeGrid& tgrid,
                                     double fill) {
  SpaceTimeField u;
  u.sgrid = sgrid;
  u.tgrid = tgrid;
  u.values.assign(static_cast<size_t>(tgrid.n_steps + 1) * sgrid.n_points, fill);
  return u;
}

SpaceTimeField restrict_to_observation(const SpaceTimeField& u) {
  int j_obs = u.tgrid.obs_steps();
  SpaceTimeField r;
  r.sgrid = u.sgrid;
  r.tgrid = u.tgrid;
  r.tgrid.n_steps = j_obs;
  r.tgrid.t_max = j_obs * u.tgrid.dt;
  r.tgrid.cell_weights.assign(u.tgrid.cell_weights.begin(),
                              u.tgrid.cell_weights.begin() + j_obs + 1);
  r.values.assign(u.values.begin(),
                  u.values.begin() + static_cast<size_t>(j_obs + 1) * u.cols());
  return r;
}

namespace {

double trapezoid_weight(int j, int last, double dt) {
  return (j == 0 || j == last) ? 0.5 * dt : dt;
}

}  // namespace

double space_time_l2_diff(const SpaceTimeField& a, const SpaceTimeField& b) {
  if (a.sgrid != b.sgrid) {
    throw GridMismatchError("space_time_l2_diff: spatial grids differ");
  }
  if (std::abs(a.tgrid.dt - b.tgrid.dt) > 1e-14 * std::max(a.tgrid.dt, b.tgrid.dt)) {
    throw GridMismatchError("space_time_l2_diff: time steps differ");
  }
  int rows = std::min(a.rows(), b.rows());
  int n = a.cols();
  double acc = 0.0;
  for (int j = 0; j < rows; ++j) {
    double rowsum = 0.0;
    auto ra = a.row(j);
    auto rb = b.row(j);
    for (int i = 0; i < n; ++i) {
      double d = ra[i] - rb[i];
      rowsum += d * d;
    }
    acc += trapezoid_weight(j, rows - 1, a.tgrid.dt) * a.sgrid.h * rowsum;
  }
  return std::sqrt(acc);
}

double space_time_l2_norm(const SpaceTimeField& a) {
  SpaceTimeField zero = a;
  std::fill(zero.values.begin(), zero.values.end(), 0.0);
  return space_time_l2_diff(a, zero);
}

namespace detail {
bool all_finite(std::span<const double> xs) {
  for (double x : xs) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}
}  // namespace detail

}  // namespace wide
