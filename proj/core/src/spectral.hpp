#pragma once

#include <vector>

#include "wide/grid.hpp"

namespace wide::detail {

// Real eigenbasis of the 3-point Laplacian on a uniform grid, orthonormal
// with respect to the h-weighted inner product.
//
// periodic:  { 1/sqrt(L), sqrt(2/L) cos(k_r x), sqrt(2/L) sin(k_r x), ... }
//            with k_r = 2*pi*r/L, plus the Nyquist cosine for even N.
// dirichlet: sqrt(2/L) sin(pi (m+1) (i+1) / (N+1)).
//
// freq[m]       = continuum frequency |k| of column m (exact wave speeds,
//                 spectral fractional symbol |k|^{2s}).
// lap_symbol[m] = eigenvalue of the discrete -Laplacian (preconditioning).
struct SpectralBasis {
  int n = 0;
  std::vector<double> vecs;        // column-major, vecs[m * n + i]
  std::vector<double> freq;        // n
  std::vector<double> lap_symbol;  // n

  double vec(int m, int i) const { return vecs[static_cast<size_t>(m) * n + i]; }
};

// Cached per grid; the returned reference stays valid for the process
// lifetime and is safe to use from multiple threads.
const SpectralBasis& spectral_basis(const SpatialGrid& grid);

// coeff[m] = h * sum_i basis_m(x_i) v_i
void to_spectral(const SpectralBasis& basis, const SpatialGrid& grid,
                 std::span<const double> v, std::span<double> coeff);
// v_i = sum_m coeff[m] basis_m(x_i)
void from_spectral(const SpectralBasis& basis, std::span<const double> coeff,
                   std::span<double> v);

}  // namespace wide::detail
