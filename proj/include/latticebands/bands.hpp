#ifndef LATTICEBANDS_BANDS_HPP
#define LATTICEBANDS_BANDS_HPP

#include <vector>

#include "latticebands/core.hpp"
#include "latticebands/floquet.hpp"

namespace latticebands {

struct Band {
  int index = 1;  // 1..pq
  EnergyInterval enclosure;
  double grid_error = 0.0;
};

struct BandSweep {
  std::vector<Band> bands;
  double grid_error = 0.0;      // h = pi / (resolution - 1)
  double residual_bound = 0.0;  // max eigensolver residual over the grid
};

// Uniform resolution x resolution sweep of [0,pi]^2, corners included.
// Enclosures are certified two-sided within grid_error (phases are
// 1-Lipschitz directions of the fiber matrix).
BandSweep compute_bands(const Potential& v, int resolution, int threads = 1);

SpectrumApproximation spectrum(const Potential& v, int resolution, int threads = 1);

// Open intervals strictly between consecutive components, clipped to
// [-4 - ||V||, 4 + ||V||]. Only gaps wider than 2*error_bound are reported.
std::vector<EnergyInterval> find_gaps(const SpectrumApproximation& spec,
                                      const Potential& v);

struct Quilt {
  double energy = 0.0;
  int resolution = 2;
  std::vector<std::vector<int>> counts;            // counts[i][k], theta outer
  std::vector<std::pair<int, int>> undefined_cells;  // E too close to the fiber
};

Quilt quilt(const Potential& v, double energy, int resolution, int threads = 1);

}  // namespace latticebands

#endif
