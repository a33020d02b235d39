#include "latticebands/bands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "latticebands/laplace1d.hpp"
#include "latticebands/parallel.hpp"

namespace latticebands {

BandSweep compute_bands(const Potential& v, int resolution, int threads) {
  if (resolution < 2) throw std::invalid_argument("compute_bands: resolution < 2");
  const int nbands = v.period().p * v.period().q;
  const double h = kPi / (resolution - 1);

  struct RowResult {
    std::vector<double> lo, hi;
    double residual = 0.0;
  };
  std::vector<RowResult> rows(resolution);

  parallel_for_index(resolution, threads, [&](int i) {
    RowResult row;
    row.lo.assign(nbands, std::numeric_limits<double>::infinity());
    row.hi.assign(nbands, -std::numeric_limits<double>::infinity());
    const double theta = std::min(kPi, h * i);
    for (int k = 0; k < resolution; ++k) {
      const double phi = std::min(kPi, h * k);
      FiberSpectrum spec = fiber_eigenvalues(v, BlochPhase(theta, phi));
      row.residual = std::max(row.residual, spec.residual_bound);
      for (int j = 0; j < nbands; ++j) {
        row.lo[j] = std::min(row.lo[j], spec.eigenvalues[j]);
        row.hi[j] = std::max(row.hi[j], spec.eigenvalues[j]);
      }
    }
    rows[i] = std::move(row);
  });

  BandSweep sweep;
  sweep.grid_error = h;
  sweep.bands.reserve(nbands);
  std::vector<double> lo(nbands, std::numeric_limits<double>::infinity());
  std::vector<double> hi(nbands, -std::numeric_limits<double>::infinity());
  for (const RowResult& row : rows) {
    sweep.residual_bound = std::max(sweep.residual_bound, row.residual);
    for (int j = 0; j < nbands; ++j) {
      lo[j] = std::min(lo[j], row.lo[j]);
      hi[j] = std::max(hi[j], row.hi[j]);
    }
  }
  for (int j = 0; j < nbands; ++j)
    sweep.bands.push_back(Band{j + 1, EnergyInterval(lo[j], hi[j]), h});
  return sweep;
}

SpectrumApproximation spectrum(const Potential& v, int resolution, int threads) {
  const BandSweep sweep = compute_bands(v, resolution, threads);
  const double err = sweep.grid_error + sweep.residual_bound;
  std::vector<EnergyInterval> enclosures;
  enclosures.reserve(sweep.bands.size());
  for (const Band& b : sweep.bands) enclosures.push_back(b.enclosure);
  SpectrumApproximation out;
  out.intervals = interval_union(std::move(enclosures), 2.0 * err);
  out.error_bound = err;
  return out;
}

std::vector<EnergyInterval> find_gaps(const SpectrumApproximation& spec,
                                      const Potential& v) {
  const double bound = 4.0 + v.sup_norm();
  std::vector<EnergyInterval> gaps;
  for (std::size_t i = 1; i < spec.intervals.size(); ++i) {
    double lo = std::max(spec.intervals[i - 1].hi, -bound);
    double hi = std::min(spec.intervals[i].lo, bound);
    if (hi - lo > 2.0 * spec.error_bound) gaps.emplace_back(lo, hi);
  }
  return gaps;
}

Quilt quilt(const Potential& v, double energy, int resolution, int threads) {
  if (resolution < 2) throw std::invalid_argument("quilt: resolution < 2");
  const double h = kPi / (resolution - 1);
  Quilt q;
  q.energy = energy;
  q.resolution = resolution;
  q.counts.assign(resolution, std::vector<int>(resolution, -1));

  std::vector<std::vector<std::pair<int, int>>> undef(resolution);
  parallel_for_index(resolution, threads, [&](int i) {
    const double theta = std::min(kPi, h * i);
    for (int k = 0; k < resolution; ++k) {
      CountBelowResult res = count_below(
          v, BlochPhase(theta, std::min(kPi, h * k)), energy, 1e-9);
      if (res.count)
        q.counts[i][k] = *res.count;
      else
        undef[i].emplace_back(i, k);
    }
  });
  for (const auto& row : undef)
    q.undefined_cells.insert(q.undefined_cells.end(), row.begin(), row.end());
  return q;
}

}  // namespace latticebands
