#include <doctest.h>

#include <cmath>
#include <random>

#include "latticebands/bands.hpp"
#include "latticebands/laplace1d.hpp"

using namespace latticebands;

TEST_CASE("bottom band of the free Laplacian") {
  for (int r : {2, 4, 6}) {
    const BandSweep sweep = compute_bands(Potential::zero(Period(r, r)), 33);
    const Band& b1 = sweep.bands.front();
    CHECK(std::abs(b1.enclosure.lo + 4.0) <= b1.grid_error);
    CHECK(std::abs(b1.enclosure.hi + 4.0 * std::cos(kPi / r)) <= b1.grid_error);
  }
}

TEST_CASE("twenty bands of (5,4) union to [-4,4]") {
  const BandSweep sweep = compute_bands(Potential::zero(Period(5, 4)), 33);
  REQUIRE(sweep.bands.size() == 20);
  std::vector<EnergyInterval> enclosures;
  for (const Band& b : sweep.bands) enclosures.push_back(b.enclosure);
  const auto u = interval_union(enclosures, 1e-9);
  REQUIRE(u.size() == 1);
  CHECK(std::abs(u[0].lo + 4.0) <= sweep.grid_error);
  CHECK(std::abs(u[0].hi - 4.0) <= sweep.grid_error);

  // band nesting: enclosures ordered in j
  for (std::size_t j = 1; j < sweep.bands.size(); ++j) {
    CHECK(sweep.bands[j - 1].enclosure.lo <= sweep.bands[j].enclosure.lo + 1e-12);
    CHECK(sweep.bands[j - 1].enclosure.hi <= sweep.bands[j].enclosure.hi + 1e-12);
  }

  // bands touch for the free operator
  for (std::size_t j = 1; j < sweep.bands.size(); ++j)
    CHECK(sweep.bands[j - 1].enclosure.hi >=
          sweep.bands[j].enclosure.lo - sweep.grid_error);
}

TEST_CASE("constant potential shifts every enclosure") {
  const BandSweep free_sweep = compute_bands(Potential::zero(Period(3, 2)), 17);
  const Potential c(Period(3, 2), std::vector<double>(6, 0.25));
  const BandSweep shifted = compute_bands(c, 17);
  for (std::size_t j = 0; j < free_sweep.bands.size(); ++j) {
    CHECK(shifted.bands[j].enclosure.lo ==
          doctest::Approx(free_sweep.bands[j].enclosure.lo + 0.25));
    CHECK(shifted.bands[j].enclosure.hi ==
          doctest::Approx(free_sweep.bands[j].enclosure.hi + 0.25));
  }
}

TEST_CASE("spectrum of the free operator is one component") {
  for (auto pp : {Period(5, 4), Period(2, 2), Period(1, 3)}) {
    const SpectrumApproximation spec = spectrum(Potential::zero(pp), 65);
    REQUIRE(spec.component_count() == 1);
    CHECK(std::abs(spec.intervals[0].lo + 4.0) <= spec.error_bound);
    CHECK(std::abs(spec.intervals[0].hi - 4.0) <= spec.error_bound);
  }
}

TEST_CASE("checkerboard spectrum: two components, gap at (-delta, delta)") {
  const double delta = 0.5;
  const SpectrumApproximation spec =
      spectrum(Potential::checkerboard(delta), 65);
  REQUIRE(spec.component_count() == 2);
  const double outer = std::sqrt(16.0 + delta * delta);
  CHECK(std::abs(spec.intervals[0].lo + outer) <= spec.error_bound);
  CHECK(std::abs(spec.intervals[0].hi + delta) <= spec.error_bound);
  CHECK(std::abs(spec.intervals[1].lo - delta) <= spec.error_bound);
  CHECK(std::abs(spec.intervals[1].hi - outer) <= spec.error_bound);

  // spectrum symmetric under E -> -E
  CHECK(std::abs(spec.intervals[0].lo + spec.intervals[1].hi) <=
        2 * spec.error_bound);
  CHECK(std::abs(spec.intervals[0].hi + spec.intervals[1].lo) <=
        2 * spec.error_bound);

  const auto gaps = find_gaps(spec, Potential::checkerboard(delta));
  REQUIRE(gaps.size() == 1);
  CHECK(gaps[0].contains(0.0));
  CHECK(std::abs(gaps[0].lo + delta) <= spec.error_bound);
  CHECK(std::abs(gaps[0].hi - delta) <= spec.error_bound);

  CHECK(find_gaps(spectrum(Potential::zero(Period(2, 2)), 33),
                  Potential::zero(Period(2, 2)))
            .empty());
}

TEST_CASE("refinement never contradicts the coarse certification") {
  const Potential v = Potential::checkerboard(0.4);
  const BandSweep coarse = compute_bands(v, 17);
  const BandSweep fine = compute_bands(v, 33);
  for (std::size_t j = 0; j < coarse.bands.size(); ++j) {
    // the true band lies within either enclosure padded by its grid error
    CHECK(fine.bands[j].enclosure.lo >=
          coarse.bands[j].enclosure.lo - coarse.grid_error);
    CHECK(fine.bands[j].enclosure.hi <=
          coarse.bands[j].enclosure.hi + coarse.grid_error);
    // refinement can only grow the certified inner enclosure
    CHECK(fine.bands[j].enclosure.lo <= coarse.bands[j].enclosure.lo + 1e-12);
    CHECK(fine.bands[j].enclosure.hi >= coarse.bands[j].enclosure.hi - 1e-12);
  }
}

TEST_CASE("quilt counts and monotonicity") {
  const Potential v0 = Potential::zero(Period(8, 10));
  const Quilt q = quilt(v0, -0.01, 41);
  CHECK(q.counts.front().front() % 2 == 1);  // (0,0) corner
  CHECK(q.counts.back().back() % 2 == 0);    // (pi,pi) corner

  const Quilt below = quilt(v0, -5.0, 9);
  for (const auto& row : below.counts)
    for (int c : row) CHECK(c == 0);
  CHECK(below.undefined_cells.empty());

  const Quilt q2 = quilt(v0, 0.35, 41);
  for (int i = 0; i < 41; ++i)
    for (int k = 0; k < 41; ++k)
      if (q.counts[i][k] >= 0 && q2.counts[i][k] >= 0)
        CHECK(q.counts[i][k] <= q2.counts[i][k]);
}

TEST_CASE("threaded sweeps are deterministic") {
  const Potential v = Potential::checkerboard(0.2);
  const BandSweep serial = compute_bands(v, 21, 1);
  const BandSweep parallel = compute_bands(v, 21, 4);
  for (std::size_t j = 0; j < serial.bands.size(); ++j) {
    CHECK(serial.bands[j].enclosure.lo == parallel.bands[j].enclosure.lo);
    CHECK(serial.bands[j].enclosure.hi == parallel.bands[j].enclosure.hi);
  }
  const Quilt qa = quilt(Potential::zero(Period(4, 4)), 0.37, 21, 1);
  const Quilt qb = quilt(Potential::zero(Period(4, 4)), 0.37, 21, 3);
  CHECK(qa.counts == qb.counts);
}
