#ifndef LATTICEBANDS_CORE_HPP
#define LATTICEBANDS_CORE_HPP

#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace latticebands {

// Period pair (p,q) of a 2D periodic potential: V_{n+p,m} = V_{n,m+q} = V_{n,m}.
struct Period {
  int p = 1;
  int q = 1;

  Period() = default;
  Period(int p_, int q_) : p(p_), q(q_) {
    if (p < 1 || q < 1) throw std::invalid_argument("Period: p and q must be >= 1");
  }

  bool operator==(const Period& o) const { return p == o.p && q == o.q; }
  bool operator!=(const Period& o) const { return !(*this == o); }
};

// Even normalization (r,r) with r = lcm(p,q,2).
Period normalized_even(const Period& pp);

// Odd normalization: the odd period first, the other bumped to a multiple of 4.
// Defined only when p or q is odd.
Period normalized_odd(const Period& pp);

// Bloch phase point in the reduced zone [0,pi]^2.
struct BlochPhase {
  double theta = 0.0;
  double phi = 0.0;

  BlochPhase() = default;
  BlochPhase(double t, double f) : theta(t), phi(f) {
    constexpr double pi = 3.14159265358979323846;
    if (!(theta >= 0.0 && theta <= pi && phi >= 0.0 && phi <= pi))
      throw std::invalid_argument("BlochPhase: phases must lie in [0,pi]");
  }
};

struct EnergyInterval {
  double lo = 0.0;
  double hi = 0.0;

  EnergyInterval() = default;
  EnergyInterval(double l, double h) : lo(l), hi(h) {
    if (!(lo <= hi)) throw std::invalid_argument("EnergyInterval: lo > hi");
  }
  double width() const { return hi - lo; }
  bool contains(double e) const { return lo <= e && e <= hi; }
};

// One fundamental domain of a (p,q)-periodic potential, row-major with
// n (horizontal, 0..p-1) outer and m (vertical, 0..q-1) inner.
class Potential {
 public:
  Potential() : period_(1, 1), values_(1, 0.0) {}
  Potential(Period period, std::vector<double> values);

  static Potential zero(Period period);
  // V^delta_{n,m} = delta * (-1)^{n+m} on a (2,2) cell.
  static Potential checkerboard(double delta);

  const Period& period() const { return period_; }
  double at(int n, int m) const {
    n %= period_.p; if (n < 0) n += period_.p;
    m %= period_.q; if (m < 0) m += period_.q;
    return values_[static_cast<std::size_t>(n) * period_.q + m];
  }
  const std::vector<double>& values() const { return values_; }

  double sup_norm() const;
  bool is_zero() const;

  // Re-tile to a larger commensurate period (p | p', q | q').
  Potential retiled(Period target) const;

  Potential scaled(double lambda) const;
  Potential shifted(double c) const;

 private:
  Period period_;
  std::vector<double> values_;  // p*q entries
};

enum class PotentialFormat { json, csv };

// Reads {"p":..,"q":..,"values":[[..]]} JSON or p rows x q columns CSV
// (lines starting with '#' are skipped).
Potential load_potential(const std::string& path, PotentialFormat format);
Potential parse_potential_json(const std::string& text);
Potential parse_potential_csv(const std::string& text);

// Minimal sorted disjoint cover of the input; intervals closer than merge_tol merge.
std::vector<EnergyInterval> interval_union(std::vector<EnergyInterval> intervals,
                                           double merge_tol);

// A certified approximation of a spectrum as a disjoint union of intervals.
struct SpectrumApproximation {
  std::vector<EnergyInterval> intervals;
  double error_bound = 0.0;

  std::size_t component_count() const { return intervals.size(); }
};

}  // namespace latticebands

#endif
