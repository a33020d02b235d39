#ifndef LATTICEBANDS_VERIFY_HPP
#define LATTICEBANDS_VERIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latticebands/core.hpp"
#include "latticebands/floquet.hpp"

namespace latticebands {

// C_Gamma = C_r + C_r with C_r = sigma(Delta^r_0) u sigma(Delta^r_pi),
// deduplicated by exact index arithmetic.
struct ExceptionalSet {
  int r = 2;
  std::vector<double> values;  // sorted, in [-4,4]

  bool contains(double energy, double tol = 1e-9) const;
};

ExceptionalSet exceptional_energies(int r);

// Two Brillouin-zone points with differing strict eigenvalue counts below E:
// E lies in the interior of band min(count_a,count_b)+1.
struct InteriorCertificate {
  double energy = 0.0;
  Period fiber_period;
  BlochPhase phase_a, phase_b;
  int count_a = 0, count_b = 0;
  int witness_band = 1;
  double margin = 0.0;  // min distance from E to both fiber spectra
};

struct CertificateAttempt {
  BlochPhase phase_a, phase_b;
  std::optional<int> count_a, count_b;
  double margin_a = 0.0, margin_b = 0.0;
};

enum class CertifyStrategy { automatic, corners_only };

struct CertifyOutcome {
  std::optional<InteriorCertificate> certificate;
  std::vector<CertificateAttempt> attempts;
};

// Certifies E in the interior of a band of the free Laplacian, viewed as a
// periodic operator with the given period. Corner counts first; exceptional
// energies fall back to the perturbed-corner searches; E = 0 uses the
// (pi/2, 0) perturbation on the odd-normalized period.
CertifyOutcome certify_interior(double energy, const Period& period,
                                CertifyStrategy strategy = CertifyStrategy::automatic);

// Re-diagonalizes both fibers and confirms the strict witness inequalities.
bool recheck_certificate(const InteriorCertificate& cert);

struct SweepEntry {
  double energy = 0.0;
  std::string status;  // certified | uncertified | excluded
  std::optional<InteriorCertificate> certificate;
  int attempts = 0;
};

struct SweepReport {
  Period period;
  Period normalized_period;
  std::vector<SweepEntry> entries;
  int failures = 0;  // energies that should certify but did not
};

// Certifies a uniform energy sample of (-4,4) plus every exceptional energy
// except {-4,0,4}; E = 0 is attempted iff one period is odd (it is reported
// uncertified, not failed, when both periods are even).
SweepReport verify_theorem_sweep(const Period& period, int energy_samples,
                                 int threads = 1);

// Spectrum of Delta + V^delta on the (2,2) checkerboard; throws when the
// resolution cannot separate the gap at (-delta, delta).
SpectrumApproximation kruger_gap(double delta, int resolution, int threads = 1);

// Finite truncation of a limit-periodic sum: each layer potential is scaled
// to the given amplitude in sup norm; periods must be nested.
Potential limit_periodic_truncation(
    const std::vector<std::pair<Potential, double>>& layers);

struct ThresholdReport {
  std::optional<double> largest_compliant;
  std::optional<double> first_violation;
  std::vector<std::pair<double, int>> component_counts;  // (lambda, components)
};

// Probes the small-coupling constant empirically: component count of
// Delta + lambda*V for each lambda, checked against the two-resolution
// spectra and the parity rule (<=2 for even/even periods, ==1 otherwise).
ThresholdReport estimate_threshold(const Potential& base,
                                   const std::vector<double>& lambda_grid,
                                   int resolution, int threads = 1);

}  // namespace latticebands

#endif
