#ifndef LATTICEBANDS_FLOQUET_HPP
#define LATTICEBANDS_FLOQUET_HPP

#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "latticebands/core.hpp"

namespace latticebands {

// Fiber operator H_{theta,phi} on one period cell, vectorized as
// v[n*q + m] = psi_{n,m}. Hermitian pq x pq.
struct FiberMatrix {
  Period period;
  BlochPhase phase;
  Eigen::MatrixXcd entries;
};

struct FiberSpectrum {
  Period period;
  BlochPhase phase;
  std::vector<double> eigenvalues;  // ascending, with multiplicity
  double residual_bound = 0.0;
};

// Kronecker-sum assembly: Delta^p_theta (x) I + I (x) Delta^q_phi + diag(vec V).
FiberMatrix build_fiber(const Potential& v, const BlochPhase& phase);

struct HermitianEigenResult {
  std::vector<double> eigenvalues;  // ascending
  double residual_bound = 0.0;      // max_j ||M v_j - lambda_j v_j||_2
};

// Dense Hermitian solve with an independent residual check.
HermitianEigenResult hermitian_eigenvalues(const Eigen::MatrixXcd& m);

// Sorted multiset {lambda^p_{k1}(theta) + lambda^q_{k2}(phi)}.
std::vector<double> separable_eigenvalues(int p, int q, const BlochPhase& phase);

// Separable fast path for V == 0, dense solve otherwise.
FiberSpectrum fiber_eigenvalues(const Potential& v, const BlochPhase& phase);

// Strict count below E, or nothing when E is within safety_margin of the
// fiber spectrum. margin is always the distance from E to the spectrum.
struct CountBelowResult {
  std::optional<int> count;
  double margin = 0.0;
};

CountBelowResult count_below(const Potential& v, const BlochPhase& phase, double energy,
                             double safety_margin);

enum class CornerPhase { zero_zero, pi_pi };

// Eigenvalues of the free fiber at a corner phase with exact multiplicities,
// grouped by integer Bloch-index (cyclotomic) arithmetic, never by floating
// comparison. Ascending in value.
std::vector<std::pair<double, int>> multiplicity_profile(int p, int q,
                                                         CornerPhase corner);

}  // namespace latticebands

#endif
