#ifndef LATTICEBANDS_LAPLACE1D_HPP
#define LATTICEBANDS_LAPLACE1D_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace latticebands {

inline constexpr double kPi = 3.14159265358979323846;

// Eigenvalues of the twisted 1D Laplacian on r sites, ascending.
// Closed form: {2 cos((theta + 2 pi k)/r) : k = 0..r-1}.
struct TwistedLaplacianSpectrum {
  int r = 1;
  double theta = 0.0;
  std::vector<double> eigenvalues;
};

TwistedLaplacianSpectrum eigenvalues_1d(int r, double theta);

// The r x r matrix itself (r=1 and r=2 use their special definitions).
Eigen::MatrixXcd twisted_laplacian_matrix(int r, double theta);

struct EigenvalueWithMultiplicity {
  double value = 0.0;
  int multiplicity = 1;
};

enum class SpecialPhase { zero, half_pi, pi };

// Spectrum with exact multiplicities at theta in {0, pi/2, pi}:
// at 0 and pi the values +-2 (when present) are simple and all others double;
// at pi/2 all eigenvalues are simple. Values ascending.
std::vector<EigenvalueWithMultiplicity> special_spectrum(int r, SpecialPhase phase);

// Discriminant D(z) = tr(T_z^r) via the trace recurrence
// t_{k+1} = z t_k - t_{k-1}, t_0 = 2, t_1 = z.
double discriminant(double z, int r);
std::complex<double> discriminant(std::complex<double> z, int r);

// |lambda_j'(phi)| at phi in {0,pi}: (1/r) sqrt(4 - lambda^2).
double derivative_magnitude(double lambda, int r);

// Sign of lambda_j' on (0,pi) for j = 1..r (1-based), alternating with j.
std::vector<int> derivative_signs(int r);

}  // namespace latticebands

#endif
