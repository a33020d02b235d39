#include "latticebands/laplace1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace latticebands {

TwistedLaplacianSpectrum eigenvalues_1d(int r, double theta) {
  if (r < 1) throw std::invalid_argument("eigenvalues_1d: r must be >= 1");
  TwistedLaplacianSpectrum s;
  s.r = r;
  s.theta = theta;
  s.eigenvalues.resize(r);
  for (int k = 0; k < r; ++k)
    s.eigenvalues[k] = 2.0 * std::cos((theta + 2.0 * kPi * k) / r);
  std::stable_sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

Eigen::MatrixXcd twisted_laplacian_matrix(int r, double theta) {
  if (r < 1) throw std::invalid_argument("twisted_laplacian_matrix: r must be >= 1");
  const std::complex<double> ph(std::cos(theta), std::sin(theta));
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(r, r);
  if (r == 1) {
    m(0, 0) = 2.0 * std::cos(theta);
    return m;
  }
  if (r == 2) {
    m(0, 1) = 1.0 + std::conj(ph);
    m(1, 0) = 1.0 + ph;
    return m;
  }
  for (int i = 0; i + 1 < r; ++i) {
    m(i, i + 1) = 1.0;
    m(i + 1, i) = 1.0;
  }
  m(0, r - 1) = std::conj(ph);
  m(r - 1, 0) = ph;
  return m;
}

std::vector<EigenvalueWithMultiplicity> special_spectrum(int r, SpecialPhase phase) {
  if (r < 1) throw std::invalid_argument("special_spectrum: r must be >= 1");
  std::vector<EigenvalueWithMultiplicity> out;
  if (phase == SpecialPhase::half_pi) {
    // {2 cos(pi j / 2r) : j odd, 0 <= j <= 2r}, all simple.
    for (int j = 2 * r - 1; j >= 1; j -= 2)
      out.push_back({2.0 * std::cos(kPi * j / (2.0 * r)), 1});
    return out;
  }
  const int parity = (phase == SpecialPhase::zero) ? 0 : 1;
  // {2 cos(pi j / r) : 0 <= j <= r, j == parity (mod 2)}; interior j double.
  for (int j = r; j >= 0; --j) {
    if (j % 2 != parity) continue;
    const int mult = (j == 0 || j == r) ? 1 : 2;
    out.push_back({2.0 * std::cos(kPi * j / r), mult});
  }
  return out;
}

namespace {
template <typename Scalar>
Scalar trace_power(Scalar z, int r) {
  Scalar prev = Scalar(2);  // tr(T^0)
  Scalar cur = z;           // tr(T^1)
  if (r == 0) return prev;
  for (int k = 1; k < r; ++k) {
    Scalar next = z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}
}  // namespace

double discriminant(double z, int r) {
  if (r < 1) throw std::invalid_argument("discriminant: r must be >= 1");
  return trace_power(z, r);
}

std::complex<double> discriminant(std::complex<double> z, int r) {
  if (r < 1) throw std::invalid_argument("discriminant: r must be >= 1");
  return trace_power(z, r);
}

double derivative_magnitude(double lambda, int r) {
  if (r < 1) throw std::invalid_argument("derivative_magnitude: r must be >= 1");
  if (std::abs(lambda) > 2.0)
    throw std::invalid_argument("derivative_magnitude: |lambda| > 2");
  return std::sqrt(std::max(0.0, 4.0 - lambda * lambda)) / r;
}

std::vector<int> derivative_signs(int r) {
  if (r < 1) throw std::invalid_argument("derivative_signs: r must be >= 1");
  std::vector<int> signs(r);
  for (int j = 1; j <= r; ++j) signs[j - 1] = ((r - j) % 2 == 0) ? -1 : +1;
  return signs;
}

}  // namespace latticebands
