#include "latticebands/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "latticebands/cyclotomic.hpp"
#include "latticebands/laplace1d.hpp"

namespace latticebands {

FiberMatrix build_fiber(const Potential& v, const BlochPhase& phase) {
  const int p = v.period().p;
  const int q = v.period().q;
  const int n = p * q;
  const Eigen::MatrixXcd a = twisted_laplacian_matrix(p, phase.theta);
  const Eigen::MatrixXcd b = twisted_laplacian_matrix(q, phase.phi);

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int n1 = 0; n1 < p; ++n1)
    for (int m1 = 0; m1 < q; ++m1) {
      const int i = n1 * q + m1;
      m(i, i) = a(n1, n1) + b(m1, m1) + v.at(n1, m1);
      for (int n2 = 0; n2 < p; ++n2)
        for (int m2 = 0; m2 < q; ++m2) {
          const int j = n2 * q + m2;
          if (j <= i) continue;
          std::complex<double> e = 0.0;
          if (m1 == m2) e += a(n1, n2);
          if (n1 == n2) e += b(m1, m2);
          m(i, j) = e;
          m(j, i) = std::conj(e);  // mirrored, Hermitian by construction
        }
    }
  return FiberMatrix{v.period(), phase, std::move(m)};
}

HermitianEigenResult hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (((m - m.adjoint()).cwiseAbs().maxCoeff()) > 1e-12 * scale)
    throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed to converge");

  const Eigen::VectorXd& vals = solver.eigenvalues();
  const Eigen::MatrixXcd& vecs = solver.eigenvectors();
  const Eigen::MatrixXcd resid = m * vecs - vecs * vals.asDiagonal();
  HermitianEigenResult out;
  out.eigenvalues.assign(vals.data(), vals.data() + vals.size());
  out.residual_bound = resid.colwise().norm().maxCoeff();
  return out;
}

std::vector<double> separable_eigenvalues(int p, int q, const BlochPhase& phase) {
  const auto ep = eigenvalues_1d(p, phase.theta).eigenvalues;
  const auto eq = eigenvalues_1d(q, phase.phi).eigenvalues;
  std::vector<double> sums;
  sums.reserve(static_cast<std::size_t>(p) * q);
  for (double x : ep)
    for (double y : eq) sums.push_back(x + y);
  std::sort(sums.begin(), sums.end());
  return sums;
}

FiberSpectrum fiber_eigenvalues(const Potential& v, const BlochPhase& phase) {
  FiberSpectrum s;
  s.period = v.period();
  s.phase = phase;
  if (v.is_zero()) {
    s.eigenvalues = separable_eigenvalues(v.period().p, v.period().q, phase);
    s.residual_bound = 1e-13;
    return s;
  }
  const FiberMatrix fiber = build_fiber(v, phase);
  HermitianEigenResult res = hermitian_eigenvalues(fiber.entries);
  s.eigenvalues = std::move(res.eigenvalues);
  s.residual_bound = res.residual_bound;
  return s;
}

CountBelowResult count_below(const Potential& v, const BlochPhase& phase, double energy,
                             double safety_margin) {
  const FiberSpectrum spec = fiber_eigenvalues(v, phase);
  if (safety_margin <= spec.residual_bound)
    throw std::invalid_argument("count_below: safety_margin below eigensolver residual");
  CountBelowResult out;
  double margin = std::numeric_limits<double>::infinity();
  int count = 0;
  for (double lam : spec.eigenvalues) {
    margin = std::min(margin, std::abs(lam - energy));
    if (lam < energy) ++count;
  }
  out.margin = margin;
  if (margin > safety_margin) out.count = count;
  return out;
}

std::vector<std::pair<double, int>> multiplicity_profile(int p, int q,
                                                         CornerPhase corner) {
  if (p < 1 || q < 1) throw std::invalid_argument("multiplicity_profile: bad period");
  const int big = std::lcm(p, q);
  CyclotomicField field(2 * big);

  // 1D Bloch eigenvalue at the corner, as an exact angle numerator over 2*big.
  const bool at_pi = (corner == CornerPhase::pi_pi);
  auto angle_index = [&](int r, int k) {
    // theta = 0: angle 2 pi k / r; theta = pi: angle (2k+1) pi / r.
    return at_pi ? (2 * k + 1) * (big / r) : 2 * k * (big / r);
  };

  std::map<CyclotomicField::Element, std::pair<double, int>> groups;
  for (int k1 = 0; k1 < p; ++k1)
    for (int k2 = 0; k2 < q; ++k2) {
      const int e1 = angle_index(p, k1);
      const int e2 = angle_index(q, k2);
      CyclotomicField::Element key = field.two_cos(e1);
      field.add_root_power(key, e2);
      field.add_root_power(key, -e2);
      const double value =
          2.0 * std::cos(kPi * e1 / big) + 2.0 * std::cos(kPi * e2 / big);
      auto [it, fresh] = groups.try_emplace(std::move(key), value, 0);
      it->second.second += 1;
    }

  std::vector<std::pair<double, int>> out;
  out.reserve(groups.size());
  for (const auto& [key, vc] : groups) out.push_back(vc);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace latticebands
