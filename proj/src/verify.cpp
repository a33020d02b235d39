#include "latticebands/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "latticebands/bands.hpp"
#include "latticebands/cyclotomic.hpp"
#include "latticebands/laplace1d.hpp"
#include "latticebands/parallel.hpp"

namespace latticebands {

namespace {

constexpr double kSafetyMargin = 1e-11;  // 10x the separable-path residual, rounded up
constexpr double kEpsStart = 1e-1;
constexpr double kEpsFloor = 1e-6;

// Exact sumset structure of C_Gamma for one r: each class of coinciding
// cosine sums carries its index pairs (i <= j, units pi/r over [0,r]).
struct ExceptionalStructure {
  struct Group {
    double value = 0.0;
    std::vector<std::pair<int, int>> pairs;
  };
  int r = 2;
  std::vector<Group> groups;  // sorted by value
};

ExceptionalStructure build_exceptional_structure(int r) {
  CyclotomicField field(2 * r);
  std::map<CyclotomicField::Element, ExceptionalStructure::Group> groups;
  for (int i = 0; i <= r; ++i)
    for (int j = i; j <= r; ++j) {
      CyclotomicField::Element key = field.two_cos(i);
      field.add_root_power(key, j);
      field.add_root_power(key, -j);
      const double value = 2.0 * std::cos(kPi * i / r) + 2.0 * std::cos(kPi * j / r);
      auto [it, fresh] = groups.try_emplace(std::move(key));
      if (fresh) it->second.value = value;
      it->second.pairs.emplace_back(i, j);
    }
  ExceptionalStructure out;
  out.r = r;
  out.groups.reserve(groups.size());
  for (auto& [key, g] : groups) out.groups.push_back(std::move(g));
  std::sort(out.groups.begin(), out.groups.end(),
            [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

const ExceptionalStructure& exceptional_structure(int r) {
  if (r < 2 || r % 2 != 0)
    throw std::invalid_argument("exceptional_energies: r must be even and >= 2");
  static std::mutex mtx;
  static std::map<int, std::unique_ptr<ExceptionalStructure>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto& slot = cache[r];
  if (!slot) slot = std::make_unique<ExceptionalStructure>(build_exceptional_structure(r));
  return *slot;
}

struct CountProbe {
  std::optional<int> count;
  double margin = 0.0;
};

CountProbe probe(const Potential& v, const BlochPhase& phase, double energy) {
  CountBelowResult res = count_below(v, phase, energy, kSafetyMargin);
  return CountProbe{res.count, res.margin};
}

InteriorCertificate make_certificate(double energy, const Period& period,
                                     const BlochPhase& a, const BlochPhase& b,
                                     int ca, int cb, double margin) {
  InteriorCertificate cert;
  cert.energy = energy;
  cert.fiber_period = period;
  cert.phase_a = a;
  cert.phase_b = b;
  cert.count_a = ca;
  cert.count_b = cb;
  cert.witness_band = std::min(ca, cb) + 1;
  cert.margin = margin;
  return cert;
}

// Tries one phase pair, recording the attempt; returns a certificate when the
// strict counts are both defined and differ.
std::optional<InteriorCertificate> try_pair(const Potential& v, double energy,
                                            const BlochPhase& a, const BlochPhase& b,
                                            CertifyOutcome& out) {
  const CountProbe pa = probe(v, a, energy);
  const CountProbe pb = probe(v, b, energy);
  CertificateAttempt att;
  att.phase_a = a;
  att.phase_b = b;
  att.count_a = pa.count;
  att.count_b = pb.count;
  att.margin_a = pa.margin;
  att.margin_b = pb.margin;
  out.attempts.push_back(att);
  if (pa.count && pb.count && *pa.count != *pb.count)
    return make_certificate(energy, v.period(), a, b, *pa.count, *pb.count,
                            std::min(pa.margin, pb.margin));
  return std::nullopt;
}

// delta for the tilted ((1+delta)eps, eps) direction, from the derivative
// ratios of the degenerate interior pairs of sigma(Delta^r_0) summing to E.
double tilt_delta(const ExceptionalStructure::Group& group, int r) {
  double bound = std::numeric_limits<double>::infinity();
  for (const auto& [i, j] : group.pairs) {
    if (i % 2 != 0 || j % 2 != 0) continue;        // (0,0)-corner pairs are even-index
    if (i == 0 || i == r || j == 0 || j == r) continue;  // simple +-2 handled separately
    if (i == j || i + j == r) continue;            // equal or opposite values
    const double x = 2.0 * std::cos(kPi * i / r);
    const double y = 2.0 * std::cos(kPi * j / r);
    const double small = std::abs(x) < std::abs(y) ? x : y;
    const double large = std::abs(x) < std::abs(y) ? y : x;
    bound = std::min(bound, derivative_magnitude(small, r) /
                                derivative_magnitude(large, r) -
                                1.0);
  }
  if (!std::isfinite(bound) || bound <= 0.0) return 0.25;
  return bound / 2.0;  // halved once for safety margin
}

bool group_couples_edge_branch(const ExceptionalStructure::Group& group, int r) {
  // E in +-2 + sigma(Delta^r_0): some exact pair couples a simple edge
  // eigenvalue +-2 (index 0 or r, zero derivative) with another even index.
  for (const auto& [i, j] : group.pairs) {
    if ((i == 0 || i == r) && j % 2 == 0 && j != 0 && j != r) return true;
    if ((j == 0 || j == r) && i % 2 == 0 && i != 0 && i != r) return true;
  }
  return false;
}

}  // namespace

bool ExceptionalSet::contains(double energy, double tol) const {
  auto it = std::lower_bound(values.begin(), values.end(), energy - tol);
  return it != values.end() && *it <= energy + tol;
}

ExceptionalSet exceptional_energies(int r) {
  const ExceptionalStructure& s = exceptional_structure(r);
  ExceptionalSet out;
  out.r = r;
  out.values.reserve(s.groups.size());
  for (const auto& g : s.groups) out.values.push_back(g.value);
  return out;
}

CertifyOutcome certify_interior(double energy, const Period& period,
                                CertifyStrategy strategy) {
  CertifyOutcome out;

  if (std::abs(energy) < 1e-12) {
    // Zero energy: only certifiable through an odd period.
    if (period.p % 2 == 0 && period.q % 2 == 0) {
      const Period norm = normalized_even(period);
      const Potential v0 = Potential::zero(norm);
      try_pair(v0, 0.0, BlochPhase(0, 0), BlochPhase(kPi, kPi), out);
      return out;  // expected: gap genuinely possible at 0
    }
    const Period norm = normalized_odd(period);
    const Potential v0 = Potential::zero(norm);
    for (double eps = kEpsStart; eps >= kEpsFloor; eps /= 2.0) {
      auto cert = try_pair(v0, 0.0, BlochPhase(kPi / 2 - eps, 0.0),
                           BlochPhase(kPi / 2 + eps, 0.0), out);
      if (cert) {
        out.certificate = std::move(cert);
        return out;
      }
    }
    return out;
  }

  if (!(energy > -4.0 && energy < 4.0))
    throw std::invalid_argument("certify_interior: E must lie in (-4,4)");

  const int r = normalized_even(period).p;
  const Potential v0 = Potential::zero(Period(r, r));

  const BlochPhase corner00(0.0, 0.0);
  const BlochPhase cornerpp(kPi, kPi);
  {
    auto cert = try_pair(v0, energy, corner00, cornerpp, out);
    if (cert) {
      out.certificate = std::move(cert);
      return out;
    }
  }
  if (strategy == CertifyStrategy::corners_only) return out;

  const bool corner_a_ok = out.attempts.back().count_a.has_value();
  const bool corner_b_ok = out.attempts.back().count_b.has_value();

  // Locate the exact exceptional class of E, when there is one.
  const ExceptionalStructure& exc = exceptional_structure(r);
  const ExceptionalStructure::Group* group = nullptr;
  for (const auto& g : exc.groups)
    if (std::abs(g.value - energy) < 1e-9) {
      group = &g;
      break;
    }

  const bool tilt_first = group != nullptr && group_couples_edge_branch(*group, r);
  const double delta = group != nullptr ? tilt_delta(*group, r) : 0.25;

  for (int pass = 0; pass < 2; ++pass) {
    const bool use_tilt = pass == 0 ? tilt_first : !tilt_first;
    for (double eps = kEpsStart; eps >= kEpsFloor; eps /= 2.0) {
      const BlochPhase a = corner_a_ok ? corner00
                           : use_tilt   ? BlochPhase((1.0 + delta) * eps, eps)
                                        : BlochPhase(eps, 0.0);
      const BlochPhase b = corner_b_ok ? cornerpp : BlochPhase(kPi - eps, kPi);
      auto cert = try_pair(v0, energy, a, b, out);
      if (cert) {
        out.certificate = std::move(cert);
        return out;
      }
    }
    if (corner_a_ok) break;  // both passes would repeat the same pairs
  }
  return out;
}

bool recheck_certificate(const InteriorCertificate& cert) {
  const Potential v0 = Potential::zero(cert.fiber_period);
  const FiberSpectrum sa = fiber_eigenvalues(v0, cert.phase_a);
  const FiberSpectrum sb = fiber_eigenvalues(v0, cert.phase_b);
  const int w = cert.witness_band;
  if (w < 1 || w > static_cast<int>(sa.eigenvalues.size())) return false;
  const double at_larger = cert.count_a > cert.count_b ? sa.eigenvalues[w - 1]
                                                       : sb.eigenvalues[w - 1];
  const double at_smaller = cert.count_a > cert.count_b ? sb.eigenvalues[w - 1]
                                                        : sa.eigenvalues[w - 1];
  return at_larger < cert.energy && cert.energy < at_smaller;
}

SweepReport verify_theorem_sweep(const Period& period, int energy_samples,
                                 int threads) {
  SweepReport report;
  report.period = period;
  report.normalized_period = normalized_even(period);
  const int r = report.normalized_period.p;
  const ExceptionalSet exc = exceptional_energies(r);
  const bool has_odd = (period.p % 2 == 1) || (period.q % 2 == 1);

  struct Task {
    double energy;
    bool expect_certified;
  };
  std::vector<Task> tasks;
  for (int i = 0; i < energy_samples; ++i) {
    double e = -4.0 + 8.0 * (i + 0.5) / energy_samples;
    if (exc.contains(e, 1e-9)) e += 1.3e-7;  // nudge off the exceptional set
    if (std::abs(e) < 1e-9) e += 1.3e-7;
    tasks.push_back({e, true});
  }
  for (double e : exc.values) {
    if (std::abs(e) < 1e-12 || std::abs(std::abs(e) - 4.0) < 1e-12) continue;
    tasks.push_back({e, true});
  }
  tasks.push_back({0.0, has_odd});

  report.entries.resize(tasks.size());
  parallel_for_index(static_cast<int>(tasks.size()), threads, [&](int i) {
    const Task& task = tasks[i];
    CertifyOutcome outcome = certify_interior(task.energy, period);
    SweepEntry entry;
    entry.energy = task.energy;
    entry.attempts = static_cast<int>(outcome.attempts.size());
    if (outcome.certificate && recheck_certificate(*outcome.certificate)) {
      entry.status = "certified";
      entry.certificate = std::move(outcome.certificate);
    } else {
      entry.status = "uncertified";
    }
    report.entries[i] = std::move(entry);
  });

  for (std::size_t i = 0; i < tasks.size(); ++i)
    if (tasks[i].expect_certified && report.entries[i].status != "certified")
      ++report.failures;
  return report;
}

SpectrumApproximation kruger_gap(double delta, int resolution, int threads) {
  if (delta <= 0.0) throw std::invalid_argument("kruger_gap: delta must be > 0");
  const Potential v = Potential::checkerboard(delta);
  SpectrumApproximation spec = spectrum(v, resolution, threads);
  if (spec.component_count() != 2) {
    const int needed = static_cast<int>(std::ceil(kPi / delta)) + 2;
    throw std::runtime_error(
        "kruger_gap: resolution too coarse to resolve the gap; need resolution >= " +
        std::to_string(needed));
  }
  const double outer = std::sqrt(16.0 + delta * delta);
  const double err = spec.error_bound;
  const bool endpoints_ok =
      std::abs(spec.intervals[0].lo + outer) <= err &&
      std::abs(spec.intervals[0].hi + delta) <= err &&
      std::abs(spec.intervals[1].lo - delta) <= err &&
      std::abs(spec.intervals[1].hi - outer) <= err;
  if (!endpoints_ok)
    throw std::runtime_error("kruger_gap: component endpoints outside error bound");
  return spec;
}

Potential limit_periodic_truncation(
    const std::vector<std::pair<Potential, double>>& layers) {
  if (layers.empty())
    throw std::invalid_argument("limit_periodic_truncation: no layers");
  for (std::size_t i = 1; i < layers.size(); ++i) {
    const Period& prev = layers[i - 1].first.period();
    const Period& cur = layers[i].first.period();
    if (cur.p % prev.p != 0 || cur.q % prev.q != 0)
      throw std::invalid_argument("limit_periodic_truncation: periods not nested");
  }
  for (const auto& [v, amp] : layers)
    if (amp <= 0.0)
      throw std::invalid_argument("limit_periodic_truncation: amplitude must be > 0");

  const Period final_period = layers.back().first.period();
  std::vector<double> sum(static_cast<std::size_t>(final_period.p) * final_period.q,
                          0.0);
  for (const auto& [v, amp] : layers) {
    const double norm = v.sup_norm();
    const double scale = norm > 0.0 ? amp / norm : 0.0;
    for (int n = 0; n < final_period.p; ++n)
      for (int m = 0; m < final_period.q; ++m)
        sum[static_cast<std::size_t>(n) * final_period.q + m] += scale * v.at(n, m);
  }
  return Potential(final_period, std::move(sum));
}

ThresholdReport estimate_threshold(const Potential& base,
                                   const std::vector<double>& lambda_grid,
                                   int resolution, int threads) {
  if (!std::is_sorted(lambda_grid.begin(), lambda_grid.end()))
    throw std::invalid_argument("estimate_threshold: lambda_grid must be ascending");
  const Period& pp = base.period();
  const bool even_even = (pp.p % 2 == 0) && (pp.q % 2 == 0);
  const std::size_t max_components = even_even ? 2 : 1;

  ThresholdReport report;
  for (double lambda : lambda_grid) {
    const Potential v = base.scaled(lambda);
    const SpectrumApproximation coarse = spectrum(v, resolution, threads);
    const SpectrumApproximation fine = spectrum(v, 2 * resolution - 1, threads);
    const std::size_t count = fine.component_count();
    report.component_counts.emplace_back(lambda, static_cast<int>(count));
    const bool agrees = coarse.component_count() == count;
    if (agrees && count <= max_components) {
      report.largest_compliant = lambda;
    } else {
      report.first_violation = lambda;
      break;
    }
  }
  return report;
}

}  // namespace latticebands
