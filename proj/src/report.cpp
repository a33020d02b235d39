#include "latticebands/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "latticebands/laplace1d.hpp"

namespace latticebands {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

namespace {

double in_units_of_pi(double phase) { return phase / kPi; }

nlohmann::json phase_json(const BlochPhase& ph) {
  return {{"theta_over_pi", in_units_of_pi(ph.theta)},
          {"phi_over_pi", in_units_of_pi(ph.phi)}};
}

nlohmann::json intervals_json(const std::vector<EnergyInterval>& intervals) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& iv : intervals) arr.push_back({{"lo", iv.lo}, {"hi", iv.hi}});
  return arr;
}

}  // namespace

std::string bands_csv(const BandSweep& sweep) {
  std::ostringstream out;
  out << "j,lo,hi,grid_error\n";
  for (const Band& b : sweep.bands)
    out << b.index << ',' << format_number(b.enclosure.lo) << ','
        << format_number(b.enclosure.hi) << ',' << format_number(b.grid_error)
        << '\n';
  return out.str();
}

nlohmann::json bands_json(const BandSweep& sweep) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Band& b : sweep.bands)
    arr.push_back({{"j", b.index},
                   {"lo", b.enclosure.lo},
                   {"hi", b.enclosure.hi},
                   {"grid_error", b.grid_error}});
  return {{"bands", arr},
          {"grid_error", sweep.grid_error},
          {"residual_bound", sweep.residual_bound}};
}

std::string spectrum_csv(const SpectrumApproximation& spec) {
  std::ostringstream out;
  out << "# error_bound " << format_number(spec.error_bound) << "\n";
  out << "lo,hi\n";
  for (const auto& iv : spec.intervals)
    out << format_number(iv.lo) << ',' << format_number(iv.hi) << '\n';
  return out.str();
}

nlohmann::json spectrum_json(const SpectrumApproximation& spec) {
  return {{"intervals", intervals_json(spec.intervals)},
          {"error_bound", spec.error_bound},
          {"component_count", spec.component_count()}};
}

std::string quilt_csv(const Quilt& q) {
  std::ostringstream out;
  out << "# theta_resolution phi_resolution E\n";
  out << "# " << q.resolution << ' ' << q.resolution << ' '
      << format_number(q.energy) << "\n";
  for (const auto& row : q.counts) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << ',';
      out << row[k];  // -1 marks a cell where E is too close to the fiber
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json quilt_json(const Quilt& q) {
  nlohmann::json undef = nlohmann::json::array();
  for (const auto& [i, k] : q.undefined_cells) undef.push_back({i, k});
  return {{"E", q.energy},
          {"resolution", q.resolution},
          {"counts", q.counts},
          {"undefined_cells", undef}};
}

nlohmann::json sweep_report_json(const SweepReport& report) {
  nlohmann::json energies = nlohmann::json::array();
  for (const SweepEntry& e : report.entries) {
    nlohmann::json entry = {{"E", e.energy}, {"status", e.status},
                            {"attempts", e.attempts}};
    if (e.certificate) {
      const InteriorCertificate& c = *e.certificate;
      entry["certificate"] = {{"phase_a", phase_json(c.phase_a)},
                              {"phase_b", phase_json(c.phase_b)},
                              {"count_a", c.count_a},
                              {"count_b", c.count_b},
                              {"witness_band", c.witness_band},
                              {"margin", c.margin}};
    }
    energies.push_back(std::move(entry));
  }
  return {{"period", {{"p", report.period.p}, {"q", report.period.q}}},
          {"normalized_period",
           {{"p", report.normalized_period.p}, {"q", report.normalized_period.q}}},
          {"energies", energies},
          {"summary", {{"failures", report.failures}}}};
}

nlohmann::json threshold_json(const ThresholdReport& report) {
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& [lambda, n] : report.component_counts)
    counts.push_back({{"lambda", lambda}, {"components", n}});
  nlohmann::json out = {{"component_counts", counts}};
  out["largest_compliant"] = report.largest_compliant
                                 ? nlohmann::json(*report.largest_compliant)
                                 : nlohmann::json();
  out["first_violation"] = report.first_violation
                               ? nlohmann::json(*report.first_violation)
                               : nlohmann::json();
  return out;
}

std::string gaps_csv(const std::vector<EnergyInterval>& gaps) {
  std::ostringstream out;
  out << "lo,hi\n";
  for (const auto& g : gaps)
    out << format_number(g.lo) << ',' << format_number(g.hi) << '\n';
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace latticebands
