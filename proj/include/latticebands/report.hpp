#ifndef LATTICEBANDS_REPORT_HPP
#define LATTICEBANDS_REPORT_HPP

#include <string>

#include <json.hpp>

#include "latticebands/bands.hpp"
#include "latticebands/core.hpp"
#include "latticebands/verify.hpp"

namespace latticebands {

// All emitters use 12 significant digits and sorted JSON keys so identical
// runs produce byte-identical files. Phases are reported in units of pi.

std::string format_number(double x);

std::string bands_csv(const BandSweep& sweep);
nlohmann::json bands_json(const BandSweep& sweep);

std::string spectrum_csv(const SpectrumApproximation& spec);
nlohmann::json spectrum_json(const SpectrumApproximation& spec);

std::string quilt_csv(const Quilt& q);
nlohmann::json quilt_json(const Quilt& q);

nlohmann::json sweep_report_json(const SweepReport& report);

nlohmann::json threshold_json(const ThresholdReport& report);

std::string gaps_csv(const std::vector<EnergyInterval>& gaps);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace latticebands

#endif
