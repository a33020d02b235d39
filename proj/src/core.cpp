#include "latticebands/core.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace latticebands {

Period normalized_even(const Period& pp) {
  int r = std::lcm(std::lcm(pp.p, pp.q), 2);
  return Period(r, r);
}

Period normalized_odd(const Period& pp) {
  if (pp.p % 2 == 1) return Period(pp.p, std::lcm(pp.q, 4));
  if (pp.q % 2 == 1) return Period(pp.q, std::lcm(pp.p, 4));
  throw std::invalid_argument("normalized_odd: both periods are even");
}

Potential::Potential(Period period, std::vector<double> values)
    : period_(period), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(period_.p) * period_.q)
    throw std::invalid_argument("Potential: value grid does not match p*q");
  for (double v : values_)
    if (!std::isfinite(v)) throw std::invalid_argument("Potential: non-finite entry");
}

Potential Potential::zero(Period period) {
  return Potential(period, std::vector<double>(
                               static_cast<std::size_t>(period.p) * period.q, 0.0));
}

Potential Potential::checkerboard(double delta) {
  return Potential(Period(2, 2), {delta, -delta, -delta, delta});
}

double Potential::sup_norm() const {
  double s = 0.0;
  for (double v : values_) s = std::max(s, std::abs(v));
  return s;
}

bool Potential::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

Potential Potential::retiled(Period target) const {
  if (target.p % period_.p != 0 || target.q % period_.q != 0)
    throw std::invalid_argument("retiled: target period not a multiple of the period");
  std::vector<double> vals(static_cast<std::size_t>(target.p) * target.q);
  for (int n = 0; n < target.p; ++n)
    for (int m = 0; m < target.q; ++m)
      vals[static_cast<std::size_t>(n) * target.q + m] = at(n, m);
  return Potential(target, std::move(vals));
}

Potential Potential::scaled(double lambda) const {
  std::vector<double> vals = values_;
  for (double& v : vals) v *= lambda;
  return Potential(period_, std::move(vals));
}

Potential Potential::shifted(double c) const {
  std::vector<double> vals = values_;
  for (double& v : vals) v += c;
  return Potential(period_, std::move(vals));
}

Potential parse_potential_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("potential JSON parse failure: ") + e.what());
  }
  if (!j.contains("p") || !j.contains("q") || !j.contains("values"))
    throw std::runtime_error("potential JSON: missing p, q, or values");
  int p = j.at("p").get<int>();
  int q = j.at("q").get<int>();
  const auto& rows = j.at("values");
  if (!rows.is_array() || static_cast<int>(rows.size()) != p)
    throw std::runtime_error("potential JSON: values has wrong number of rows");
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(p) * q);
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != q)
      throw std::runtime_error("potential JSON: row length does not match q");
    for (const auto& v : row) vals.push_back(v.get<double>());
  }
  return Potential(Period(p, q), std::move(vals));
}

Potential parse_potential_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        std::size_t pos = 0;
        double v = std::stod(cell, &pos);
        while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
        if (pos != cell.size()) throw std::invalid_argument(cell);
        row.push_back(v);
      } catch (const std::exception&) {
        throw std::runtime_error("potential CSV: cannot parse entry '" + cell + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("potential CSV: no data rows");
  const std::size_t q = rows.front().size();
  std::vector<double> vals;
  for (const auto& row : rows) {
    if (row.size() != q)
      throw std::runtime_error("potential CSV: rows have inconsistent lengths");
    vals.insert(vals.end(), row.begin(), row.end());
  }
  return Potential(Period(static_cast<int>(rows.size()), static_cast<int>(q)),
                   std::move(vals));
}

Potential load_potential(const std::string& path, PotentialFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open potential file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return format == PotentialFormat::json ? parse_potential_json(buf.str())
                                         : parse_potential_csv(buf.str());
}

std::vector<EnergyInterval> interval_union(std::vector<EnergyInterval> intervals,
                                           double merge_tol) {
  if (merge_tol < 0.0) throw std::invalid_argument("interval_union: merge_tol < 0");
  if (intervals.empty()) return {};
  std::sort(intervals.begin(), intervals.end(),
            [](const EnergyInterval& a, const EnergyInterval& b) {
              return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
            });
  std::vector<EnergyInterval> out;
  out.push_back(intervals.front());
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    EnergyInterval& cur = out.back();
    if (intervals[i].lo <= cur.hi + merge_tol)
      cur.hi = std::max(cur.hi, intervals[i].hi);
    else
      out.push_back(intervals[i]);
  }
  return out;
}

}  // namespace latticebands
