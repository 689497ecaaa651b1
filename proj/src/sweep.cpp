#include "holevo/sweep.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "holevo/correlations.hpp"
#include "holevo/channels.hpp"

namespace holevo {

std::vector<WernerSweepRow> werner_sweep(std::span<const double> z_grid,
                                         std::span<const double> x_list) {
  std::vector<WernerSweepRow> rows;
  rows.reserve(z_grid.size() * x_list.size());
  for (double z : z_grid) {
    const WernerParams w = WernerParams::from_z(z);
    for (double xv : x_list) {
      const WeakStrength x(xv);
      const MeasureReport r = measure_report(w, x);
      rows.push_back({z, xv, *r.eof, r.classical_correlation,
                      *r.weak_maximal_holevo, r.discord, *r.super_discord});
    }
  }
  return rows;
}

std::vector<GadSurfaceRow> gad_surface(std::span<const double> z_grid,
                                       std::span<const double> gamma_grid,
                                       std::span<const double> x_list) {
  std::vector<GadSurfaceRow> rows;
  rows.reserve(z_grid.size() * gamma_grid.size() * x_list.size());
  for (double z : z_grid) {
    for (double gamma : gamma_grid) {
      for (double xv : x_list) {
        const WeakStrength x(xv);
        rows.push_back({z, gamma, xv, gad_maximal_holevo_werner(z, gamma),
                        gad_weak_maximal_holevo_werner(z, gamma, x)});
      }
    }
  }
  return rows;
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, std::span<const WernerSweepRow> rows) {
  os << "z,x,eof,classical_correlation,weak_maximal_holevo,discord,"
        "super_discord\n";
  for (const WernerSweepRow& r : rows) {
    os << format_number(r.z) << ',' << format_number(r.x) << ','
       << format_number(r.eof) << ',' << format_number(r.classical_correlation)
       << ',' << format_number(r.weak_maximal_holevo) << ','
       << format_number(r.discord) << ',' << format_number(r.super_discord)
       << '\n';
  }
}

void write_csv(std::ostream& os, std::span<const GadSurfaceRow> rows) {
  os << "z,gamma,x,nc1,nc1w\n";
  for (const GadSurfaceRow& r : rows) {
    os << format_number(r.z) << ',' << format_number(r.gamma) << ','
       << format_number(r.x) << ',' << format_number(r.nc1) << ','
       << format_number(r.nc1w) << '\n';
  }
}

std::vector<double> parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw std::invalid_argument("grid must be start:stop:step, got '" + text +
                                "'");
  }
  double start = 0, stop = 0, step = 0;
  try {
    start = std::stod(text.substr(0, first));
    stop = std::stod(text.substr(first + 1, second - first - 1));
    step = std::stod(text.substr(second + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed grid '" + text + "'");
  }
  if (!(step > 0.0) || stop < start) {
    throw std::invalid_argument("grid '" + text +
                                "' needs step > 0 and stop >= start");
  }
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    const double v = start + k * step;
    if (v > stop + 0.5 * step) break;
    grid.push_back(std::min(v, stop));
  }
  return grid;
}

}  // namespace holevo
