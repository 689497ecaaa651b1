#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace holevo {

// One row of the Werner-state sweep; columns in CSV order.
struct WernerSweepRow {
  double z;
  double x;
  double eof;
  double classical_correlation;
  double weak_maximal_holevo;
  double discord;
  double super_discord;
};

// Rows ordered lexicographically in (z, x).
std::vector<WernerSweepRow> werner_sweep(std::span<const double> z_grid,
                                         std::span<const double> x_list);

// One row of the GAD surface; columns in CSV order.
struct GadSurfaceRow {
  double z;
  double gamma;
  double x;
  double nc1;
  double nc1w;
};

// Rows ordered lexicographically in (z, gamma, x).
std::vector<GadSurfaceRow> gad_surface(std::span<const double> z_grid,
                                       std::span<const double> gamma_grid,
                                       std::span<const double> x_list);

// Locale-independent formatting with 17 significant digits (round-trips
// doubles exactly).
std::string format_number(double v);

void write_csv(std::ostream& os, std::span<const WernerSweepRow> rows);
void write_csv(std::ostream& os, std::span<const GadSurfaceRow> rows);

// start + k*step up to stop (inclusive within a half-step tolerance).
std::vector<double> parse_grid(const std::string& text);

}  // namespace holevo
