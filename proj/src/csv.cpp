#include "skwv/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace skwv {

namespace {

void write_pair(std::ofstream& out, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", a, b);
  out << buf;
}

}  // namespace

void write_series_csv(const std::string& path, const DiagnosticSeries& series) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot open " + path);
  out << "param,value\n";
  for (const auto& [p, v] : series.points) write_pair(out, p, v);
  if (!out) throw std::runtime_error("csv: write failed for " + path);
}

void write_profile_csv(const std::string& path, const SolitonProfile& profile) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot open " + path);
  char buf[160];
  std::snprintf(buf, sizeof buf, "# slope = %.17g\n# dr = %.17g\n# r_max = %.17g\n# gap = %.17g\n",
                profile.slope, profile.dr, profile.r_max, profile.boundary_gap);
  out << buf << "r,u\n";
  for (Eigen::Index k = 0; k < profile.r.size(); ++k) write_pair(out, profile.r[k], profile.u[k]);
  if (!out) throw std::runtime_error("csv: write failed for " + path);
}

}  // namespace skwv
