#include "skwv/snapshot_io.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace skwv {

static_assert(std::endian::native == std::endian::little,
              "snapshot payload assumes a little-endian host");

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string read_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(std::string("snapshot: truncated ") + what);
  return line;
}

}  // namespace

void write_snapshot(const std::string& path, const FieldState& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("snapshot: cannot open " + path + " for writing");
  out << "SKWV1\n";
  out << s.grid.n_cells << "\n";
  out << format_double(s.grid.r_max) << "\n";
  out << format_double(s.t) << "\n";
  out << model_id(s.model) << "\n";
  const auto dump = [&](const Eigen::ArrayXd& a) {
    out.write(reinterpret_cast<const char*>(a.data()),
              static_cast<std::streamsize>(a.size() * sizeof(double)));
  };
  dump(s.u);
  dump(s.v);
  if (!out) throw std::runtime_error("snapshot: write failed for " + path);
}

FieldState read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("snapshot: cannot open " + path);
  if (read_line(in, "magic") != "SKWV1") throw std::runtime_error("snapshot: bad magic in " + path);

  FieldState s;
  const int n = std::stoi(read_line(in, "n_cells"));
  const double r_max = std::strtod(read_line(in, "r_max").c_str(), nullptr);
  s.t = std::strtod(read_line(in, "time").c_str(), nullptr);
  const int id = std::stoi(read_line(in, "model id"));
  if (id != 0 && id != 1) throw std::runtime_error("snapshot: unknown model id in " + path);
  s.model = id == 0 ? ModelKind::WaveMap : ModelKind::AdkinsNappi;
  s.grid = make_grid(r_max, n);

  s.u.resize(n);
  s.v.resize(n);
  const auto slurp = [&](Eigen::ArrayXd& a) {
    in.read(reinterpret_cast<char*>(a.data()), static_cast<std::streamsize>(n * sizeof(double)));
    if (in.gcount() != static_cast<std::streamsize>(n * sizeof(double)))
      throw std::runtime_error("snapshot: short payload in " + path);
  };
  slurp(s.u);
  slurp(s.v);
  s.boundary_value = extrapolate_to_outer_face(s.u);
  return s;
}

SpacetimeRecord load_record_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".skwv")
      paths.push_back(entry.path());
  }
  if (paths.empty()) throw std::runtime_error("load_record_dir: no .skwv files in " + dir);

  std::vector<FieldState> states;
  states.reserve(paths.size());
  for (const auto& p : paths) states.push_back(read_snapshot(p.string()));
  std::sort(states.begin(), states.end(),
            [](const FieldState& a, const FieldState& b) { return a.t < b.t; });

  SpacetimeRecord rec;
  rec.grid = states.front().grid;
  rec.model = states.front().model;
  rec.boundary_value = states.front().boundary_value;
  for (const auto& s : states) {
    if (s.grid.n_cells != rec.grid.n_cells || s.grid.r_max != rec.grid.r_max ||
        s.model != rec.model)
      throw std::runtime_error("load_record_dir: snapshots disagree on grid or model");
    rec.append(s);
  }
  return rec;
}

}  // namespace skwv
