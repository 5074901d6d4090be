#include "skwv/run_config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace skwv {

ModelKind RunConfig::model_kind() const {
  if (model == "wavemap") return ModelKind::WaveMap;
  if (model == "adkins-nappi") return ModelKind::AdkinsNappi;
  throw std::invalid_argument("config: unknown model '" + model + "'");
}

InitialDataKind RunConfig::data_kind() const { return parse_initial_data_kind(data); }

InitialDataParams RunConfig::data_params() const {
  InitialDataParams p;
  p.lambda = lambda;
  p.pulse_amp = pulse_amp;
  p.pulse_r0 = pulse_r0;
  p.pulse_sigma = pulse_sigma;
  p.perturb_amp = perturb_amp;
  p.perturb_r0 = perturb_r0;
  p.perturb_sigma = perturb_sigma;
  p.shatah_tau0 = shatah_tau0;
  return p;
}

namespace {

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing junk");
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad numeric value for '" + key + "': " + v);
  }
}

long parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing junk");
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad integer value for '" + key + "': " + v);
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument("config: bad boolean value for '" + key + "': " + v);
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "model") {
    model = value;
    (void)model_kind();  // reject unknown model names at parse time
  } else if (key == "data") {
    data = value;
    (void)parse_initial_data_kind(value);
  }
  else if (key == "r_max") r_max = parse_double(key, value);
  else if (key == "n_cells") n_cells = static_cast<int>(parse_int(key, value));
  else if (key == "cfl") cfl = parse_double(key, value);
  else if (key == "t_end") t_end = parse_double(key, value);
  else if (key == "record_every") record_every = static_cast<int>(parse_int(key, value));
  else if (key == "threshold_energy") threshold_energy = parse_double(key, value);
  else if (key == "threshold_gradient") threshold_gradient = parse_double(key, value);
  else if (key == "vertex") vertex = parse_double(key, value);
  else if (key == "out_dir") out_dir = value;
  else if (key == "seed") seed = static_cast<std::uint64_t>(parse_int(key, value));
  else if (key == "lambda") lambda = parse_double(key, value);
  else if (key == "pulse_amp") pulse_amp = parse_double(key, value);
  else if (key == "pulse_r0") pulse_r0 = parse_double(key, value);
  else if (key == "pulse_sigma") pulse_sigma = parse_double(key, value);
  else if (key == "perturb_amp") perturb_amp = parse_double(key, value);
  else if (key == "perturb_r0") perturb_r0 = parse_double(key, value);
  else if (key == "perturb_sigma") perturb_sigma = parse_double(key, value);
  else if (key == "shatah_tau0") shatah_tau0 = parse_double(key, value);
  else if (key == "t0") t0 = parse_double(key, value);
  else if (key == "t1") t1 = parse_double(key, value);
  else if (key == "gh_samples") gh_samples = static_cast<int>(parse_int(key, value));
  else if (key == "verify_tol_rel") verify_tol_rel = parse_double(key, value);
  else if (key == "a_lo") a_lo = parse_double(key, value);
  else if (key == "a_hi") a_hi = parse_double(key, value);
  else if (key == "static_dr") static_dr = parse_double(key, value);
  else if (key == "tol_a") tol_a = parse_double(key, value);
  else if (key == "static_richardson") static_richardson = parse_bool(key, value);
  else if (key == "conc_t_hi") conc_t_hi = parse_double(key, value);
  else if (key == "conc_t_lo") conc_t_lo = parse_double(key, value);
  else if (key == "conc_points") conc_points = static_cast<int>(parse_int(key, value));
  else throw std::invalid_argument("config: unknown key '" + key + "'");
}

std::string RunConfig::resolved_out_dir() const {
  if (!out_dir.empty()) return out_dir;
  if (const char* env = std::getenv("SKWV_OUT"); env && *env) return env;
  return "out";
}

std::string RunConfig::canonical_text() const {
  std::ostringstream os;
  os.precision(17);
  os << "model=" << model << "\ndata=" << data << "\nr_max=" << r_max
     << "\nn_cells=" << n_cells << "\ncfl=" << cfl << "\nt_end=" << t_end
     << "\nrecord_every=" << record_every << "\nthreshold_energy=" << threshold_energy
     << "\nthreshold_gradient=" << threshold_gradient << "\nvertex=" << vertex
     << "\nout_dir=" << resolved_out_dir() << "\nseed=" << seed << "\nlambda=" << lambda
     << "\npulse_amp=" << pulse_amp << "\npulse_r0=" << pulse_r0
     << "\npulse_sigma=" << pulse_sigma << "\nperturb_amp=" << perturb_amp
     << "\nperturb_r0=" << perturb_r0 << "\nperturb_sigma=" << perturb_sigma
     << "\nshatah_tau0=" << shatah_tau0 << "\nt0=" << t0 << "\nt1=" << t1
     << "\ngh_samples=" << gh_samples << "\nverify_tol_rel=" << verify_tol_rel
     << "\na_lo=" << a_lo << "\na_hi=" << a_hi << "\nstatic_dr=" << static_dr
     << "\ntol_a=" << tol_a << "\nstatic_richardson=" << (static_richardson ? 1 : 0)
     << "\nconc_t_hi=" << conc_t_hi << "\nconc_t_lo=" << conc_t_lo
     << "\nconc_points=" << conc_points << "\n";
  return os.str();
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not key=value: " + line);
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace skwv
