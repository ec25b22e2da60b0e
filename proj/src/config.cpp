#include "ftstab/config.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace ftstab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& why) {
  throw std::invalid_argument("config: key '" + key + "': " + why);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size() || !std::isfinite(d)) bad_value(key, "not a finite number");
    return d;
  } catch (const std::invalid_argument&) {
    bad_value(key, "not a number: '" + v + "'");
  } catch (const std::out_of_range&) {
    bad_value(key, "out of double range: '" + v + "'");
  }
}

int parse_int(const std::string& key, const std::string& v) {
  const double d = parse_double(key, v);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d) bad_value(key, "expected an integer");
  return i;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (kind != ExperimentKind::open_loop) {
    if (!(lambda0 > 0.0)) bad_value("lambda0", "must be > 0");
    if (!(sigma > 0.0)) bad_value("sigma", "must be > 0");
    if (n_max < 1) bad_value("n_max", "must be >= 1");
    if (kind == ExperimentKind::prescribed_horizon && !(horizon > 0.0)) {
      bad_value("T0", "must be > 0");
    }
  } else {
    if (!(t_end > 0.0)) bad_value("t_end", "must be > 0");
  }
  if (!(a > 0.0)) bad_value("a", "must be > 0");
  if (grid_n < 3) bad_value("N", "must be >= 3");
  if (!(dt_base > 0.0)) bad_value("dt_base", "must be > 0");
  if (!(amplitude >= 0.0)) bad_value("A", "must be >= 0");
  if (init_scale != 1.0 && init_scale != 10.0) {
    bad_value("init_scale", "must be 1 or 10");
  }
  if (!(gamma0 > 0.0)) bad_value("gamma0", "must be > 0");
  if (stride < 1) bad_value("stride", "must be >= 1");
  for (double ts : snapshot_times) {
    if (!(ts >= 0.0)) bad_value("snapshot_times", "entries must be >= 0");
  }
  // p <= 1 is rejected by the schedule itself (divergent horizon).
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  int line_no = 0;
  bool have_case = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') continue;  // section header
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " is not key=value: '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " has an empty key or value");
    }

    if (key == "case") {
      have_case = true;
      if (value == "I") cfg.kind = ExperimentKind::zeta_horizon;
      else if (value == "II") cfg.kind = ExperimentKind::prescribed_horizon;
      else if (value == "open_loop") cfg.kind = ExperimentKind::open_loop;
      else bad_value(key, "must be one of I, II, open_loop");
    } else if (key == "p") {
      cfg.p = parse_double(key, value);
    } else if (key == "T0") {
      cfg.horizon = parse_double(key, value);
    } else if (key == "lambda0") {
      cfg.lambda0 = parse_double(key, value);
    } else if (key == "sigma") {
      cfg.sigma = parse_double(key, value);
    } else if (key == "n_max") {
      cfg.n_max = parse_int(key, value);
    } else if (key == "a") {
      cfg.a = parse_double(key, value);
    } else if (key == "c") {
      cfg.c = parse_double(key, value);
    } else if (key == "N") {
      cfg.grid_n = parse_int(key, value);
    } else if (key == "dt_base") {
      cfg.dt_base = parse_double(key, value);
    } else if (key == "A" || key == "amplitude") {
      cfg.amplitude = parse_double(key, value);
    } else if (key == "init_scale") {
      cfg.init_scale = parse_double(key, value);
    } else if (key == "gamma0") {
      cfg.gamma0 = parse_double(key, value);
    } else if (key == "stride") {
      cfg.stride = parse_int(key, value);
    } else if (key == "t_end") {
      cfg.t_end = parse_double(key, value);
    } else if (key == "out_dir") {
      cfg.out_dir = value;
    } else if (key == "snapshot_times") {
      cfg.snapshot_times.clear();
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        cfg.snapshot_times.push_back(parse_double(key, trim(item)));
      }
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  if (!have_case) {
    throw std::invalid_argument("config: missing required key 'case'");
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("config: cannot open '" + path + "'");
  }
  return parse_config(in);
}

}  // namespace ftstab
