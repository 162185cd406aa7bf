#ifndef NNAPPROX_CONFIG_IO_HPP
#define NNAPPROX_CONFIG_IO_HPP

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "nnapprox/presets.hpp"

namespace nnapprox {

namespace detail {

// %.17g round-trips IEEE doubles exactly through strtod.
inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline double parse_double(const std::string& s) {
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) throw std::invalid_argument("config: bad numeric value: " + s);
  return x;
}

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace detail

inline std::string serialize_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "target = " << to_string(cfg.target.tag) << '\n';
  out << "alpha = " << detail::format_double(cfg.target.alpha) << '\n';
  out << "family = " << to_string(cfg.family) << '\n';
  out << "a = " << detail::format_double(cfg.a) << '\n';
  out << "b = " << detail::format_double(cfg.b) << '\n';
  out << "transform = " << to_string(cfg.transform) << '\n';
  out << "weight = " << to_string(cfg.weight) << '\n';
  out << "n = " << cfg.n << '\n';
  out << "l = " << cfg.l << '\n';
  out << "c = " << detail::format_double(cfg.c) << '\n';
  out << "d = " << detail::format_double(cfg.d) << '\n';
  out << "spacing = " << to_string(cfg.spacing) << '\n';
  out << "m = " << cfg.m << '\n';
  out << "max_outer = " << cfg.max_outer << '\n';
  return out.str();
}

inline ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  double alpha = cfg.target.alpha;
  TargetKind tag = cfg.target.tag;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: expected key = value, got: " + line);
    }
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key == "target") tag = target_from_string(value);
    else if (key == "alpha") alpha = detail::parse_double(value);
    else if (key == "family") cfg.family = family_from_string(value);
    else if (key == "a") cfg.a = detail::parse_double(value);
    else if (key == "b") cfg.b = detail::parse_double(value);
    else if (key == "transform") cfg.transform = transform_from_string(value);
    else if (key == "weight") cfg.weight = weight_from_string(value);
    else if (key == "n") cfg.n = static_cast<std::size_t>(std::stoull(value));
    else if (key == "l") cfg.l = static_cast<std::size_t>(std::stoull(value));
    else if (key == "c") cfg.c = detail::parse_double(value);
    else if (key == "d") cfg.d = detail::parse_double(value);
    else if (key == "spacing") cfg.spacing = spacing_from_string(value);
    else if (key == "m") cfg.m = std::stoi(value);
    else if (key == "max_outer") cfg.max_outer = std::stoi(value);
    else throw std::invalid_argument("config: unknown key: " + key);
  }
  cfg.target = make_target(tag, alpha);
  return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  return parse_config(in);
}

}  // namespace nnapprox

#endif  // NNAPPROX_CONFIG_IO_HPP
