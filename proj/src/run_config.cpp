#include "hardy/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "hardy/field_io.hpp"

namespace hardy {

namespace {

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_g17(v[i]);
  }
  return out;
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig c;
  std::map<std::string, std::function<void(const std::string&)>> setters{
      {"dim", [&](const std::string& v) { c.dim = std::stoi(v); }},
      {"N", [&](const std::string& v) { c.n_points = std::stoi(v); }},
      {"L", [&](const std::string& v) { c.half_width = std::stod(v); }},
      {"t_start", [&](const std::string& v) { c.t_start = std::stod(v); }},
      {"t_end", [&](const std::string& v) { c.t_end = std::stod(v); }},
      {"dt", [&](const std::string& v) { c.dt = std::stod(v); }},
      {"times", [&](const std::string& v) { c.times = parse_list(v); }},
      {"alpha", [&](const std::string& v) { c.alpha = std::stod(v); }},
      {"beta", [&](const std::string& v) { c.beta = std::stod(v); }},
      {"T", [&](const std::string& v) { c.T = std::stod(v); }},
      {"lambda", [&](const std::string& v) { c.lambdas = parse_list(v); }},
      {"epsilon", [&](const std::string& v) { c.epsilon = std::stod(v); }},
      {"t_min", [&](const std::string& v) { c.t_min = std::stod(v); }},
      {"data", [&](const std::string& v) { c.data = v; }},
      {"gamma", [&](const std::string& v) { c.gamma = std::stod(v); }},
      {"hermite_k", [&](const std::string& v) { c.hermite_k = std::stoi(v); }},
      {"poly", [&](const std::string& v) { c.poly = parse_list(v); }},
      {"bump_width", [&](const std::string& v) { c.bump_width = std::stod(v); }},
      {"bump_center", [&](const std::string& v) { c.bump_center = std::stod(v); }},
      {"method", [&](const std::string& v) { c.method = v; }},
      {"cutoff", [&](const std::string& v) { c.cutoff = std::stod(v); }},
      {"gammas", [&](const std::string& v) { c.gammas = parse_list(v); }},
      {"seed", [&](const std::string& v) { c.seed = std::stoull(v); }},
  };

  std::stringstream ss(text);
  std::string line;
  long lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value, got '" +
                        line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end())
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    try {
      it->second(value);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("config line " + std::to_string(lineno) + ": cannot parse value for '" +
                        key + "'");
    }
  }

  const std::vector<std::string> known_data{"gaussian", "hermite", "polynomial", "bump"};
  if (std::find(known_data.begin(), known_data.end(), c.data) == known_data.end())
    throw ConfigError("config: unknown data family '" + c.data + "'");
  const std::vector<std::string> known_methods{"spectral", "convolution", "pseudoconformal", "all"};
  if (std::find(known_methods.begin(), known_methods.end(), c.method) == known_methods.end())
    throw ConfigError("config: unknown method '" + c.method + "'");
  return c;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string resolved_config_text(const RunConfig& c) {
  std::ostringstream out;
  out << "L=" << format_g17(c.half_width) << '\n'
      << "N=" << c.n_points << '\n'
      << "T=" << format_g17(c.T) << '\n'
      << "alpha=" << format_g17(c.alpha) << '\n'
      << "beta=" << format_g17(c.beta) << '\n'
      << "bump_center=" << format_g17(c.bump_center) << '\n'
      << "bump_width=" << format_g17(c.bump_width) << '\n'
      << "cutoff=" << format_g17(c.cutoff) << '\n'
      << "data=" << c.data << '\n'
      << "dim=" << c.dim << '\n'
      << "dt=" << format_g17(c.dt) << '\n'
      << "epsilon=" << format_g17(c.epsilon) << '\n'
      << "gamma=" << format_g17(c.gamma) << '\n'
      << "gammas=" << join(c.gammas) << '\n'
      << "hermite_k=" << c.hermite_k << '\n'
      << "lambda=" << join(c.lambdas) << '\n'
      << "method=" << c.method << '\n'
      << "poly=" << join(c.poly) << '\n'
      << "seed=" << c.seed << '\n'
      << "t_end=" << format_g17(c.t_end) << '\n'
      << "t_min=" << format_g17(c.t_min) << '\n'
      << "t_start=" << format_g17(c.t_start) << '\n'
      << "times=" << join(c.times) << '\n';
  return out.str();
}

std::vector<double> config_times(const RunConfig& c) {
  if (!c.times.empty()) return c.times;
  if (!(c.dt > 0)) throw ConfigError("config: dt must be positive");
  if (c.t_end < c.t_start) throw ConfigError("config: t_end < t_start");
  std::vector<double> out;
  const long steps = std::lround((c.t_end - c.t_start) / c.dt);
  for (long i = 0; i <= steps; ++i) out.push_back(c.t_start + i * c.dt);
  return out;
}

Grid config_grid(const RunConfig& c) { return make_grid(c.dim, c.n_points, c.half_width); }

SampledField config_datum(const RunConfig& c) {
  Grid g = config_grid(c);
  if (c.data == "gaussian") {
    if (g.dim == 1)
      return sample_function(g, [&](double x) { return cplx(std::exp(-c.gamma * x * x), 0); });
    return sample_function(
        g, [&](double x, double y) { return cplx(std::exp(-c.gamma * (x * x + y * y)), 0); });
  }
  if (c.data == "hermite") {
    if (g.dim == 1) return sample_hermite_gaussian(g, c.hermite_k);
    return sample_hermite_gaussian2(g, c.hermite_k, c.hermite_k);
  }
  if (c.data == "polynomial") {
    if (g.dim != 1) throw ConfigError("config: polynomial data is 1D");
    return sample_function(g, [&](double x) {
      double p = 0, xp = 1;
      for (double coef : c.poly) {
        p += coef * xp;
        xp *= x;
      }
      return cplx(p * std::exp(-0.25 * x * x), 0);
    });
  }
  // bump
  if (g.dim != 1) throw ConfigError("config: bump data is 1D");
  return sample_function(g, [&](double x) {
    const double r = (x - c.bump_center) / c.bump_width;
    return cplx(std::abs(r) < 1 ? std::exp(-1.0 / (1 - r * r)) : 0.0, 0);
  });
}

} // namespace hardy
