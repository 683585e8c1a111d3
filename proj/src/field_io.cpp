#include "hardy/field_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hardy {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

void write_field_csv(const std::string& path, const SampledField& f) {
  const Grid& g = f.grid;
  std::ostringstream out;
  if (g.dim == 1) {
    out << "x,re,im\n";
    for (int j = 0; j < g.n; ++j)
      out << format_g17(g.x(j)) << ',' << format_g17(f.values[j].real()) << ','
          << format_g17(f.values[j].imag()) << '\n';
  } else {
    out << "x,y,re,im\n";
    for (int j0 = 0; j0 < g.n; ++j0)
      for (int j1 = 0; j1 < g.n; ++j1) {
        const cplx v = f.values[g.index(j0, j1)];
        out << format_g17(g.x(j0)) << ',' << format_g17(g.x(j1)) << ','
            << format_g17(v.real()) << ',' << format_g17(v.imag()) << '\n';
      }
  }
  atomic_write(path, out.str());
}

namespace {

std::vector<double> split_doubles(const std::string& line, int expect, long lineno) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  if ((int)out.size() != expect)
    throw std::runtime_error("field CSV line " + std::to_string(lineno) + ": expected " +
                             std::to_string(expect) + " columns");
  return out;
}

} // namespace

SampledField read_field_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open field CSV: " + path);
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty field CSV: " + path);
  int dim;
  if (header == "x,re,im")
    dim = 1;
  else if (header == "x,y,re,im")
    dim = 2;
  else
    throw std::runtime_error("unrecognized field CSV header: " + header);

  std::vector<double> xs, ys;
  std::vector<cplx> vals;
  std::string line;
  long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto cols = split_doubles(line, dim + 2, lineno);
    xs.push_back(cols[0]);
    if (dim == 2) ys.push_back(cols[1]);
    vals.emplace_back(cols[dim], cols[dim + 1]);
  }
  if (vals.empty()) throw std::runtime_error("field CSV has no data rows: " + path);

  long n_axis;
  if (dim == 1) {
    n_axis = (long)vals.size();
  } else {
    n_axis = (long)std::lround(std::sqrt((double)vals.size()));
    if (n_axis * n_axis != (long)vals.size())
      throw std::runtime_error("2D field CSV row count is not a square");
  }
  // Recover the grid from the first axis samples: x_0 = -L + dx/2.
  const double dx = (dim == 1) ? (xs[1] - xs[0]) : (ys[1] - ys[0]);
  const double half_width = dx / 2 - (dim == 1 ? xs[0] : ys[0]);
  Grid g = make_grid(dim, (int)n_axis, half_width);
  Eigen::ArrayXcd v(g.total_points());
  for (long i = 0; i < (long)vals.size(); ++i) v[i] = vals[i];
  return make_sampled_field(g, std::move(v));
}

} // namespace hardy
