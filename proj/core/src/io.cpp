#include "airylab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace airylab {

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

FreqProfile read_profile_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("profile csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "xi,re,im") throw DomainError("profile csv: expected header xi,re,im");

  std::vector<double> xs;
  std::vector<cplx> vals;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, c;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c)) {
      throw DomainError("profile csv: malformed row '" + line + "'");
    }
    try {
      xs.push_back(std::stod(a));
      vals.emplace_back(std::stod(b), std::stod(c));
    } catch (const std::exception&) {
      throw DomainError("profile csv: malformed number in '" + line + "'");
    }
  }
  if (xs.size() < 2) throw DomainError("profile csv: need at least two nodes");
  for (std::size_t j = 1; j < xs.size(); ++j) {
    if (!(xs[j] > xs[j - 1])) throw DomainError("profile csv: xi not strictly increasing");
  }
  FreqGrid grid(xs.front(), xs.back(), xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (std::abs(xs[j] - grid.node(j)) > 1e-9 * std::max(1.0, grid.step())) {
      throw DomainError("profile csv: nodes are not uniformly spaced");
    }
  }
  return {grid, std::move(vals)};
}

FreqProfile read_profile_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("profile csv: cannot open " + path);
  return read_profile_csv(in);
}

void write_profile_csv(std::ostream& out, const FreqProfile& u) {
  out << "xi,re,im\n";
  for (std::size_t j = 0; j < u.size(); ++j) {
    out << format_real(u.grid().node(j)) << ',' << format_real(u[j].real()) << ','
        << format_real(u[j].imag()) << '\n';
  }
}

void write_field_csv(std::ostream& out, const SpaceTimeField& f) {
  out << "t,x,re,im\n";
  const auto& g = f.grid();
  for (std::size_t i = 0; i < f.nt(); ++i) {
    const std::string t = format_real(g.t().node(i));
    for (std::size_t k = 0; k < f.nx(); ++k) {
      const cplx z = f(i, k);
      out << t << ',' << format_real(g.x().node(k)) << ',' << format_real(z.real()) << ','
          << format_real(z.imag()) << '\n';
    }
  }
}

std::string freq_grid_json(const FreqGrid& g) {
  nlohmann::ordered_json j;
  j["xi_min"] = g.xi_min();
  j["xi_max"] = g.xi_max();
  j["n"] = g.size();
  j["step"] = g.step();
  return j.dump();
}

std::string spacetime_grid_json(const SpaceTimeGrid& g) {
  nlohmann::ordered_json j;
  j["t_min"] = g.t().min;
  j["t_max"] = g.t().max;
  j["nt"] = g.t().n;
  j["x_min"] = g.x().min;
  j["x_max"] = g.x().max;
  j["nx"] = g.x().n;
  j["rule"] = g.rule() == Quadrature::trapezoid ? "trapezoid" : "simpson";
  return j.dump();
}

}  // namespace airylab
