#include "dftatoms/radial_density.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dftatoms/constants.hpp"

namespace dfta {

double radial_mass(const RadialGrid& grid, const std::vector<double>& values) {
  std::vector<double> integrand(values.size());
  const auto& r = grid.nodes();
  for (std::size_t i = 0; i < values.size(); ++i)
    integrand[i] = 4.0 * pi * r[i] * r[i] * values[i];
  return integrate_radial(grid, integrand);
}

RadialDensity::RadialDensity(RadialGrid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw std::invalid_argument("density values length mismatch");
  for (double v : values_)
    if (!(v >= 0.0)) throw std::invalid_argument("density must be >= 0");
  mass_ = radial_mass(grid_, values_);
}

void RadialDensity::write_csv(std::ostream& os) const {
  os << "r,rho\n";
  char buf[80];
  for (std::size_t i = 0; i < values_.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", grid_.nodes()[i],
                  values_[i]);
    os << buf;
  }
}

void RadialDensity::write_json(std::ostream& os) const {
  char buf[48];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  os << "{\"grid\":{\"nodes\":[";
  for (std::size_t i = 0; i < grid_.size(); ++i)
    os << (i ? "," : "") << num(grid_.nodes()[i]);
  os << "],\"weights\":[";
  for (std::size_t i = 0; i < grid_.size(); ++i)
    os << (i ? "," : "") << num(grid_.weights()[i]);
  os << "]},\"values\":[";
  for (std::size_t i = 0; i < values_.size(); ++i)
    os << (i ? "," : "") << num(values_[i]);
  os << "],\"mass\":" << num(mass_) << "}";
}

RadialDensity RadialDensity::read_csv(std::istream& is, GridSpacing spacing) {
  std::string line;
  std::vector<double> r, v;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.find("r") != std::string::npos &&
          line.find("rho") != std::string::npos)
        continue;  // header
    }
    std::istringstream ls(line);
    std::string a, b;
    if (!std::getline(ls, a, ',') || !std::getline(ls, b, ','))
      throw std::invalid_argument("bad csv line: " + line);
    r.push_back(std::stod(a));
    v.push_back(std::stod(b));
  }
  return RadialDensity(RadialGrid(std::move(r), spacing), std::move(v));
}

ChargeDistribution::ChargeDistribution(RadialGrid grid,
                                       std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw std::invalid_argument("charge values length mismatch");
  mass_ = radial_mass(grid_, values_);
}

}  // namespace dfta
