#include "sphdist/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "sphdist/errors.hpp"
#include "sphdist/tolerances.hpp"

namespace sphdist {

DistanceDistribution::DistanceDistribution(const CanonicalTriangle& triangle)
    : components_{WeightedTriangle{1.0, triangle}} {}

DistanceDistribution::DistanceDistribution(std::vector<WeightedTriangle> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw GeometryError(ErrorKind::InvalidArgument, "distribution needs at least one component");
  }
  double total = 0.0;
  for (const auto& c : components_) {
    if (!(c.weight > 0.0)) {
      throw GeometryError(ErrorKind::InvalidArgument, "component weights must be positive");
    }
    if (!(c.triangle.sphere() == components_.front().triangle.sphere())) {
      throw GeometryError(ErrorKind::InvalidArgument, "components must share one sphere");
    }
    total += c.weight;
  }
  for (auto& c : components_) c.weight /= total;
}

double DistanceDistribution::cdf(double r) const {
  double sum = 0.0;
  for (const auto& c : components_) sum += c.weight * c.triangle.cdf(r);
  return std::clamp(sum, 0.0, 1.0);
}

double DistanceDistribution::pdf(double r) const {
  double sum = 0.0;
  for (const auto& c : components_) sum += c.weight * c.triangle.pdf(r);
  return sum;
}

std::vector<double> DistanceDistribution::breakpoints() const {
  std::vector<double> all;
  all.reserve(4 * components_.size());
  for (const auto& c : components_) {
    for (double b : c.triangle.breakpoints()) all.push_back(b);
  }
  std::sort(all.begin(), all.end());
  const double merge = Tolerances::breakpoint_merge * sphere().radius();
  std::vector<double> out;
  for (double b : all) {
    if (out.empty() || b - out.back() > merge) out.push_back(b);
  }
  return out;
}

double DistanceDistribution::support_max() const {
  double m = 0.0;
  for (const auto& c : components_) m = std::max(m, c.triangle.l_pc());
  return m;
}

}  // namespace sphdist
