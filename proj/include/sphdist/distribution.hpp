#pragma once

#include <vector>

#include "sphdist/tri_dist.hpp"

namespace sphdist {

struct WeightedTriangle {
  double weight;
  CanonicalTriangle triangle;
};

// Distribution of an arc distance expressed as an area-weighted mixture of
// vertex-to-uniform-point laws on spherical triangles. A single triangle, a
// fan-decomposed polygon, and a whole Voronoi diagram all take this form.
class DistanceDistribution {
 public:
  explicit DistanceDistribution(const CanonicalTriangle& triangle);
  // Weights must be positive; they are renormalized to sum to one.
  explicit DistanceDistribution(std::vector<WeightedTriangle> components);

  double cdf(double r) const;
  double pdf(double r) const;

  // Union of all component breakpoints, sorted, merged at 1e-12 (central angle).
  std::vector<double> breakpoints() const;
  // Largest distance with positive density.
  double support_max() const;

  const std::vector<WeightedTriangle>& components() const { return components_; }
  const Sphere& sphere() const { return components_.front().triangle.sphere(); }

 private:
  std::vector<WeightedTriangle> components_;
};

}  // namespace sphdist
