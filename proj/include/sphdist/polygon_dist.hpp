#pragma once

#include <vector>

#include "sphdist/distribution.hpp"
#include "sphdist/sphere_core.hpp"
#include "sphdist/tri_dist.hpp"

namespace sphdist {

// Convex spherical polygon with a strictly interior pivot point. The vertex
// ring is reoriented to counterclockwise (seen from outside) on construction.
class ConvexSphericalPolygon {
 public:
  // Throws NotConvex or SeedNotInterior.
  ConvexSphericalPolygon(std::vector<UnitVector> vertices, const UnitVector& seed,
                         Sphere sphere = Sphere{});

  const std::vector<UnitVector>& vertices() const { return vertices_; }
  const UnitVector& seed() const { return seed_; }
  const Sphere& sphere() const { return sphere_; }
  std::size_t size() const { return vertices_.size(); }

  // True if q is on the inner side of every edge great circle (boundary counts).
  bool contains(const UnitVector& q) const;

 private:
  std::vector<UnitVector> vertices_;
  UnitVector seed_;
  Sphere sphere_;
};

// Fan of triangles P B_i B_{i+1} pivoting at the polygon seed.
class FanDecomposition {
 public:
  // Builds the fan from an explicit list of triangles sharing the vertex P.
  explicit FanDecomposition(std::vector<CanonicalTriangle> triangles);

  const std::vector<CanonicalTriangle>& triangles() const { return triangles_; }
  const std::vector<double>& weights() const { return weights_; }
  // Total area of the fan in sphere units.
  double area() const { return area_; }

  double cdf(double r) const { return distribution_.cdf(r); }
  double pdf(double r) const { return distribution_.pdf(r); }
  const DistanceDistribution& distribution() const { return distribution_; }

 private:
  static DistanceDistribution make_distribution(const std::vector<CanonicalTriangle>& t);

  std::vector<CanonicalTriangle> triangles_;
  std::vector<double> weights_;
  double area_ = 0.0;
  DistanceDistribution distribution_;
};

FanDecomposition decompose(const ConvexSphericalPolygon& polygon);

// Area of a convex polygon by summing its fan triangle areas.
double polygon_area(const ConvexSphericalPolygon& polygon);

}  // namespace sphdist
