#include "sphdist/polygon_dist.hpp"

#include <algorithm>

#include "sphdist/errors.hpp"
#include "sphdist/tolerances.hpp"

namespace sphdist {

ConvexSphericalPolygon::ConvexSphericalPolygon(std::vector<UnitVector> vertices,
                                               const UnitVector& seed, Sphere sphere)
    : vertices_(std::move(vertices)), seed_(seed), sphere_(sphere) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw GeometryError(ErrorKind::NotConvex, "a spherical polygon needs at least 3 vertices");
  }
  // Orientation from the side of the seed: positive triple products mean the
  // ring runs counterclockwise around the seed.
  double orientation = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    orientation += triple(vertices_[i].vec(), vertices_[(i + 1) % n].vec(), seed_.vec());
  }
  if (orientation < 0.0) std::reverse(vertices_.begin(), vertices_.end());

  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = vertices_[i].vec();
    const Vec3& b = vertices_[(i + 1) % n].vec();
    const Vec3& c = vertices_[(i + 2) % n].vec();
    const Vec3 edge = a.cross(b);
    const double len = edge.norm();
    if (len < Tolerances::normalization) {
      throw GeometryError(ErrorKind::NotConvex, "polygon has a repeated or antipodal edge");
    }
    if (edge.dot(seed_.vec()) / len <= Tolerances::interior_margin) {
      throw GeometryError(ErrorKind::SeedNotInterior, "seed is not strictly inside the polygon");
    }
    if (edge.dot(c) / len <= 0.0) {
      throw GeometryError(ErrorKind::NotConvex, "polygon has an interior angle of at least pi");
    }
  }
}

bool ConvexSphericalPolygon::contains(const UnitVector& q) const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (triple(vertices_[i].vec(), vertices_[(i + 1) % n].vec(), q.vec()) < 0.0) return false;
  }
  return true;
}

FanDecomposition::FanDecomposition(std::vector<CanonicalTriangle> triangles)
    : triangles_(std::move(triangles)), distribution_(make_distribution(triangles_)) {
  for (const auto& t : triangles_) area_ += t.area();
  weights_.reserve(triangles_.size());
  for (const auto& t : triangles_) weights_.push_back(t.area() / area_);
}

DistanceDistribution FanDecomposition::make_distribution(
    const std::vector<CanonicalTriangle>& triangles) {
  if (triangles.empty()) {
    throw GeometryError(ErrorKind::InvalidArgument, "fan needs at least one triangle");
  }
  std::vector<WeightedTriangle> parts;
  parts.reserve(triangles.size());
  for (const auto& t : triangles) parts.push_back({t.area(), t});
  return DistanceDistribution(std::move(parts));
}

FanDecomposition decompose(const ConvexSphericalPolygon& polygon) {
  const auto& v = polygon.vertices();
  const std::size_t n = v.size();
  std::vector<CanonicalTriangle> fan;
  fan.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    fan.push_back(CanonicalTriangle::from(
        SphericalTriangle(polygon.seed(), v[i], v[(i + 1) % n], polygon.sphere())));
  }
  return FanDecomposition(std::move(fan));
}

double polygon_area(const ConvexSphericalPolygon& polygon) {
  const auto& v = polygon.vertices();
  const std::size_t n = v.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += triangle_area(SphericalTriangle(polygon.seed(), v[i], v[(i + 1) % n], polygon.sphere()));
  }
  return sum;
}

}  // namespace sphdist
