#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sphdist/distribution.hpp"
#include "sphdist/polygon_dist.hpp"
#include "sphdist/sphere_core.hpp"

namespace sphdist {

// Seed sites on a sphere. Requires at least 4 pairwise distinct seeds that do
// not all lie on one circle, so every Voronoi cell is a bounded polygon.
class SeedSet {
 public:
  // Throws GeometryError(DegenerateSeeds).
  explicit SeedSet(std::vector<UnitVector> seeds, Sphere sphere = Sphere{});

  const std::vector<UnitVector>& seeds() const { return seeds_; }
  const Sphere& sphere() const { return sphere_; }
  std::size_t size() const { return seeds_.size(); }

  // Index of the seed at minimal arc distance (brute force).
  std::size_t nearest(const UnitVector& q) const;

 private:
  std::vector<UnitVector> seeds_;
  Sphere sphere_;
};

struct VoronoiCell {
  std::size_t seed_index;
  ConvexSphericalPolygon polygon;
  FanDecomposition fan;
  double area;
};

// Spherical Voronoi diagram obtained as the dual of the convex hull of the
// seeds: hull facets are the spherical Delaunay triangles and their outward
// unit normals are the Voronoi vertices.
class SphericalVoronoiDiagram {
 public:
  const SeedSet& seeds() const { return seeds_; }
  const Sphere& sphere() const { return seeds_.sphere(); }
  const std::vector<VoronoiCell>& cells() const { return cells_; }
  // Hull facets (seed indices, counterclockwise seen from outside).
  const std::vector<std::array<std::size_t, 3>>& delaunay_triangles() const { return facets_; }
  // Circumcenter of each Delaunay triangle, parallel to delaunay_triangles().
  const std::vector<UnitVector>& circumcenters() const { return circumcenters_; }

  double total_area() const;
  // Cell whose closed polygon contains q (first match on shared boundaries).
  std::size_t locate(const UnitVector& q) const;

  double cdf(double r) const { return distribution_->cdf(r); }
  double pdf(double r) const { return distribution_->pdf(r); }
  // Mixture over every fan triangle of every cell, weighted by area / 4 pi R^2.
  const DistanceDistribution& distribution() const { return *distribution_; }

 private:
  friend SphericalVoronoiDiagram build_diagram(const SeedSet& seeds);
  explicit SphericalVoronoiDiagram(SeedSet seeds) : seeds_(std::move(seeds)) {}

  SeedSet seeds_;
  std::vector<std::array<std::size_t, 3>> facets_;
  std::vector<UnitVector> circumcenters_;
  std::vector<VoronoiCell> cells_;
  std::optional<DistanceDistribution> distribution_;
};

SphericalVoronoiDiagram build_diagram(const SeedSet& seeds);

// Convex hull facets of points on the unit sphere, outward oriented.
// Exposed for testing; throws DegenerateSeeds for coplanar input.
std::vector<std::array<std::size_t, 3>> convex_hull_facets(const std::vector<UnitVector>& points);

}  // namespace sphdist
