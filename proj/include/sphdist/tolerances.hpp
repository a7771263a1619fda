#pragma once

namespace sphdist {

// Shared numeric tolerances. Angles are central angles (radians) unless noted.
struct Tolerances {
  // Unit-vector renormalization and near-zero cross products.
  static constexpr double normalization = 1e-12;
  // Degenerate triangles (spherical excess) and degenerate altitudes.
  static constexpr double degeneracy = 1e-10;
  // Postcondition checks on identities (foot on circle, arc sums, ...).
  static constexpr double identity = 1e-10;
  // Sum-of-arcs betweenness test that decides the reflection multiplier.
  static constexpr double betweenness = 1e-9;
  // Case boundaries of the piecewise distance law.
  static constexpr double case_boundary = 1e-12;
  // Merging of duplicate Voronoi vertices and breakpoints.
  static constexpr double vertex_merge = 1e-10;
  static constexpr double breakpoint_merge = 1e-12;
  // Margin by which a seed must lie inside each polygon edge.
  static constexpr double interior_margin = 1e-10;
  // Minimum pairwise seed separation.
  static constexpr double seed_separation = 1e-8;
};

}  // namespace sphdist
