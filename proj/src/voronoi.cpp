#include "sphdist/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include "sphdist/errors.hpp"
#include "sphdist/tolerances.hpp"

namespace sphdist {

namespace {

constexpr const char* kDegenerateMessage = "at least 4 non-cocircular seeds required";

// Facet plane tolerance for points on the unit sphere.
constexpr double kPlaneEps = 1e-12;

struct HullFace {
  std::array<std::size_t, 3> v;
  Vec3 normal;  // unit, outward
  double offset;
  bool alive = true;
};

HullFace make_face(const std::vector<UnitVector>& pts, std::size_t a, std::size_t b,
                   std::size_t c, const Vec3& interior) {
  const Vec3& pa = pts[a].vec();
  Vec3 n = (pts[b].vec() - pa).cross(pts[c].vec() - pa);
  n = n / n.norm();
  HullFace f{{a, b, c}, n, n.dot(pa)};
  if (n.dot(interior) - f.offset > 0.0) {
    f.v = {a, c, b};
    f.normal = -n;
    f.offset = -f.offset;
  }
  return f;
}

}  // namespace

std::vector<std::array<std::size_t, 3>> convex_hull_facets(const std::vector<UnitVector>& pts) {
  const std::size_t n = pts.size();
  if (n < 4) throw GeometryError(ErrorKind::DegenerateSeeds, kDegenerateMessage);

  // Initial tetrahedron from extreme points.
  const Vec3& p0 = pts[0].vec();
  std::size_t i1 = 0, i2 = 0, i3 = 0;
  double best = -1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double d = (pts[i].vec() - p0).norm();
    if (d > best) best = d, i1 = i;
  }
  const Vec3 e1 = pts[i1].vec() - p0;
  best = -1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double d = (pts[i].vec() - p0).cross(e1).norm();
    if (d > best) best = d, i2 = i;
  }
  if (best < Tolerances::degeneracy) throw GeometryError(ErrorKind::DegenerateSeeds, kDegenerateMessage);
  const Vec3 e2 = pts[i2].vec() - p0;
  best = -1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double d = std::abs(triple(e1, e2, pts[i].vec() - p0));
    if (d > best) best = d, i3 = i;
  }
  if (best < Tolerances::degeneracy) throw GeometryError(ErrorKind::DegenerateSeeds, kDegenerateMessage);

  const Vec3 interior = (p0 + pts[i1].vec() + pts[i2].vec() + pts[i3].vec()) * 0.25;
  std::vector<HullFace> faces;
  faces.push_back(make_face(pts, 0, i1, i2, interior));
  faces.push_back(make_face(pts, 0, i1, i3, interior));
  faces.push_back(make_face(pts, 0, i2, i3, interior));
  faces.push_back(make_face(pts, i1, i2, i3, interior));

  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t idx = 1; idx < n; ++idx) {
    if (idx == i1 || idx == i2 || idx == i3) continue;
    const Vec3& p = pts[idx].vec();
    edges.clear();
    bool any = false;
    for (auto& f : faces) {
      if (!f.alive || f.normal.dot(p) - f.offset <= kPlaneEps) continue;
      any = true;
      f.alive = false;
      for (int k = 0; k < 3; ++k) edges.emplace(f.v[k], f.v[(k + 1) % 3]);
    }
    if (!any) {
      throw GeometryError(ErrorKind::DegenerateSeeds, "duplicate seed or seed inside the hull");
    }
    for (const auto& [a, b] : edges) {
      if (edges.count({b, a})) continue;
      faces.push_back(make_face(pts, a, b, idx, interior));
    }
    std::erase_if(faces, [](const HullFace& f) { return !f.alive; });
  }

  std::vector<std::array<std::size_t, 3>> out;
  out.reserve(faces.size());
  for (const auto& f : faces) out.push_back(f.v);
  return out;
}

SeedSet::SeedSet(std::vector<UnitVector> seeds, Sphere sphere)
    : seeds_(std::move(seeds)), sphere_(sphere) {
  if (seeds_.size() < 4) throw GeometryError(ErrorKind::DegenerateSeeds, kDegenerateMessage);
  for (std::size_t i = 0; i < seeds_.size(); ++i) {
    for (std::size_t j = i + 1; j < seeds_.size(); ++j) {
      if (central_angle(seeds_[i], seeds_[j]) <= Tolerances::seed_separation) {
        throw GeometryError(ErrorKind::DegenerateSeeds, "seeds must be pairwise distinct");
      }
    }
  }
  // Non-coplanarity (hence bounded polygonal cells) is checked by the hull.
  (void)convex_hull_facets(seeds_);
}

std::size_t SeedSet::nearest(const UnitVector& q) const {
  std::size_t best = 0;
  double best_dot = -2.0;
  for (std::size_t i = 0; i < seeds_.size(); ++i) {
    const double d = seeds_[i].dot(q);
    if (d > best_dot) best_dot = d, best = i;
  }
  return best;
}

double SphericalVoronoiDiagram::total_area() const {
  double sum = 0.0;
  for (const auto& c : cells_) sum += c.area;
  return sum;
}

std::size_t SphericalVoronoiDiagram::locate(const UnitVector& q) const {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].polygon.contains(q)) return i;
  }
  // Only reachable through rounding on a shared boundary.
  return seeds_.nearest(q);
}

SphericalVoronoiDiagram build_diagram(const SeedSet& seeds) {
  SphericalVoronoiDiagram d(seeds);
  const auto& pts = seeds.seeds();
  d.facets_ = convex_hull_facets(pts);
  d.circumcenters_.reserve(d.facets_.size());
  for (const auto& f : d.facets_) {
    const Vec3& a = pts[f[0]].vec();
    d.circumcenters_.emplace_back((pts[f[1]].vec() - a).cross(pts[f[2]].vec() - a));
  }

  std::vector<std::vector<std::size_t>> incident(pts.size());
  for (std::size_t k = 0; k < d.facets_.size(); ++k) {
    for (std::size_t v : d.facets_[k]) incident[v].push_back(k);
  }

  std::vector<WeightedTriangle> mixture;
  d.cells_.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec3& s = pts[i].vec();
    // Tangent frame with a fixed reference axis: the one least aligned with s.
    Vec3 ref{1, 0, 0};
    if (std::abs(s.y) <= std::abs(s.x) && std::abs(s.y) <= std::abs(s.z)) ref = {0, 1, 0};
    else if (std::abs(s.z) <= std::abs(s.x) && std::abs(s.z) <= std::abs(s.y)) ref = {0, 0, 1};
    const Vec3 t1 = (ref - s * ref.dot(s)) / (ref - s * ref.dot(s)).norm();
    const Vec3 t2 = s.cross(t1);

    std::vector<std::pair<double, std::size_t>> ring;
    for (std::size_t k : incident[i]) {
      const Vec3& v = d.circumcenters_[k].vec();
      ring.emplace_back(std::atan2(v.dot(t2), v.dot(t1)), k);
    }
    std::sort(ring.begin(), ring.end());
    std::vector<UnitVector> verts;
    for (const auto& [angle, k] : ring) {
      const UnitVector& v = d.circumcenters_[k];
      if (!verts.empty() && central_angle(verts.back(), v) <= Tolerances::vertex_merge) continue;
      verts.push_back(v);
    }
    while (verts.size() > 1 && central_angle(verts.back(), verts.front()) <= Tolerances::vertex_merge) {
      verts.pop_back();
    }
    if (verts.size() < 3) throw GeometryError(ErrorKind::DegenerateSeeds, kDegenerateMessage);

    ConvexSphericalPolygon polygon(std::move(verts), pts[i], seeds.sphere());
    FanDecomposition fan = decompose(polygon);
    const double area = fan.area();
    for (const auto& t : fan.triangles()) mixture.push_back({t.area(), t});
    d.cells_.push_back(VoronoiCell{i, std::move(polygon), std::move(fan), area});
  }
  d.distribution_.emplace(std::move(mixture));
  return d;
}

}  // namespace sphdist
