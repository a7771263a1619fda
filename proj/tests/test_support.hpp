#pragma once

// Test-side oracles and generators. Nothing here calls the library's
// quadrature or samplers, so tests that compare against these helpers are
// independent checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "sphdist/errors.hpp"
#include "sphdist/sphere_core.hpp"
#include "sphdist/tri_dist.hpp"

namespace testing_support {

using sphdist::CanonicalTriangle;
using sphdist::Sphere;
using sphdist::SphericalTriangle;
using sphdist::UnitVector;
using sphdist::Vec3;

inline constexpr double kPi = std::numbers::pi;

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Uniform point on the sphere from a normalized Gaussian triple.
inline UnitVector gaussian_point(Rng& rng) {
  std::normal_distribution<double> n;
  for (;;) {
    const Vec3 v{n(rng), n(rng), n(rng)};
    if (v.norm() > 1e-6) return UnitVector(v);
  }
}

struct Rotation {
  std::array<std::array<double, 3>, 3> m;

  Vec3 apply(const Vec3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }
  UnitVector operator()(const UnitVector& u) const { return UnitVector(apply(u.vec())); }
};

// Uniformly random rotation from a random unit quaternion.
inline Rotation random_rotation(Rng& rng) {
  std::normal_distribution<double> n;
  double q[4];
  double s = 0;
  for (double& x : q) {
    x = n(rng);
    s += x * x;
  }
  s = std::sqrt(s);
  const double w = q[0] / s, x = q[1] / s, y = q[2] / s, z = q[3] / s;
  Rotation r;
  r.m = {{{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
          {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
          {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}}};
  return r;
}

// Point at angular distance `dist` from p in direction `azimuth` of a tangent frame.
inline UnitVector offset(const UnitVector& p, double dist, double azimuth) {
  const Vec3 ref = std::abs(p.x()) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = UnitVector(ref - p.vec() * ref.dot(p.vec())).vec();
  const Vec3 e2 = p.vec().cross(e1);
  const Vec3 dir = e1 * std::cos(azimuth) + e2 * std::sin(azimuth);
  return UnitVector(p.vec() * std::cos(dist) + dir * std::sin(dist));
}

// Random nondegenerate triangle: sides in roughly [0.05, 1.4], excess above
// 1e-3, and a supported configuration.
inline CanonicalTriangle random_triangle(Rng& rng, Sphere sphere = Sphere{}) {
  for (;;) {
    const UnitVector p = gaussian_point(rng);
    const double az = uniform(rng, 0, 2 * kPi);
    const UnitVector b = offset(p, uniform(rng, 0.05, 1.4), az);
    const UnitVector c = offset(p, uniform(rng, 0.05, 1.4), az + uniform(rng, 0.15, kPi - 0.15));
    if (sphdist::central_angle(b, c) < 0.05) continue;
    try {
      SphericalTriangle t(p, b, c, sphere);
      if (t.excess() < 1e-3) continue;
      return CanonicalTriangle::from(t);
    } catch (const sphdist::GeometryError&) {
    }
  }
}

// Triangle whose near vertex B sits within angle d of the altitude foot, so
// that L_PB - h is tiny. `inside` puts the foot between B and C (eta = 2).
inline CanonicalTriangle near_degenerate_triangle(Rng& rng, bool inside) {
  const double h = uniform(rng, 0.2, 1.2);
  const double d = uniform(rng, 1e-3, 0.03);
  const double w = uniform(rng, 0.3, 1.2);
  const Rotation rot = random_rotation(rng);
  // BC on the equator, foot at (1, 0, 0), P above it at latitude h.
  const UnitVector p = rot(UnitVector(std::cos(h), 0, std::sin(h)));
  const UnitVector b = rot(UnitVector(std::cos(d), std::sin(d), 0));
  const double lc = inside ? -w : d + w;
  const UnitVector c = rot(UnitVector(std::cos(lc), std::sin(lc), 0));
  return CanonicalTriangle::from(SphericalTriangle(p, b, c));
}

// Membership by the three edge planes, orientation taken from the vertices.
inline bool inside_triangle(const Vec3& p, const Vec3& b, const Vec3& c, const Vec3& q) {
  const double s = sphdist::triple(p, b, c) > 0 ? 1.0 : -1.0;
  return s * sphdist::triple(p, b, q) >= 0 && s * sphdist::triple(b, c, q) >= 0 &&
         s * sphdist::triple(c, p, q) >= 0;
}

// Uniform points of the cap {q : q.center >= cos_radius}, Archimedes' z-slicing.
struct CapSampler {
  Vec3 center, e1, e2;
  double cos_radius;

  CapSampler(const UnitVector& c, double radius) : center(c.vec()), cos_radius(std::cos(radius)) {
    const Vec3 ref = std::abs(c.x()) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    e1 = UnitVector(ref - center * ref.dot(center)).vec();
    e2 = center.cross(e1);
  }
  Vec3 operator()(Rng& rng) const {
    const double z = uniform(rng, cos_radius, 1.0);
    const double phi = uniform(rng, 0, 2 * kPi);
    const double rho = std::sqrt(std::max(0.0, 1 - z * z));
    return center * z + e1 * (rho * std::cos(phi)) + e2 * (rho * std::sin(phi));
  }
};

// n uniform points of a triangle by cap rejection (test-local sampler).
inline std::vector<Vec3> sample_triangle(const CanonicalTriangle& t, Rng& rng, std::size_t n) {
  const Vec3 p = t.p().vec(), b = t.b().vec(), c = t.c().vec();
  const UnitVector center(p + b + c);
  double radius = 0;
  for (const Vec3& v : {p, b, c}) radius = std::max(radius, sphdist::central_angle(center, UnitVector(v)));
  const CapSampler cap(center, std::min(radius + 1e-9, kPi));
  std::vector<Vec3> out;
  out.reserve(n);
  while (out.size() < n) {
    const Vec3 q = cap(rng);
    if (inside_triangle(p, b, c, q)) out.push_back(q);
  }
  return out;
}

inline double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

// Adaptive 7/15 Gauss-Kronrod on [a, b] with absolute tolerance tol.
inline double gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                            double tol = 1e-13, int depth = 0) {
  static constexpr double xk[8] = {0.991455371120812639, 0.949107912342758525, 0.864864423359769073,
                                   0.741531185599394440, 0.586087235467691130, 0.405845151377397167,
                                   0.207784955007898468, 0.0};
  static constexpr double wk[8] = {0.022935322010529225, 0.063092092629978553, 0.104790010322250184,
                                   0.140653259715525919, 0.169004726639267903, 0.190350578064785410,
                                   0.204432940075298892, 0.209482141084727828};
  static constexpr double wg[4] = {0.129484966168869693, 0.279705391489276668, 0.381830050505118945,
                                   0.417959183673469388};
  const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  double k = wk[7] * f(c);
  double g = wg[3] * f(c);
  for (int i = 0; i < 7; ++i) {
    const double f1 = f(c - hw * xk[i]), f2 = f(c + hw * xk[i]);
    k += wk[i] * (f1 + f2);
    if (i % 2 == 1) g += wg[i / 2] * (f1 + f2);
  }
  k *= hw;
  g *= hw;
  if (std::abs(k - g) <= tol || depth > 40) return k;
  return gauss_kronrod(f, a, c, 0.5 * tol, depth + 1) + gauss_kronrod(f, c, b, 0.5 * tol, depth + 1);
}

// Integral over [0, top] split at the given breakpoints.
inline double integrate_split(const std::function<double(double)>& f, std::vector<double> cuts, double top,
                              double tol = 1e-13) {
  cuts.push_back(0.0);
  cuts.push_back(top);
  std::sort(cuts.begin(), cuts.end());
  double sum = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] > 0) sum += gauss_kronrod(f, cuts[i], cuts[i + 1], tol);
  }
  return sum;
}

// One-sample KS statistic against a CDF (test-local).
inline double ks_distance(std::vector<double> xs, const std::function<double(double)>& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return d;
}

// Critical value of the one-sample KS statistic at the 1% level.
inline double ks_critical_1pct(std::size_t n) { return 1.63 / std::sqrt(static_cast<double>(n)); }

// Polyhedral seed sets.
inline std::vector<UnitVector> octahedron() {
  return {UnitVector(1, 0, 0), UnitVector(-1, 0, 0), UnitVector(0, 1, 0),
          UnitVector(0, -1, 0), UnitVector(0, 0, 1), UnitVector(0, 0, -1)};
}
inline std::vector<UnitVector> tetrahedron() {
  return {UnitVector(1, 1, 1), UnitVector(1, -1, -1), UnitVector(-1, 1, -1), UnitVector(-1, -1, 1)};
}
inline std::vector<UnitVector> cube() {
  std::vector<UnitVector> v;
  for (int i = 0; i < 8; ++i) v.emplace_back(i & 1 ? 1 : -1, i & 2 ? 1 : -1, i & 4 ? 1 : -1);
  return v;
}
inline std::vector<UnitVector> random_seeds(Rng& rng, std::size_t m) {
  std::vector<UnitVector> v;
  for (std::size_t i = 0; i < m; ++i) v.push_back(gaussian_point(rng));
  return v;
}

inline UnitVector octant_p() { return UnitVector(0, 0, 1); }
inline CanonicalTriangle octant(Sphere sphere = Sphere{}) {
  return CanonicalTriangle::from(
      SphericalTriangle(UnitVector(0, 0, 1), UnitVector(1, 0, 0), UnitVector(0, 1, 0), sphere));
}

}  // namespace testing_support
