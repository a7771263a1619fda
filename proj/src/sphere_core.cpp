#include "sphdist/sphere_core.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "sphdist/errors.hpp"
#include "sphdist/tolerances.hpp"

namespace sphdist {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegenerateAngle: return "DegenerateAngle";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::UnsupportedTriangle: return "UnsupportedTriangle";
    case ErrorKind::OutOfCase: return "OutOfCase";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::SeedNotInterior: return "SeedNotInterior";
    case ErrorKind::DegenerateSeeds: return "DegenerateSeeds";
  }
  return "Unknown";
}

UnitVector::UnitVector(const Vec3& v) {
  const double n = v.norm();
  if (!(n > Tolerances::normalization) || !std::isfinite(n)) {
    throw GeometryError(ErrorKind::InvalidArgument, "cannot normalize a zero or non-finite vector");
  }
  v_ = v / n;
}

UnitVector UnitVector::from_lat_lon_degrees(double lat, double lon) {
  constexpr double deg = std::numbers::pi / 180.0;
  const double phi = lat * deg;
  const double lambda = lon * deg;
  return UnitVector(std::cos(phi) * std::cos(lambda), std::cos(phi) * std::sin(lambda),
                    std::sin(phi));
}

Sphere::Sphere(double radius) : radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw GeometryError(ErrorKind::InvalidArgument, "sphere radius must be positive and finite");
  }
}

double central_angle(const UnitVector& a, const UnitVector& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

double arc_distance(const UnitVector& a, const UnitVector& b, const Sphere& sphere) {
  return sphere.radius() * central_angle(a, b);
}

double spherical_angle(const UnitVector& a, const UnitVector& p, const UnitVector& b) {
  const Vec3 n1 = a.cross(p);
  const Vec3 n2 = b.cross(p);
  const double l1 = n1.norm();
  const double l2 = n2.norm();
  if (l1 < Tolerances::normalization || l2 < Tolerances::normalization) {
    throw GeometryError(ErrorKind::DegenerateAngle,
                        "spherical angle undefined: an arm coincides with or opposes the apex");
  }
  const Vec3 u1 = n1 / l1;
  const Vec3 u2 = n2 / l2;
  return std::atan2(u1.cross(u2).norm(), u1.dot(u2));
}

SphericalTriangle::SphericalTriangle(const UnitVector& p, const UnitVector& b,
                                     const UnitVector& c, Sphere sphere)
    : p_(p), b_(b), c_(c), sphere_(sphere) {
  auto check_pair = [](const UnitVector& u, const UnitVector& v) {
    if (u.cross(v).norm() < Tolerances::normalization) {
      throw GeometryError(ErrorKind::DegenerateTriangle,
                          "triangle vertices must be pairwise distinct and non-antipodal");
    }
  };
  check_pair(p_, b_);
  check_pair(b_, c_);
  check_pair(c_, p_);
  if (!(excess() > Tolerances::degeneracy)) {
    throw GeometryError(ErrorKind::DegenerateTriangle,
                        "triangle vertices lie on one great circle");
  }
}

std::array<double, 3> SphericalTriangle::angles() const {
  return {spherical_angle(b_, p_, c_), spherical_angle(p_, b_, c_), spherical_angle(p_, c_, b_)};
}

double SphericalTriangle::excess() const {
  const auto a = angles();
  return a[0] + a[1] + a[2] - std::numbers::pi;
}

double triangle_area(const SphericalTriangle& t) {
  const double r = t.sphere().radius();
  return r * r * t.excess();
}

UnitVector arc_midpoint(const UnitVector& a, const UnitVector& b) {
  return UnitVector(a.vec() + b.vec());
}

bool on_minor_arc(const UnitVector& a, const UnitVector& b, const UnitVector& x, double tol) {
  return central_angle(a, x) + central_angle(x, b) - central_angle(a, b) < tol;
}

Altitude altitude(const SphericalTriangle& t) {
  const Vec3 n = t.b().cross(t.c()) / t.b().cross(t.c()).norm();
  const Vec3 p = t.p().vec();
  const double s = n.dot(p);
  // Projection of P onto the BC plane; vanishes when P is a pole of the circle.
  const Vec3 proj = p - n * s;
  const double proj_norm = proj.norm();
  const double h = std::atan2(std::abs(s), proj_norm);
  if (h < Tolerances::degeneracy) {
    throw GeometryError(ErrorKind::DegenerateTriangle, "apex lies on the base great circle");
  }
  const double radius = t.sphere().radius();
  if (proj_norm < Tolerances::normalization) {
    return {radius * h, arc_midpoint(t.b(), t.c())};
  }
  return {radius * h, UnitVector(proj / proj_norm)};
}

double cap_area(double theta, const Sphere& sphere) {
  if (theta < 0.0 || theta > std::numbers::pi) {
    throw GeometryError(ErrorKind::InvalidArgument, "cap angle must lie in [0, pi]");
  }
  const double r = sphere.radius();
  const double s = std::sin(0.5 * theta);
  return 4.0 * std::numbers::pi * r * r * s * s;
}

double fan_area(double alpha, double theta, const Sphere& sphere) {
  if (alpha < 0.0 || alpha > 2.0 * std::numbers::pi) {
    throw GeometryError(ErrorKind::InvalidArgument, "fan angle must lie in [0, 2 pi]");
  }
  if (theta < 0.0 || theta > std::numbers::pi) {
    throw GeometryError(ErrorKind::InvalidArgument, "fan radius angle must lie in [0, pi]");
  }
  const double r = sphere.radius();
  const double s = std::sin(0.5 * theta);
  return 2.0 * alpha * r * r * s * s;
}

}  // namespace sphdist
