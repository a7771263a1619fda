#pragma once

#include <array>
#include <cmath>

namespace sphdist {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr bool operator==(const Vec3&) const = default;

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return a.dot(b.cross(c)); }

// A direction on the unit sphere. Always normalized on construction.
class UnitVector {
 public:
  // Throws GeometryError(InvalidArgument) for a (near) zero vector.
  explicit UnitVector(const Vec3& v);
  UnitVector(double x, double y, double z) : UnitVector(Vec3{x, y, z}) {}

  static UnitVector from_lat_lon_degrees(double lat, double lon);

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

  double dot(const UnitVector& o) const { return v_.dot(o.v_); }
  Vec3 cross(const UnitVector& o) const { return v_.cross(o.v_); }
  UnitVector operator-() const { return UnitVector(-v_, Trusted{}); }
  bool operator==(const UnitVector&) const = default;

 private:
  struct Trusted {};
  UnitVector(const Vec3& v, Trusted) : v_(v) {}
  Vec3 v_;
};

class Sphere {
 public:
  explicit Sphere(double radius = 1.0);
  double radius() const { return radius_; }
  bool operator==(const Sphere&) const = default;

 private:
  double radius_;
};

// Raw spherical triangle with vertices P, B, C. Construction rejects
// coincident/antipodal vertex pairs and collinear (zero-excess) triangles.
class SphericalTriangle {
 public:
  SphericalTriangle(const UnitVector& p, const UnitVector& b, const UnitVector& c,
                    Sphere sphere = Sphere{});

  const UnitVector& p() const { return p_; }
  const UnitVector& b() const { return b_; }
  const UnitVector& c() const { return c_; }
  const Sphere& sphere() const { return sphere_; }

  // Interior angles at P, B, C.
  std::array<double, 3> angles() const;
  // Sum of interior angles minus pi.
  double excess() const;

 private:
  UnitVector p_, b_, c_;
  Sphere sphere_;
};

// Central angle in [0, pi], via atan2(|a x b|, a.b).
double central_angle(const UnitVector& a, const UnitVector& b);

// Great-circle arc length R * central_angle.
double arc_distance(const UnitVector& a, const UnitVector& b, const Sphere& sphere = Sphere{});

// Spherical angle APB at P between arcs PA and PB, in [0, pi].
double spherical_angle(const UnitVector& a, const UnitVector& p, const UnitVector& b);

double triangle_area(const SphericalTriangle& t);

struct Altitude {
  double length;      // R * central angle from P to the BC great circle
  UnitVector foot;    // M, closest point of the BC great circle to P
};

// Altitude from P onto the great circle through B and C.
// When P is a pole of that circle the foot is taken as the midpoint of BC.
Altitude altitude(const SphericalTriangle& t);

double cap_area(double theta, const Sphere& sphere = Sphere{});
double fan_area(double alpha, double theta, const Sphere& sphere = Sphere{});

// Midpoint of the minor arc AB (A != -B).
UnitVector arc_midpoint(const UnitVector& a, const UnitVector& b);

// True if X lies on the minor arc AB within the given arc-sum tolerance.
bool on_minor_arc(const UnitVector& a, const UnitVector& b, const UnitVector& x, double tol);

}  // namespace sphdist
