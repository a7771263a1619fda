#include "sphdist/tri_dist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "sphdist/errors.hpp"
#include "sphdist/tolerances.hpp"

namespace sphdist {

namespace {

constexpr double kPi = std::numbers::pi;

// 1 - cos(theta) without cancellation.
double versine(double theta) {
  const double s = std::sin(0.5 * theta);
  return 2.0 * s * s;
}

UnitVector reflect_across_plane(const UnitVector& v, const Vec3& unit_normal) {
  return UnitVector(v.vec() - unit_normal * (2.0 * unit_normal.dot(v.vec())));
}

}  // namespace

CanonicalTriangle CanonicalTriangle::from(const SphericalTriangle& raw) {
  UnitVector b = raw.b();
  UnitVector c = raw.c();
  if (central_angle(raw.p(), b) > central_angle(raw.p(), c)) std::swap(b, c);
  const SphericalTriangle t(raw.p(), b, c, raw.sphere());
  const Altitude alt = altitude(t);
  const UnitVector& p = t.p();
  const UnitVector& m = alt.foot;

  const bool foot_inside = on_minor_arc(b, c, m, Tolerances::betweenness);
  if (!foot_inside && !on_minor_arc(m, c, b, Tolerances::betweenness)) {
    // Distance from P along BC is not monotone (the arc passes the far point -M).
    throw GeometryError(ErrorKind::UnsupportedTriangle,
                        "edge BC passes through the antipode of the altitude foot");
  }

  const Vec3 mirror = p.cross(m) / p.cross(m).norm();
  const UnitVector b2 = foot_inside ? reflect_across_plane(b, mirror) : b;

  CanonicalTriangle ct(p, b, c, m, b2, raw.sphere());
  ct.h_ = alt.length / raw.sphere().radius();
  ct.sin_h_ = std::sin(ct.h_);
  ct.cos_h_ = std::cos(ct.h_);
  ct.l_pb_ = central_angle(p, b);
  ct.l_pc_ = central_angle(p, c);
  ct.eta_ = foot_inside ? 2 : 0;

  const auto angles = t.angles();
  ct.alpha_p_ = angles[0];
  ct.alpha_b_ = angles[1];
  ct.excess_ = angles[0] + angles[1] + angles[2] - kPi;
  ct.angle_mpc_ = spherical_angle(m, p, c);
  ct.alpha_2_ = central_angle(m, b) < Tolerances::normalization ? 0.0 : spherical_angle(m, p, b);
  ct.alpha_1_ = central_angle(c, b2) < Tolerances::normalization ? 0.0 : spherical_angle(c, p, b2);
  return ct;
}

CanonicalTriangle CanonicalTriangle::with_eta(int eta) const {
  CanonicalTriangle copy = *this;
  copy.eta_ = eta;
  copy.alpha_1_ = alpha_p_ - eta * alpha_2_;
  return copy;
}

DistanceCase CanonicalTriangle::classify(double r) const {
  const double theta = angle_of(r);
  if (theta <= 0.0) return DistanceCase::Below;
  if (theta <= h_) return DistanceCase::Sector;
  if (theta <= l_pb_) return DistanceCase::TwoSectors;
  if (theta <= l_pc_) return DistanceCase::SectorAndTriangle;
  return DistanceCase::Full;
}

double CanonicalTriangle::chord_term(double theta) const {
  const double s = std::sin(theta);
  return std::sqrt(std::max(0.0, (s - sin_h_) * (s + sin_h_)));
}

// cos(alpha) = tan h / tan theta, written with atan2 so that it stays
// accurate near theta = h and valid past pi/2.
double CanonicalTriangle::alpha_at(double theta) const {
  return std::atan2(chord_term(theta), sin_h_ * std::cos(theta));
}

// sin(beta) = sin h / sin theta.
double CanonicalTriangle::beta_at(double theta) const {
  return std::atan2(sin_h_, chord_term(theta));
}

double CanonicalTriangle::alpha_r(double r) const {
  const double theta = angle_of(r);
  if (theta < h_ - Tolerances::case_boundary || theta > kPi - h_ + Tolerances::case_boundary) {
    throw GeometryError(ErrorKind::OutOfCase, "alpha_r requires h <= r <= pi R - h");
  }
  return alpha_at(theta);
}

double CanonicalTriangle::beta_r(double r) const {
  const double theta = angle_of(r);
  if (theta < h_ - Tolerances::case_boundary || theta > kPi - h_ + Tolerances::case_boundary) {
    throw GeometryError(ErrorKind::OutOfCase, "beta_r requires h <= r <= pi R - h");
  }
  return beta_at(theta);
}

double CanonicalTriangle::omega_r(double r) const {
  const double theta = angle_of(r);
  if (theta < l_pb_ - Tolerances::case_boundary || theta > l_pc_ + Tolerances::case_boundary) {
    throw GeometryError(ErrorKind::OutOfCase, "omega_r requires L_PB <= r <= L_PC");
  }
  return angle_mpc_ - alpha_at(theta);
}

double CanonicalTriangle::alpha_r_prime(double r) const {
  const double theta = angle_of(r);
  if (theta < h_ - Tolerances::case_boundary) {
    throw GeometryError(ErrorKind::OutOfCase, "alpha_r' requires r >= h");
  }
  return sin_h_ / (std::sin(theta) * chord_term(theta)) / r_;
}

double CanonicalTriangle::beta_r_prime(double r) const {
  const double theta = angle_of(r);
  if (theta < h_ - Tolerances::case_boundary) {
    throw GeometryError(ErrorKind::OutOfCase, "beta_r' requires r >= h");
  }
  return -sin_h_ * std::cos(theta) / (std::sin(theta) * chord_term(theta)) / r_;
}

double CanonicalTriangle::region_area_unit(double theta) const {
  if (theta <= 0.0) return 0.0;
  const double g = versine(theta);
  if (theta <= h_) return alpha_p_ * g;
  if (theta <= l_pb_) {
    const double a = alpha_at(theta);
    const double b = beta_at(theta);
    return alpha_1_ * g + eta_ * ((a + b - 0.5 * kPi) + (alpha_2_ - a) * g);
  }
  if (theta <= l_pc_) {
    const double a = alpha_at(theta);
    const double b = beta_at(theta);
    return (alpha_p_ + alpha_b_ + b - kPi) - (angle_mpc_ - a) * std::cos(theta);
  }
  return excess_;
}

double CanonicalTriangle::region_area(double r) const {
  return r_ * r_ * region_area_unit(angle_of(r));
}

double CanonicalTriangle::cdf(double r) const {
  return std::clamp(region_area_unit(angle_of(r)) / excess_, 0.0, 1.0);
}

// The derivative terms of the two-sector and sector-and-triangle pieces
// cancel (beta'_r = -cos r * alpha'_r), leaving the angular width of the arc
// of radius r inside the triangle times sin r.
double CanonicalTriangle::pdf(double r) const {
  const double theta = angle_of(r);
  if (theta < 0.0 || theta >= l_pc_) return 0.0;
  double width;
  if (theta < h_) {
    width = alpha_p_;
  } else if (theta < l_pb_) {
    width = alpha_1_ + eta_ * (alpha_2_ - alpha_at(theta));
  } else {
    width = angle_mpc_ - alpha_at(theta);
  }
  return std::max(0.0, width) * std::sin(theta) / (excess_ * r_);
}

double CanonicalTriangle::pdf_from_derivatives(double r) const {
  const double theta = angle_of(r);
  if (theta < 0.0 || theta >= l_pc_) return 0.0;
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  if (theta < h_) return alpha_p_ * s / (excess_ * r_);
  const double a = alpha_at(theta);
  const double da = sin_h_ / (s * chord_term(theta));
  const double db = -sin_h_ * c / (s * chord_term(theta));
  double value;
  if (theta < l_pb_) {
    value = alpha_1_ * s + eta_ * (da * c + db + (alpha_2_ - a) * s);
  } else {
    const double omega = angle_mpc_ - a;
    const double domega = -da;
    value = db - domega * c + omega * s;
  }
  return value / (excess_ * r_);
}

}  // namespace sphdist
