#pragma once

#include <array>

#include "sphdist/sphere_core.hpp"

namespace sphdist {

// Which piece of the distance law applies at a radius.
enum class DistanceCase {
  Below,              // r <= 0
  Sector,             // 0 < r <= h: one fan of angle alpha_P
  TwoSectors,         // h < r <= L_PB: fans plus the triangle P D1 D2
  SectorAndTriangle,  // L_PB < r <= L_PC: triangle P B D2 plus one fan
  Full,               // r > L_PC
};

// A spherical triangle PBC preprocessed for the law of the arc distance from
// vertex P to a uniform point of the triangle. B and C are ordered so that
// L_PB <= L_PC. Lengths are returned in sphere units (R times central angle);
// angles in radians.
//
// The inside-altitude and outside-altitude configurations are unified by
// reflecting B across the altitude PM: eta = 2 when the foot M lies on arc BC
// (B2 is the mirror image of B), eta = 0 otherwise (B2 = B).
class CanonicalTriangle {
 public:
  static CanonicalTriangle from(const SphericalTriangle& t);

  const UnitVector& p() const { return p_; }
  const UnitVector& b() const { return b_; }
  const UnitVector& c() const { return c_; }
  const UnitVector& foot() const { return m_; }
  const UnitVector& reflected_b() const { return b2_; }
  const Sphere& sphere() const { return sphere_; }

  double h() const { return r_ * h_; }
  double l_pb() const { return r_ * l_pb_; }
  double l_pc() const { return r_ * l_pc_; }
  double alpha_p() const { return alpha_p_; }
  double alpha_b() const { return alpha_b_; }
  double alpha_1() const { return alpha_1_; }
  double alpha_2() const { return alpha_2_; }
  double angle_mpc() const { return angle_mpc_; }
  int eta() const { return eta_; }
  double area() const { return r_ * r_ * excess_; }
  // Spherical excess (area on the unit sphere).
  double excess() const { return excess_; }

  // Central-angle views used by closed forms.
  double h_angle() const { return h_; }
  double l_pb_angle() const { return l_pb_; }
  double l_pc_angle() const { return l_pc_; }

  // {0, h, L_PB, L_PC} in sphere units.
  std::array<double, 4> breakpoints() const { return {0.0, h(), l_pb(), l_pc()}; }

  DistanceCase classify(double r) const;

  // Angle MPD2 at P between the altitude and the point D2 of the BC circle at
  // distance r. Defined for h <= r <= pi R - h.
  double alpha_r(double r) const;
  // Angle PD2M at D2.
  double beta_r(double r) const;
  // Angle D2PC, for L_PB <= r <= L_PC.
  double omega_r(double r) const;
  // d/dr of alpha_r and beta_r (per unit length). Infinite at r = h.
  double alpha_r_prime(double r) const;
  double beta_r_prime(double r) const;

  // |B_r(P) intersect triangle|, an area in sphere units.
  double region_area(double r) const;
  double cdf(double r) const;
  // Density per unit length. At breakpoints the right limit is returned.
  double pdf(double r) const;
  // Same density assembled from the derivative terms alpha'_r, beta'_r,
  // omega'_r = -alpha'_r. Undefined (non-finite) exactly at r = h.
  double pdf_from_derivatives(double r) const;

  // Copy with the reflection multiplier forced (alpha_1 = alpha_P - eta *
  // alpha_2). Only meaningful as a diagnostic; the result is generally wrong.
  CanonicalTriangle with_eta(int eta) const;

 private:
  CanonicalTriangle(const UnitVector& p, const UnitVector& b, const UnitVector& c,
                    const UnitVector& m, const UnitVector& b2, const Sphere& sphere)
      : p_(p), b_(b), c_(c), m_(m), b2_(b2), sphere_(sphere), r_(sphere.radius()) {}

  double angle_of(double r) const { return r / r_; }
  // sqrt(sin^2 theta - sin^2 h), clamped at zero.
  double chord_term(double theta) const;
  double alpha_at(double theta) const;
  double beta_at(double theta) const;
  double region_area_unit(double theta) const;

  UnitVector p_, b_, c_, m_, b2_;
  Sphere sphere_;
  double r_;
  double h_ = 0, l_pb_ = 0, l_pc_ = 0;
  double sin_h_ = 0, cos_h_ = 0;
  double alpha_p_ = 0, alpha_b_ = 0, alpha_1_ = 0, alpha_2_ = 0, angle_mpc_ = 0;
  int eta_ = 0;
  double excess_ = 0;
};

}  // namespace sphdist
