#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sphdist/distribution.hpp"
#include "sphdist/polygon_dist.hpp"
#include "sphdist/quadrature.hpp"
#include "sphdist/tri_dist.hpp"
#include "sphdist/voronoi.hpp"

namespace sphdist {

struct QuadratureSpec {
  std::size_t nodes_per_panel = 64;
  // Target used to flag node-doubling instability in reports.
  double tolerance = 1e-10;
  unsigned threads = 1;
};

// Panels [0, h], [h, L_PB], [L_PB, L_PC]; the last two are integrated in
// u = sqrt(r - h) because alpha_r grows like sqrt(r - h).
std::vector<Panel> distance_panels(const CanonicalTriangle& t);

// E[g(L)] for the vertex-to-uniform-point distance L of one triangle.
double expectation(const CanonicalTriangle& t, const std::function<double(double)>& g,
                   const QuadratureSpec& spec = {});
// Area-weighted over the mixture components, reduced in component order.
double expectation(const DistanceDistribution& d, const std::function<double(double)>& g,
                   const QuadratureSpec& spec = {});

// E[L^k], in sphere units to the k-th power.
double distance_moment(const CanonicalTriangle& t, int k, const QuadratureSpec& spec = {});
double distance_moment(const DistanceDistribution& d, int k, const QuadratureSpec& spec = {});
double distance_moment(const FanDecomposition& fan, int k, const QuadratureSpec& spec = {});
double distance_moment(const SphericalVoronoiDiagram& d, int k, const QuadratureSpec& spec = {});

// E[cos^k(L / R)] by quadrature of the density; any k >= 1.
double cos_moment_quadrature(const DistanceDistribution& d, int k, const QuadratureSpec& spec = {});

// Closed forms of E[cos^k(L / R)] on one triangle for k in {2, 4, 6}.
double cos_moment_closed_form(const CanonicalTriangle& t, int k);
inline double cos2_closed_form(const CanonicalTriangle& t) { return cos_moment_closed_form(t, 2); }
inline double cos4_closed_form(const CanonicalTriangle& t) { return cos_moment_closed_form(t, 4); }
inline double cos6_closed_form(const CanonicalTriangle& t) { return cos_moment_closed_form(t, 6); }
double cos_moment_closed_form(const DistanceDistribution& d, int k, unsigned threads = 1);

enum class MomentMethod { ClosedForm, Quadrature };
const char* to_string(MomentMethod m);

double cos_moment(const DistanceDistribution& d, int k, MomentMethod method,
                  const QuadratureSpec& spec = {});
double cos_moment(const SphericalVoronoiDiagram& d, int k, MomentMethod method,
                  const QuadratureSpec& spec = {});

struct DistanceMomentEntry {
  int k;
  double value;
  MomentMethod method;
  // |value(2 * nodes) - value(nodes)| / |value|.
  double doubling_change;
};

struct CosineMomentEntry {
  int k;
  double quadrature;
  std::optional<double> closed_form;  // present for k in {2, 4, 6}
  double doubling_change;
  // |closed_form - quadrature|, 0 when no closed form exists.
  double discrepancy;
};

struct MomentReport {
  std::vector<DistanceMomentEntry> distance;
  std::vector<CosineMomentEntry> cosine;
  // Human-readable warnings (node-doubling instability, method disagreement).
  std::vector<std::string> diagnostics;
};

// Disagreement between closed form and quadrature that triggers a diagnostic.
inline constexpr double kMethodDisagreement = 1e-5;

MomentReport moment_report(const DistanceDistribution& d, std::span<const int> ks,
                           std::span<const int> cos_ks, const QuadratureSpec& spec = {});

}  // namespace sphdist
