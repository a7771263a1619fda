#include "sphdist/moments.hpp"

#include <cmath>
#include <numbers>

#include "sphdist/errors.hpp"
#include "sphdist/parallel.hpp"

namespace sphdist {

std::vector<Panel> distance_panels(const CanonicalTriangle& t) {
  return {Panel{0.0, t.h()}, Panel{t.h(), t.l_pb(), t.h()}, Panel{t.l_pb(), t.l_pc(), t.h()}};
}

double expectation(const CanonicalTriangle& t, const std::function<double(double)>& g,
                   const QuadratureSpec& spec) {
  const auto panels = distance_panels(t);
  return integrate([&](double r) { return g(r) * t.pdf(r); }, panels, spec.nodes_per_panel);
}

double expectation(const DistanceDistribution& d, const std::function<double(double)>& g,
                   const QuadratureSpec& spec) {
  const auto& parts = d.components();
  std::vector<double> values(parts.size());
  parallel_for(parts.size(), spec.threads, [&](std::size_t i) {
    values[i] = parts[i].weight * expectation(parts[i].triangle, g, spec);
  });
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum;
}

double distance_moment(const CanonicalTriangle& t, int k, const QuadratureSpec& spec) {
  if (k < 1) throw GeometryError(ErrorKind::InvalidArgument, "moment order must be positive");
  return expectation(t, [k](double r) { return std::pow(r, k); }, spec);
}

double distance_moment(const DistanceDistribution& d, int k, const QuadratureSpec& spec) {
  if (k < 1) throw GeometryError(ErrorKind::InvalidArgument, "moment order must be positive");
  return expectation(d, [k](double r) { return std::pow(r, k); }, spec);
}

double distance_moment(const FanDecomposition& fan, int k, const QuadratureSpec& spec) {
  return distance_moment(fan.distribution(), k, spec);
}

double distance_moment(const SphericalVoronoiDiagram& d, int k, const QuadratureSpec& spec) {
  return distance_moment(d.distribution(), k, spec);
}

double cos_moment_quadrature(const DistanceDistribution& d, int k, const QuadratureSpec& spec) {
  if (k < 1) throw GeometryError(ErrorKind::InvalidArgument, "moment order must be positive");
  const double radius = d.sphere().radius();
  return expectation(d, [k, radius](double r) { return std::pow(std::cos(r / radius), k); }, spec);
}

// Integration by parts turns the alpha_r terms into
//   int alpha_r cos^k r sin r dr = [-alpha_r cos^n r / n] + (1/n) int cos^n r alpha'_r dr,
// n = k + 1, and with w = sqrt(sin^2 r - sin^2 h) = sqrt(cos^2 h - cos^2 r)
//   int cos^n r alpha'_r dr = atan(w / sin h) - sin h * sum_{j < k/2} int_0^w (cos^2 h - x^2)^j dx.
double cos_moment_closed_form(const CanonicalTriangle& t, int k) {
  if (k != 2 && k != 4 && k != 6) {
    throw GeometryError(ErrorKind::InvalidArgument, "closed forms exist for k = 2, 4, 6 only");
  }
  const int n = k + 1;
  const double h = t.h_angle();
  const double lpb = t.l_pb_angle();
  const double lpc = t.l_pc_angle();
  const double sh = std::sin(h);
  const double ch2 = std::cos(h) * std::cos(h);
  const double radius = t.sphere().radius();

  auto antiderivative = [&](double theta) {
    const double s = std::sin(theta);
    const double w = std::sqrt(std::max(0.0, (s - sh) * (s + sh)));
    const double w2 = w * w;
    double poly = w;
    if (k >= 4) poly += ch2 * w - w2 * w / 3.0;
    if (k >= 6) poly += ch2 * ch2 * w - 2.0 * ch2 * w2 * w / 3.0 + w2 * w2 * w / 5.0;
    return std::atan2(w, sh) - sh * poly;
  };
  auto cos_pow = [n](double theta) { return std::pow(std::cos(theta), n); };
  // int_a^b alpha_r cos^k r sin r dr, with alpha_h = 0.
  auto alpha_integral = [&](double a, double b) {
    const double alpha_a = a <= h ? 0.0 : t.alpha_r(a * radius);
    const double alpha_b = b <= h ? 0.0 : t.alpha_r(b * radius);
    return (alpha_a * cos_pow(a) - alpha_b * cos_pow(b) + antiderivative(b) - antiderivative(a)) / n;
  };

  const double sector = t.alpha_p() * (1.0 - cos_pow(h)) / n;
  const double two_sectors =
      t.alpha_1() * (cos_pow(h) - cos_pow(lpb)) / n +
      t.eta() * (t.alpha_2() * (cos_pow(h) - cos_pow(lpb)) / n - alpha_integral(h, lpb));
  const double sector_and_triangle =
      t.angle_mpc() * (cos_pow(lpb) - cos_pow(lpc)) / n - alpha_integral(lpb, lpc);
  return (sector + two_sectors + sector_and_triangle) / t.excess();
}

double cos_moment_closed_form(const DistanceDistribution& d, int k, unsigned threads) {
  const auto& parts = d.components();
  std::vector<double> values(parts.size());
  parallel_for(parts.size(), threads, [&](std::size_t i) {
    values[i] = parts[i].weight * cos_moment_closed_form(parts[i].triangle, k);
  });
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum;
}

const char* to_string(MomentMethod m) {
  return m == MomentMethod::ClosedForm ? "closed-form" : "quadrature";
}

double cos_moment(const DistanceDistribution& d, int k, MomentMethod method,
                  const QuadratureSpec& spec) {
  return method == MomentMethod::ClosedForm ? cos_moment_closed_form(d, k, spec.threads)
                                            : cos_moment_quadrature(d, k, spec);
}

double cos_moment(const SphericalVoronoiDiagram& d, int k, MomentMethod method,
                  const QuadratureSpec& spec) {
  return cos_moment(d.distribution(), k, method, spec);
}

MomentReport moment_report(const DistanceDistribution& d, std::span<const int> ks,
                           std::span<const int> cos_ks, const QuadratureSpec& spec) {
  MomentReport report;
  QuadratureSpec doubled = spec;
  doubled.nodes_per_panel *= 2;
  auto relative_change = [](double a, double b) {
    return a == 0.0 ? std::abs(b - a) : std::abs(b - a) / std::abs(a);
  };
  for (int k : ks) {
    const double v = distance_moment(d, k, spec);
    const double change = relative_change(v, distance_moment(d, k, doubled));
    report.distance.push_back({k, v, MomentMethod::Quadrature, change});
    if (change > spec.tolerance) {
      report.diagnostics.push_back("E[L^" + std::to_string(k) + "] changed by " +
                                   std::to_string(change) + " under node doubling");
    }
  }
  for (int k : cos_ks) {
    CosineMomentEntry e{k, cos_moment_quadrature(d, k, spec), std::nullopt, 0.0, 0.0};
    e.doubling_change = relative_change(e.quadrature, cos_moment_quadrature(d, k, doubled));
    if (k == 2 || k == 4 || k == 6) {
      e.closed_form = cos_moment_closed_form(d, k, spec.threads);
      e.discrepancy = std::abs(*e.closed_form - e.quadrature);
      if (e.discrepancy > kMethodDisagreement) {
        report.diagnostics.push_back("E[cos^" + std::to_string(k) +
                                     "] closed form and quadrature differ by " +
                                     std::to_string(e.discrepancy));
      }
    }
    if (e.doubling_change > spec.tolerance) {
      report.diagnostics.push_back("E[cos^" + std::to_string(k) + "] changed by " +
                                   std::to_string(e.doubling_change) + " under node doubling");
    }
    report.cosine.push_back(e);
  }
  return report;
}

}  // namespace sphdist
