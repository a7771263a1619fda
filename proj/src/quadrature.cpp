#include "sphdist/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "sphdist/errors.hpp"

namespace sphdist {

namespace {

GaussLegendreRule compute_rule(std::size_t n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
      p0 = p1;
      p1 = pk;
    }
    dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(std::size_t n) {
  if (n == 0) throw GeometryError(ErrorKind::InvalidArgument, "quadrature needs at least one node");
  static std::mutex mutex;
  static std::map<std::size_t, GaussLegendreRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

double integrate(const std::function<double(double)>& f, const Panel& panel, std::size_t nodes) {
  if (!(panel.b > panel.a)) return 0.0;
  const GaussLegendreRule& rule = gauss_legendre(nodes);
  double sum = 0.0;
  if (panel.sqrt_origin) {
    const double c = *panel.sqrt_origin;
    const double u0 = std::sqrt(std::max(0.0, panel.a - c));
    const double u1 = std::sqrt(std::max(0.0, panel.b - c));
    const double half = 0.5 * (u1 - u0);
    const double mid = 0.5 * (u1 + u0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double u = mid + half * rule.nodes[i];
      sum += rule.weights[i] * 2.0 * u * f(c + u * u);
    }
    return sum * half;
  }
  const double half = 0.5 * (panel.b - panel.a);
  const double mid = 0.5 * (panel.b + panel.a);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

double integrate(const std::function<double(double)>& f, std::span<const Panel> panels,
                 std::size_t nodes) {
  double sum = 0.0;
  for (const Panel& p : panels) sum += integrate(f, p, nodes);
  return sum;
}

}  // namespace sphdist
