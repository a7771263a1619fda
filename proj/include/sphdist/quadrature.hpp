#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace sphdist {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Rule with n nodes, computed once per n and cached.
const GaussLegendreRule& gauss_legendre(std::size_t n);

// One integration panel [a, b]. With a sqrt origin c <= a the substitution
// x = c + u^2 is used, which removes (x - c)^(-1/2) singularities and
// sqrt(x - c) kinks at or just left of the panel.
struct Panel {
  double a;
  double b;
  std::optional<double> sqrt_origin = std::nullopt;
};

double integrate(const std::function<double(double)>& f, const Panel& panel, std::size_t nodes);
double integrate(const std::function<double(double)>& f, std::span<const Panel> panels,
                 std::size_t nodes);

}  // namespace sphdist
