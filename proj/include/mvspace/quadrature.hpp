#pragma once

#include <vector>

namespace mvspace::quadrature {

// Nodes and weights for int f(u) exp(-u^2) du over the real line.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point physicists' Gauss-Hermite rule (Newton iteration on the
// orthonormal Hermite recurrence). Throws ArgumentError for n < 1 and
// ConvergenceError if a root fails to converge.
GaussHermiteRule gauss_hermite(int n);

// Composite Simpson over [a, b] with an even number of panels.
template <class F>
auto simpson(F&& f, double a, double b, int panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  auto sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum = sum + f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return sum * (h / 3.0);
}

}  // namespace mvspace::quadrature
