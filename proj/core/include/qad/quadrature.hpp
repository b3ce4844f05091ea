/*
   Copyright 2026 the qad authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QAD_QUADRATURE_HPP
#define QAD_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "qad/params.hpp"

namespace qad {

struct QuadRule {
    std::vector<double> x;  // nodes on [-1, 1]
    std::vector<double> w;
};

/// Gauss–Legendre rule on [-1,1]; cached per n (Newton on Legendre P_n).
const QuadRule& gaussLegendre(int n);

/// Integrate f over [a,b] with a fixed n-point Gauss–Legendre rule.
template <typename F>
auto glIntegrate(F&& f, double a, double b, int n) {
    const QuadRule& r = gaussLegendre(n);
    using R = decltype(f(a));
    R acc{};
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (size_t i = 0; i < r.x.size(); ++i) acc += R(r.w[i]) * f(mid + half * r.x[i]);
    return acc * R(half);
}

/// Integrate f over [a,b] via the substitution x = mid - half*cos(phi),
/// which absorbs inverse-square-root endpoint behavior; n GL nodes in phi.
template <typename F>
auto cosSubIntegrate(F&& f, double a, double b, int n) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    return glIntegrate(
        [&](double phi) {
            const double s = std::sin(phi);
            return f(mid - half * std::cos(phi)) * s;
        },
        0.0, std::numbers::pi, n) * half;
}

/// Node-doubling driver: evaluates `compute(n)` with n doubling until the
/// relative change drops below tol (or throws QuadratureNotConverged).
template <typename F>
auto nodeDoubling(F&& compute, int n0, double tol, int maxDoublings = 6) {
    auto prev = compute(n0);
    for (int k = 1; k <= maxDoublings; ++k) {
        const int n = n0 << k;
        auto cur = compute(n);
        const double scale = std::max(1e-300, std::abs(cur));
        if (std::abs(cur - prev) <= tol * scale) return cur;
        prev = cur;
    }
    throw QuadratureNotConverged("nodeDoubling: no convergence");
}

/// Adaptive Simpson; independent oracle-grade integrator for cross-checks.
double adaptiveSimpson(const std::function<double(double)>& f, double a, double b, double tol,
                       int maxDepth = 48);

/// Cached antiderivative F(x) = int_{a}^{x} f over [a, b]: panelwise
/// Gauss–Legendre prefix sums plus an in-panel rule for the fractional part.
class Antiderivative {
  public:
    Antiderivative() = default;
    Antiderivative(std::function<double(double)> f, double a, double b, int panels = 256,
                   int nodesPerPanel = 12);
    double operator()(double x) const;
    double total() const { return prefix_.empty() ? 0.0 : prefix_.back(); }
    double a() const { return a_; }
    double b() const { return b_; }

  private:
    std::function<double(double)> f_;
    double a_ = 0.0, b_ = 1.0, h_ = 1.0;
    int nodes_ = 12;
    std::vector<double> prefix_;  // prefix_[i] = int_a^{a + i h}
};

}  // namespace qad

#endif
