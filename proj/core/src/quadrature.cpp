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

#include "qad/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace qad {

namespace {

QuadRule computeGL(int n) {
    QuadRule r;
    r.x.resize(static_cast<size_t>(n));
    r.w.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Chebyshev initial guess, Newton on P_n
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.x[static_cast<size_t>(i)] = x;
        r.w[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

}  // namespace

const QuadRule& gaussLegendre(int n) {
    static std::map<int, QuadRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, computeGL(n)).first;
    return it->second;
}

namespace {

double simpsonStep(const std::function<double(double)>& f, double a, double m, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpsonStep(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpsonStep(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptiveSimpson(const std::function<double(double)>& f, double a, double b, double tol,
                       int maxDepth) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpsonStep(f, a, m, b, fa, fm, fb, whole, tol, maxDepth);
}

Antiderivative::Antiderivative(std::function<double(double)> f, double a, double b, int panels,
                               int nodesPerPanel)
    : f_(std::move(f)), a_(a), b_(b), nodes_(nodesPerPanel) {
    h_ = (b - a) / panels;
    prefix_.resize(static_cast<size_t>(panels) + 1, 0.0);
    for (int i = 0; i < panels; ++i)
        prefix_[static_cast<size_t>(i) + 1] =
            prefix_[static_cast<size_t>(i)] + glIntegrate(f_, a_ + i * h_, a_ + (i + 1) * h_, nodes_);
}

double Antiderivative::operator()(double x) const {
    if (x <= a_) return 0.0;
    if (x >= b_) return total();
    const int i = std::min(static_cast<int>((x - a_) / h_), static_cast<int>(prefix_.size()) - 2);
    const double xi = a_ + i * h_;
    return prefix_[static_cast<size_t>(i)] + glIntegrate(f_, xi, x, nodes_);
}

}  // namespace qad
