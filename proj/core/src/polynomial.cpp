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

#include "qad/polynomial.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

namespace qad {

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

Polynomial Polynomial::fromRoots(const std::vector<double>& roots) {
    std::vector<double> c{1.0};
    for (double r : roots) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

double Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0.0;
    return c_[static_cast<size_t>(k)];
}

bool Polynomial::isMonic(double tol) const {
    return !c_.empty() && std::abs(c_.back() - 1.0) <= tol;
}

double Polynomial::operator()(double z) const {
    double acc = 0.0;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) acc = acc * z + c_[static_cast<size_t>(i)];
    return acc;
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc{0.0};
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) acc = acc * z + c_[static_cast<size_t>(i)];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<double> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::plus(double c0) const {
    std::vector<double> c = c_;
    if (c.empty()) c.push_back(0.0);
    c[0] += c0;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(double s) const {
    std::vector<double> c = c_;
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.isZero() || b.isZero()) return {};
    std::vector<double> c(a.c_.size() + b.c_.size() - 1, 0.0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> c(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(c));
}

LaurentSeries Polynomial::toLaurent() const {
    LaurentSeries s;
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0.0) s.setCoeff(static_cast<int>(k), Complex{c_[k], 0.0});
    return s;
}

std::vector<Complex> polyRoots(const Polynomial& p) {
    const int n = p.degree();
    if (n <= 0) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeff(i) / p.leading();
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);

    const Polynomial dp = p.derivative();
    std::vector<Complex> roots;
    roots.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Complex r = es.eigenvalues()(i);
        for (int it = 0; it < 2; ++it) {
            const Complex f = p(r), df = dp(r);
            if (std::abs(df) > 1e-300) r -= f / df;
        }
        roots.push_back(r);
    }
    return roots;
}

}  // namespace qad
