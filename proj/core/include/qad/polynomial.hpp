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

#ifndef QAD_POLYNOMIAL_HPP
#define QAD_POLYNOMIAL_HPP

#include <vector>

#include "qad/laurent.hpp"

namespace qad {

/// Dense real-coefficient polynomial; c[k] multiplies z^k.
/// Leading coefficient is nonzero unless the polynomial is zero.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial fromRoots(const std::vector<double>& roots);
    static Polynomial zero() { return {}; }
    static Polynomial one() { return Polynomial({1.0}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    double coeff(int k) const;
    const std::vector<double>& coeffs() const { return c_; }
    double leading() const { return c_.empty() ? 0.0 : c_.back(); }
    bool isMonic(double tol = 1e-12) const;

    double operator()(double z) const;
    Complex operator()(Complex z) const;

    Polynomial derivative() const;
    Polynomial plus(double c0) const;  // shift the constant term
    Polynomial scaled(double s) const;
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);

    LaurentSeries toLaurent() const;

  private:
    std::vector<double> c_;
    void trim();
};

/// All complex roots via the companion-matrix eigenvalues, with one round of
/// Newton polishing on each.
std::vector<Complex> polyRoots(const Polynomial& p);

}  // namespace qad

#endif
