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

#ifndef QAD_PARAMS_HPP
#define QAD_PARAMS_HPP

#include <cmath>
#include <complex>
#include <numbers>

#include "qad/errors.hpp"

namespace qad {

using Complex = std::complex<double>;

/// Deformation data shared by the whole formal layer.
///
/// gamma is the coupling (radians), g the genus, q = exp(i*gamma) the
/// deformation unit and qDual = exp(i*pi^2/gamma) its dual under the
/// gamma <-> pi symmetry of the two shift periods.
struct DeformParams {
    double gamma = 0.0;
    int g = 0;
    Complex q{1.0, 0.0};
    Complex qDual{1.0, 0.0};
    int truncationFloor = -48;
    double resonanceTol = 1e-8;
    double zeroTol = 1e-9;

    DeformParams() = default;

    DeformParams(double gamma_, int genus, int floor = -48)
        : gamma(gamma_), g(genus), truncationFloor(floor) {
        if (!(gamma > 0.0)) throw Error("DeformParams: gamma must be positive");
        if (g < 0) throw Error("DeformParams: genus must be >= 0");
        if (truncationFloor >= 0) throw Error("DeformParams: truncationFloor must be negative");
        q = std::polar(1.0, gamma);
        qDual = std::polar(1.0, std::numbers::pi * std::numbers::pi / gamma);
    }

    Complex qPow(long k) const { return std::polar(1.0, gamma * static_cast<double>(k)); }
    Complex qDualPow(long k) const {
        return std::polar(1.0, std::numbers::pi * std::numbers::pi / gamma * static_cast<double>(k));
    }

    /// Resonance guard for operations dividing by q^{2m}-1: every m with
    /// 1 <= m <= depth must stay clear of q^{2m} = 1.
    void requireResonanceFree(int depth) const {
        for (int m = 1; m <= depth; ++m) {
            if (std::abs(qPow(2 * m) - 1.0) <= resonanceTol)
                throw Resonance("Resonance: |q^{2m}-1| <= tol at m=" + std::to_string(m));
        }
    }

    bool resonanceFree(int depth) const {
        for (int m = 1; m <= depth; ++m)
            if (std::abs(qPow(2 * m) - 1.0) <= resonanceTol) return false;
        return true;
    }
};

}  // namespace qad

#endif
