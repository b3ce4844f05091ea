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

#include "qad/airy.hpp"

#include <cmath>

namespace qad {

AiryPair airy(Complex z) {
    // Ai = c1 f - c2 g, Bi = sqrt(3) (c1 f + c2 g), with
    // f = sum z^{3k} prod..., g = sum z^{3k+1} prod...; both entire.
    static const double c1 = 0.3550280538878172;  // Ai(0) = 3^{-2/3}/Gamma(2/3)
    static const double c2 = 0.2588194037928068;  // -Ai'(0) = 3^{-1/3}/Gamma(1/3)
    const Complex z3 = z * z * z;
    Complex f{1.0}, g = z;
    Complex tf{1.0}, tg = z;
    for (int k = 0; k < 120; ++k) {
        tf *= z3 / static_cast<double>((3 * k + 2) * (3 * k + 3));
        tg *= z3 / static_cast<double>((3 * k + 3) * (3 * k + 4));
        f += tf;
        g += tg;
        if (std::abs(tf) < 1e-18 * (1.0 + std::abs(f)) && std::abs(tg) < 1e-18 * (1.0 + std::abs(g)))
            break;
    }
    static const double sqrt3 = std::sqrt(3.0);
    return {c1 * f - c2 * g, sqrt3 * (c1 * f + c2 * g)};
}

}  // namespace qad
