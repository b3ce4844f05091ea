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

#ifndef QAD_ASYMPTOTIC_HPP
#define QAD_ASYMPTOTIC_HPP

#include "qad/polynomial.hpp"

namespace qad {

/// Formal Baxter solutions in reduced form.
///
/// phi_{+-}(zeta) = e^{+-(g+1) zeta^2/(i gamma)} z^{-(g+1)/2} f_{+-}(z), where
/// f_{+-} are semi-infinite series with unit constant term solving
///   z^{g+1} f(z q^{+-2}) + z^{-(g+1)} q^{+-2(g+1)} f(z q^{-+2}) = t(z) f(z)
/// for monic t of degree g+1. The Gaussian and half-integer power prefactors
/// never materialize: products of phi's reduce to plain series with an
/// explicit Gaussian weight in {-2(g+1), 0, +2(g+1)} tracked by the callers.
struct AsymptoticPair {
    LaurentSeries fPlus;
    LaurentSeries fMinus;
    DeformParams params;
    Polynomial t;

    int weightUnit() const { return 2 * (params.g + 1); }
};

/// Solve the reduced recursions down to degree -depth (c_0 = 1 normalization).
/// Throws NotMonic / Resonance.
AsymptoticPair buildAsymptoticPair(const Polynomial& t, const DeformParams& params, int depth);

/// q-Wronskian residual:
///   f_+(zq^2) f_-(z) - z^{-2(g+1)} q^{-2(g+1)} f_-(zq^2) f_+(z) - 1,
/// reported as max |coefficient| relative to the local magnitude of the
/// first product, over degrees above floor + margin.
double wronskianResidual(const AsymptoticPair& pair, int margin = -1);

/// Recover t from fPlus via the reduced difference equation; checks that
/// negative degrees vanish and degrees 0..g+1 form a monic polynomial.
/// Throws ReconstructionMismatch.
Polynomial reconstructT(const AsymptoticPair& pair, double tol = 1e-8);

}  // namespace qad

#endif
