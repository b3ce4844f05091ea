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

#include "qad/asymptotic.hpp"

#include <cmath>

namespace qad {

namespace {

// c_m (q^{2m} - 1) = sum_{j=0}^{g} t_j c_{m+g+1-j} - c_{m+2(g+1)} q^{-2(m+g+1)}
LaurentSeries solveReduced(const Polynomial& t, const DeformParams& p, int depth, bool dualBranch) {
    const int g = p.g;
    LaurentSeries f = LaurentSeries::constant(1.0);
    auto qp = [&](long k) { return dualBranch ? p.qPow(-k) : p.qPow(k); };
    for (int m = -1; m >= -depth; --m) {
        Complex rhs{0.0};
        for (int j = 0; j <= g; ++j) rhs += t.coeff(j) * f.coeff(m + g + 1 - j);
        rhs -= f.coeff(m + 2 * (g + 1)) * qp(-2L * (m + g + 1));
        const Complex denom = qp(2L * m) - 1.0;
        if (std::abs(denom) <= p.resonanceTol)
            throw Resonance("Resonance while building asymptotic series at degree " + std::to_string(m));
        f.setCoeff(m, rhs / denom);
    }
    return f.truncatedBelow(-depth);
}

}  // namespace

AsymptoticPair buildAsymptoticPair(const Polynomial& t, const DeformParams& params, int depth) {
    if (depth < 1) throw Error("buildAsymptoticPair: depth must be >= 1");
    if (t.degree() != params.g + 1 || !t.isMonic())
        throw NotMonic("buildAsymptoticPair: t must be monic of degree g+1");
    AsymptoticPair pair;
    pair.params = params;
    pair.t = t;
    pair.fPlus = solveReduced(t, params, depth, false);
    pair.fMinus = solveReduced(t, params, depth, true);
    return pair;
}

double wronskianResidual(const AsymptoticPair& pair, int margin) {
    const DeformParams& p = pair.params;
    const int w = pair.weightUnit();
    if (margin < 0) margin = 2 * w + 4;
    LaurentSeries lead = mul(pair.fPlus.dilated(1, p), pair.fMinus);
    LaurentSeries sub =
        mul(pair.fMinus.dilated(1, p), pair.fPlus).shifted(-w).scaled(p.qPow(-w));
    LaurentSeries W = lead - sub;
    W.setCoeff(0, W.coeff(0) - 1.0);
    const int dmin = std::max(W.floor(), pair.fPlus.floor()) + margin;
    double worst = 0.0;
    for (int d = dmin; d <= W.topDegree(); ++d) {
        const double scale = std::max(1.0, std::abs(lead.coeff(d)));
        worst = std::max(worst, std::abs(W.coeff(d)) / scale);
    }
    return worst;
}

Polynomial reconstructT(const AsymptoticPair& pair, double tol) {
    const DeformParams& p = pair.params;
    const int g = p.g;
    const int w = pair.weightUnit();
    // numerator N = z^{g+1} f(zq^2) + z^{-(g+1)} q^{2(g+1)} f(zq^{-2}); then N / f = t.
    const LaurentSeries& f = pair.fPlus;
    LaurentSeries num = f.dilated(1, p).shifted(g + 1) + f.dilated(-1, p).shifted(-(g + 1)).scaled(p.qPow(w));

    // divide by f (unit constant term) from the top degree down; stay well
    // above the truncation floor, where coefficients are reliable
    const int floor = f.floor() + 4 * (g + 2);
    LaurentSeries ratio;
    LaurentSeries rem = num;
    for (int d = g + 1; d >= floor; --d) {
        const Complex cd = rem.coeff(d);
        if (cd != Complex{0.0}) {
            ratio.setCoeff(d, cd);
            rem -= f.shifted(d).scaled(cd);
        }
    }

    double scale = 1.0;
    for (int j = 0; j <= g + 1; ++j) scale = std::max(scale, std::abs(ratio.coeff(j)));
    std::vector<double> coeffs(static_cast<size_t>(g + 2), 0.0);
    for (int j = 0; j <= g + 1; ++j) {
        const Complex c = ratio.coeff(j);
        if (std::abs(c.imag()) > tol * scale)
            throw ReconstructionMismatch("reconstructT: non-real coefficient at degree " + std::to_string(j));
        coeffs[static_cast<size_t>(j)] = c.real();
    }
    // quotient coefficients below degree 0 must vanish relative to the local
    // magnitude of the series being divided
    for (int d = floor; d < 0; ++d) {
        const double local = std::max(1.0, std::abs(num.coeff(d)));
        if (std::abs(ratio.coeff(d)) > tol * local)
            throw ReconstructionMismatch("reconstructT: negative-degree residual at " + std::to_string(d));
    }
    Polynomial t(std::move(coeffs));
    if (!t.isMonic(tol)) throw ReconstructionMismatch("reconstructT: result is not monic");
    return t;
}

}  // namespace qad
