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

#include "qad/deform.hpp"

#include <cmath>

namespace qad {

namespace {
const Complex kI{0.0, 1.0};
}

LaurentSeries applyD(const LaurentSeries& a, const Polynomial& t, const DeformParams& p) {
    const LaurentSeries tL = t.toLaurent();
    LaurentSeries out = mul(tL, piQ(mul(tL, a), p));
    out += a.dilated(-1, p);
    out -= a.dilated(1, p);
    return out.scaled(1.0 / (kI * p.gamma));
}

LaurentSeries firstKind(int k, const DeformParams& p) {
    if (k < 1 || k > p.g + 1) throw IndexOutOfRange("firstKind: k out of 1..g+1");
    return LaurentSeries::monomial(1.0, k);
}

namespace {

LaurentSeries secondKindPart(int k, const Polynomial& t, const DeformParams& p, bool positive) {
    const LaurentSeries zk = LaurentSeries::monomial(1.0, -k);
    const LaurentSeries tL = t.toLaurent();
    const LaurentSeries tzk = mul(tL, zk);
    const LaurentSeries proj = positive ? positivePart(tzk) : negativePart(tzk);
    LaurentSeries out = mul(tL, piQ(proj, p));
    const LaurentSeries zproj = positive ? positivePart(zk) : negativePart(zk);
    out += zproj.scaled(p.qPow(2L * k) - p.qPow(-2L * k));
    return out.scaled(1.0 / (kI * p.gamma));
}

}  // namespace

LaurentSeries secondKind(int k, const Polynomial& t, const DeformParams& p) {
    if (k > p.g + 1) throw IndexOutOfRange("secondKind: k must be <= g+1");
    return secondKindPart(k, t, p, true);
}

LaurentSeries secondKindNegative(int k, const Polynomial& t, const DeformParams& p) {
    if (k > p.g + 1) throw IndexOutOfRange("secondKindNegative: k must be <= g+1");
    return secondKindPart(k, t, p, false);
}

BasisElement basisElement(BasisKind kind, int k, const Polynomial& t, const DeformParams& p) {
    switch (kind) {
        case BasisKind::FirstKind:
            if (k < 1 || k > p.g) throw IndexOutOfRange("FirstKind: k out of 1..g");
            return {kind, k, firstKind(k, p)};
        case BasisKind::ThirdKind:
            return {kind, p.g + 1, firstKind(p.g + 1, p)};
        case BasisKind::SecondKind:
            if (k < 1 || k > p.g + 1) throw IndexOutOfRange("SecondKind: k out of 1..g+1");
            return {kind, k, secondKind(k, t, p)};
        case BasisKind::ExactTail:
            if (k > 0) throw IndexOutOfRange("ExactTail: k must be <= 0");
            return {kind, k, secondKind(k, t, p)};
        case BasisKind::SecondKindNegative:
            if (k > p.g + 1) throw IndexOutOfRange("SecondKindNegative: k out of range");
            return {kind, k, secondKindNegative(k, t, p)};
    }
    throw IndexOutOfRange("basisElement: unknown kind");
}

Complex residueFunctional(const LaurentSeries& a, const AsymptoticPair& pair) {
    const int g1 = pair.params.g + 1;
    const LaurentSeries P0 = mul(pair.fPlus, pair.fMinus).shifted(-g1);
    const LaurentSeries prod = mul(a, P0);
    if (prod.floor() > -1) throw UnreliableFloor("residueFunctional: floor too shallow");
    return prod.coeff(0);
}

Complex pairing(const LaurentSeries& a, const LaurentSeries& b, const AsymptoticPair& pair) {
    const DeformParams& p = pair.params;
    const int g1 = p.g + 1;
    const int w = 2 * g1;

    const LaurentSeries P0 = mul(pair.fPlus, pair.fMinus).shifted(-g1);
    const LaurentSeries Pp = mul(pair.fPlus, pair.fPlus).shifted(-g1);
    const LaurentSeries Pm = mul(pair.fMinus, pair.fMinus).shifted(-g1);

    const Complex ra = mul(a, P0).coeff(0);
    const Complex rb = mul(b, P0).coeff(0);
    const double scale = std::max({1.0, a.maxAbs(), b.maxAbs()});
    if (std::abs(ra) > p.zeroTol * scale || std::abs(rb) > p.zeroTol * scale)
        throw ResidueNotZero("pairing: inputs must be residue-free");

    LaurentSeries v0 = mul(b, P0);
    v0.setCoeff(0, {0.0, 0.0});  // gauge: R(b) vanishes, kill rounding remnants
    const LaurentSeries u0 = deltaInverse(v0, 0, p);
    const LaurentSeries up = deltaInverse(mul(b, Pp), w, p);
    const LaurentSeries um = deltaInverse(mul(b, Pm), -w, p);

    LaurentSeries bracket = mul(P0, u0).scaled(2.0);
    bracket -= mul(Pp, um);
    bracket -= mul(Pm, up);
    return kI * p.gamma * mul(a, bracket).coeff(0);
}

double exactnessCheck(const LaurentSeries& a, int eps, int epsPrime, const AsymptoticPair& pair) {
    const DeformParams& p = pair.params;
    const int g1 = p.g + 1;

    // phi_e(zeta - i gamma s) = e^{eG} z^{-(g+1)/2} g_{e,s}(z):
    //   g_{+,0} = f+,  g_{+,1} = z^{-(g+1)} q^{2(g+1)} f+(z q^{-2}),
    //   g_{-,0} = f-,  g_{-,1} = z^{+(g+1)} f-(z q^{-2}).
    auto gfac = [&](int e, int s) -> LaurentSeries {
        if (e > 0)
            return s == 0 ? pair.fPlus : pair.fPlus.dilated(-1, p).shifted(-g1).scaled(p.qPow(2L * g1));
        return s == 0 ? pair.fMinus : pair.fMinus.dilated(-1, p).shifted(g1);
    };

    const LaurentSeries tL = pair.t.toLaurent();
    const LaurentSeries at = mul(a, tL);
    const LaurentSeries C = at - piQ(at, p);  // (id - pi_q)(a t)

    const LaurentSeries ge0 = gfac(eps, 0), ge1 = gfac(eps, 1);
    const LaurentSeries gp0 = gfac(epsPrime, 0), gp1 = gfac(epsPrime, 1);

    LaurentSeries X = mul(C, mul(ge1, gp0) + mul(ge0, gp1));
    X -= mul(a.dilated(-1, p), mul(ge0, gp0)).scaled(2.0);
    X -= mul(a, mul(ge1, gp1)).scaled(2.0);
    X = X.scaled(1.0 / (2.0 * kI * p.gamma));

    const int weight = (eps + epsPrime) * g1;  // Gaussian units of z^{...} under the shift
    const LaurentSeries Y = X.shifted(-g1);
    const LaurentSeries fwd = deltaForward(Y, weight, p);
    const LaurentSeries lhs = mul(applyD(a, pair.t, p), mul(ge0, gp0)).shifted(-g1);

    const LaurentSeries diff = lhs - fwd;
    const int margin = 4 * (p.g + 2) + std::abs(weight);
    const int dmin = std::max(diff.floor(), std::max(lhs.floor(), fwd.floor())) + margin;
    double worst = 0.0;
    for (int d = dmin; d <= diff.topDegree(); ++d) {
        const double scale = std::max({1.0, std::abs(lhs.coeff(d)), std::abs(fwd.coeff(d))});
        worst = std::max(worst, std::abs(diff.coeff(d)) / scale);
    }
    return worst;
}

std::vector<std::vector<Complex>> canonicalMatrix(const Polynomial& t, const DeformParams& params,
                                                  int depth) {
    const int g = params.g;
    params.requireResonanceFree(depth);
    DeformParams p = params;
    p.truncationFloor = -depth;
    const AsymptoticPair pair = buildAsymptoticPair(t, p, depth);

    std::vector<LaurentSeries> basis;
    for (int k = 1; k <= g; ++k) basis.push_back(firstKind(k, p));
    for (int k = 1; k <= g; ++k) basis.push_back(secondKind(k, t, p));

    std::vector<std::vector<Complex>> M(basis.size(), std::vector<Complex>(basis.size()));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) M[i][j] = pairing(basis[i], basis[j], pair);
    return M;
}

}  // namespace qad
