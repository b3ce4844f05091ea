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

#include "qad/curve.hpp"

#include <algorithm>
#include <cmath>

namespace qad {

std::pair<double, double> HyperCurve::cutZ(int k) const {
    if (k < 1 || k > g) throw IndexOutOfRange("cutZ: k out of 1..g");
    return {branch[static_cast<size_t>(2 * k - 1)], branch[static_cast<size_t>(2 * k)]};
}

std::pair<double, double> HyperCurve::gapZ(int k) const {
    if (k < 1 || k > g + 1) throw IndexOutOfRange("gapZ: k out of 1..g+1");
    return {branch[static_cast<size_t>(2 * k - 2)], branch[static_cast<size_t>(2 * k - 1)]};
}

double HyperCurve::cutWeight(double z, int k) const {
    double prod = 1.0;
    for (size_t j = 0; j < branch.size(); ++j) {
        if (j == static_cast<size_t>(2 * k - 1) || j == static_cast<size_t>(2 * k)) continue;
        prod *= (z - branch[j]);
    }
    return -prod;
}

namespace {

std::vector<double> realPositiveRoots(const Polynomial& p, double tol, const char* what) {
    std::vector<double> out;
    for (const Complex& r : polyRoots(p)) {
        const double scale = std::max(1.0, std::abs(r));
        if (std::abs(r.imag()) > tol * scale)
            throw ComplexBranchPoint(std::string(what) + ": nonreal root, imag = " +
                                     std::to_string(r.imag()));
        if (r.real() <= 0.0)
            throw ComplexBranchPoint(std::string(what) + ": nonpositive root " +
                                     std::to_string(r.real()));
        out.push_back(r.real());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

HyperCurve buildCurveFromCoeffs(const std::vector<double>& coeffs, const QuadConfig& cfg) {
    HyperCurve c;
    c.t = Polynomial(coeffs);
    if (c.t.degree() < 2) throw Error("buildCurve: need degree >= 2");
    if (!c.t.isMonic(1e-10)) throw NotMonic("buildCurve: t must be monic");
    c.g = c.t.degree() - 1;

    auto xs = realPositiveRoots(c.t, cfg.mergeTol, "t");
    c.roots = xs;
    if (std::abs(c.t(0.0)) <= 2.0)
        throw Error("buildCurve: |t(0)| <= 2, curve inadmissible");

    // roots of t^2-4 = (t-2)(t+2), solved factorwise for conditioning
    auto ym = realPositiveRoots(c.t.plus(-2.0), cfg.mergeTol, "t-2");
    auto yp = realPositiveRoots(c.t.plus(+2.0), cfg.mergeTol, "t+2");
    c.branch = ym;
    c.branch.insert(c.branch.end(), yp.begin(), yp.end());
    std::sort(c.branch.begin(), c.branch.end());

    // polish against t^2-4 and verify separation
    const Polynomial t2m4 = c.t * c.t + Polynomial({-4.0});
    const Polynomial dt2m4 = t2m4.derivative();
    for (auto& y : c.branch) {
        for (int it = 0; it < 2; ++it) {
            const double f = t2m4(y), df = dt2m4(y);
            if (std::abs(df) > 1e-300) y -= f / df;
        }
    }
    for (size_t j = 1; j < c.branch.size(); ++j)
        if (c.branch[j] - c.branch[j - 1] < cfg.mergeTol)
            throw NearDegenerate("buildCurve: branch points closer than mergeTol");

    for (int k = 1; k <= c.g + 1; ++k) {
        const double x = c.roots[static_cast<size_t>(k - 1)];
        const double lo = c.branch[static_cast<size_t>(2 * k - 2)];
        const double hi = c.branch[static_cast<size_t>(2 * k - 1)];
        if (!(lo < x && x < hi)) throw InterlacingViolation("buildCurve: y_{2k-1} < x_k < y_{2k} fails");
    }

    c.xi.resize(c.branch.size());
    for (size_t j = 0; j < c.branch.size(); ++j) c.xi[j] = 0.5 * std::log(c.branch[j]);

    // sampled sign checks: t^2-4 > 0 on cuts, < 0 on gaps
    auto sample = [&](double lo, double hi, bool wantPositive) {
        for (int i = 1; i <= 7; ++i) {
            const double z = lo + (hi - lo) * i / 8.0;
            const double v = t2m4(z);
            if (wantPositive ? (v <= 0.0) : (v >= 0.0))
                throw Error("buildCurve: sign check failed on sampled interval");
        }
    };
    for (int k = 1; k <= c.g; ++k) {
        auto [lo, hi] = c.cutZ(k);
        sample(lo, hi, true);
    }
    for (int k = 1; k <= c.g + 1; ++k) {
        auto [lo, hi] = c.gapZ(k);
        sample(lo, hi, false);
    }
    return c;
}

HyperCurve buildCurve(const std::vector<double>& roots, const QuadConfig& cfg) {
    return buildCurveFromCoeffs(Polynomial::fromRoots(roots).coeffs(), cfg);
}

ClassicalDifferential omegaFirst(int k, const HyperCurve& c) {
    if (k < 1 || k > c.g) throw IndexOutOfRange("omegaFirst: k out of 1..g");
    return {LaurentSeries::monomial(1.0, k), DifferentialKind::FirstKind, k};
}

ClassicalDifferential omegaThird(const HyperCurve& c) {
    return {LaurentSeries::monomial(1.0, c.g + 1), DifferentialKind::ThirdKind, c.g + 1};
}

ClassicalDifferential omegaSecond(int k, const HyperCurve& c) {
    if (k < 1 || k > c.g) throw IndexOutOfRange("omegaSecond: k out of 1..g");
    // a = z * t * d/dz [z^{-k} t]_>
    LaurentSeries proj = positivePart(c.t.toLaurent().shifted(-k));
    LaurentSeries dproj;
    for (int d = proj.lowestStored(); d <= proj.topDegree(); ++d)
        if (d != 0 && proj.coeff(d) != Complex{0.0}) dproj.setCoeff(d - 1, static_cast<double>(d) * proj.coeff(d));
    return {mul(c.t.toLaurent(), dproj).shifted(1), DifferentialKind::SecondKind, k};
}

ClassicalDifferential exactFormDifferential(int k, const HyperCurve& c) {
    // d(z^{-k} sqrt(t^2-4)) = [(-k z^{-k-1}(t^2-4) + z^{-k} t t')/sqrt(t^2-4)] dz
    const Polynomial t2m4 = c.t * c.t + Polynomial({-4.0});
    const LaurentSeries lhs = t2m4.toLaurent().shifted(-k - 1).scaled(-static_cast<double>(k));
    const LaurentSeries rhs = (c.t * c.t.derivative()).toLaurent().shifted(-k);
    return {(lhs + rhs).shifted(1), DifferentialKind::Custom, k};
}

LaurentSeries InfinityExpansion::expandIntegrand(const LaurentSeries& numerator) const {
    LaurentSeries E;
    for (size_t j = 0; j < e.size(); ++j)
        E.setCoeff(-static_cast<int>(j), e[j] * static_cast<double>(sheet));
    E = E.truncatedBelow(-static_cast<int>(e.size()) + 1);
    return mul(numerator, E).shifted(-1 - gPlus1);
}

InfinityExpansion infinityExpansion(const HyperCurve& c, int sheet, int depth) {
    if (depth < 2 * (c.g + 1)) depth = 2 * (c.g + 1);
    const Polynomial t2m4 = c.t * c.t + Polynomial({-4.0});
    // h_j = coefficient of z^{2g+2-j}: h(u) = u^{2g+2} (t(1/u)^2 - 4), h(0) = 1
    std::vector<double> h(static_cast<size_t>(depth), 0.0);
    const int deg = t2m4.degree();
    for (int j = 0; j < depth && j <= deg; ++j) h[static_cast<size_t>(j)] = t2m4.coeff(deg - j);

    // Newton iteration for E = h^{-1/2}: E <- E (3 - h E^2) / 2
    std::vector<double> E(static_cast<size_t>(depth), 0.0);
    E[0] = 1.0;
    auto convTrunc = [&](const std::vector<double>& a, const std::vector<double>& b) {
        std::vector<double> r(static_cast<size_t>(depth), 0.0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0.0) continue;
            for (size_t j = 0; j + i < static_cast<size_t>(depth) && j < b.size(); ++j)
                r[i + j] += a[i] * b[j];
        }
        return r;
    };
    for (int it = 0; it < 8; ++it) {
        auto E2 = convTrunc(E, E);
        auto hE2 = convTrunc(h, E2);
        std::vector<double> corr(static_cast<size_t>(depth), 0.0);
        corr[0] = 3.0;
        for (size_t i = 0; i < corr.size(); ++i) corr[i] -= hE2[i];
        auto next = convTrunc(E, corr);
        for (auto& v : next) v *= 0.5;
        E = std::move(next);
    }
    InfinityExpansion out;
    out.sheet = sheet;
    out.e = std::move(E);
    out.gPlus1 = c.g + 1;
    return out;
}

Complex resPairing(const ClassicalDifferential& w1, const ClassicalDifferential& w2,
                   const HyperCurve& c, int depth) {
    if (depth <= 0) depth = 8 * (c.g + 1) + 8;
    Complex acc{0.0};
    for (int sheet : {+1, -1}) {
        const InfinityExpansion E = infinityExpansion(c, sheet, depth);
        const LaurentSeries f1 = E.expandIntegrand(w1.numerator);
        const LaurentSeries f2 = E.expandIntegrand(w2.numerator);
        const double scale = std::max({1.0, f1.maxAbs(), f2.maxAbs()});
        if (std::abs(f1.coeff(-1)) > 1e-10 * scale || std::abs(f2.coeff(-1)) > 1e-10 * scale)
            throw HasResidue("resPairing: input has a residue at infinity");
        LaurentSeries F2;  // termwise antiderivative, z^{-1} absent
        for (int d = f2.lowestStored(); d <= f2.topDegree(); ++d) {
            if (d == -1) continue;
            const Complex v = f2.coeff(d);
            if (v != Complex{0.0}) F2.setCoeff(d + 1, v / static_cast<double>(d + 1));
        }
        F2 = F2.truncatedBelow(f2.floor() + 1);
        acc += 0.5 * mul(f1, F2).coeff(-1);
    }
    return acc;
}

namespace {

Complex alphaPeriod(const ClassicalDifferential& w, int k, const HyperCurve& c,
                    const QuadConfig& cfg) {
    auto [lo, hi] = c.cutZ(k);
    auto compute = [&](int n) -> Complex {
        Complex s{0.0};
        for (int i = 1; i <= n; ++i) {
            const double z = 0.5 * (lo + hi) + 0.5 * (hi - lo) * std::cos((2.0 * i - 1.0) *
                                                                          std::numbers::pi / (2.0 * n));
            s += w.numerator.evalAt(Complex{z, 0.0}) / (z * std::sqrt(c.cutWeight(z, k)));
        }
        return 2.0 * std::numbers::pi / static_cast<double>(n) * s;
    };
    return nodeDoubling([&](int n) { return compute(n); }, cfg.alphaNodes, cfg.tol, cfg.maxDoublings);
}

Complex betaPeriod(const ClassicalDifferential& w, int k, const HyperCurve& c,
                   const QuadConfig& cfg) {
    auto [lo, hi] = c.cutZ(k);
    const double r0 = std::sqrt(lo * hi);
    const Polynomial t2m4 = c.t * c.t + Polynomial({-4.0});
    const double sStart = std::sqrt(t2m4(r0));  // positive root on the cut bank

    auto compute = [&](int n) -> Complex {
        Complex acc{0.0};
        Complex prev{sStart, 0.0};
        Complex first;
        for (int i = 0; i < n; ++i) {
            const double th = 2.0 * std::numbers::pi * i / n;
            const Complex z = std::polar(r0, th);
            Complex s = std::sqrt(t2m4(z));
            if (std::abs(s - prev) > std::abs(-s - prev)) s = -s;
            if (std::abs(s) > 1e-300 && std::abs(prev) > 1e-300) {
                const double dphi = std::abs(std::arg(s / prev));
                if (dphi > std::numbers::pi / 2.0)
                    throw BranchTrackingLost("betaPeriod: tracked phase jump > pi/2");
            }
            prev = s;
            if (i == 0) first = s;
            acc += w.numerator.evalAt(z) / (z * s) * Complex{0.0, 1.0} * z;
        }
        // closure: the circle encloses an even number of branch points
        {
            Complex s = std::sqrt(t2m4(Complex{r0, 0.0}));
            if (std::abs(s - prev) > std::abs(-s - prev)) s = -s;
            if (std::abs(s - first) > 1e-6 * std::abs(first))
                throw BranchTrackingLost("betaPeriod: branch did not close around the circle");
        }
        return 2.0 * std::numbers::pi / static_cast<double>(n) * acc;
    };
    return nodeDoubling([&](int n) { return compute(n); }, cfg.betaNodes, cfg.tol, cfg.maxDoublings);
}

Complex rhoPeriod(const ClassicalDifferential& w, const HyperCurve& c, const QuadConfig& cfg) {
    const double y = c.branch.back();
    LaurentSeries num = w.numerator;
    if (w.kind == DifferentialKind::SecondKind) {
        // subtract d(z^{-k} sqrt(t^2-4)): numerator becomes
        // -z (t [z^{-k} t]_<' + 4k z^{-k-1})
        const int k = w.index;
        LaurentSeries proj = negativePart(c.t.toLaurent().shifted(-k));
        LaurentSeries dproj;
        for (int d = proj.lowestStored(); d <= proj.topDegree(); ++d)
            if (d != 0 && proj.coeff(d) != Complex{0.0})
                dproj.setCoeff(d - 1, static_cast<double>(d) * proj.coeff(d));
        num = mul(c.t.toLaurent(), dproj);
        num.setCoeff(-k - 1, num.coeff(-k - 1) + 4.0 * k);
        num = num.shifted(1).scaled(-1.0);
    }
    const Polynomial t2m4 = c.t * c.t + Polynomial({-4.0});
    auto f = [&](double z) -> Complex {
        return num.evalAt(Complex{z, 0.0}) / (z * std::sqrt(t2m4(z)));
    };
    const double zc = y + std::max(1.0, y);
    auto compute = [&](int n) -> Complex {
        // near part, z = y + u^2
        Complex nearPart = glIntegrate(
            [&](double u) { return f(y + u * u) * (2.0 * u); }, 0.0, std::sqrt(zc - y), n);
        // far part, v = 1/z
        Complex farPart = glIntegrate(
            [&](double v) {
                const double z = 1.0 / v;
                return f(z) * (z * z);
            },
            1e-14, 1.0 / zc, n);
        return 2.0 * (nearPart + farPart);
    };
    return nodeDoubling([&](int n) { return compute(n); }, cfg.rhoNodes, cfg.tol, cfg.maxDoublings);
}

}  // namespace

Complex period(const ClassicalDifferential& w, CycleId cycle, const HyperCurve& c,
               const QuadConfig& cfg) {
    switch (cycle.kind) {
        case CycleId::Alpha:
            if (cycle.k < 1 || cycle.k > c.g) throw IndexOutOfRange("period: alpha index");
            return alphaPeriod(w, cycle.k, c, cfg);
        case CycleId::Beta:
            if (cycle.k < 1 || cycle.k > c.g) throw IndexOutOfRange("period: beta index");
            return betaPeriod(w, cycle.k, c, cfg);
        case CycleId::SigmaCycle: {
            const int depth = cfg.seriesDepth > 0 ? cfg.seriesDepth : 8 * (c.g + 1) + 8;
            const InfinityExpansion E = infinityExpansion(c, +1, depth);
            return E.expandIntegrand(w.numerator).coeff(-1);
        }
        case CycleId::RhoPath:
            return rhoPeriod(w, c, cfg);
    }
    throw Error("period: unknown cycle");
}

BilinearReport classicalBilinearCheck(const ClassicalDifferential& w1,
                                      const ClassicalDifferential& w2, const HyperCurve& c,
                                      const QuadConfig& cfg, double tol) {
    Complex lhs{0.0};
    double magnitude = 0.0;  // pre-cancellation scale of the period sum
    for (int l = 1; l <= c.g; ++l) {
        const Complex A1 = period(w1, CycleId::alpha(l), c, cfg);
        const Complex B1 = period(w1, CycleId::beta(l), c, cfg);
        const Complex A2 = period(w2, CycleId::alpha(l), c, cfg);
        const Complex B2 = period(w2, CycleId::beta(l), c, cfg);
        lhs += A1 * B2 - A2 * B1;
        magnitude += std::abs(A1) * std::abs(B2) + std::abs(A2) * std::abs(B1);
    }
    BilinearReport rep;
    rep.lhs = lhs;
    if (w1.kind == DifferentialKind::ThirdKind) {
        rep.rhs = period(w2, CycleId::rho(), c, cfg);
        rep.normalized = 0.5 * kClassicalBilinear * rep.rhs;
    } else {
        rep.rhs = resPairing(w1, w2, c, cfg.seriesDepth);
        rep.normalized = kClassicalBilinear * rep.rhs;
    }
    const double scale = std::max({std::abs(rep.lhs), std::abs(rep.normalized), 1e-3 * magnitude, 1e-12});
    rep.relDeviation = std::abs(rep.lhs - rep.normalized) / scale;
    rep.pass = rep.relDeviation < tol;
    return rep;
}

double classicalSymplecticDefect(const HyperCurve& c, const QuadConfig& cfg) {
    const int g = c.g;
    const int n = 2 * g;
    std::vector<ClassicalDifferential> basis;
    for (int k = 1; k <= g; ++k) basis.push_back(omegaFirst(k, c));
    for (int k = 1; k <= g; ++k) basis.push_back(omegaSecond(k, c));

    std::vector<std::vector<Complex>> P(static_cast<size_t>(n), std::vector<Complex>(static_cast<size_t>(n)));
    const Complex root = std::sqrt(kClassicalBilinear);
    for (int i = 0; i < n; ++i) {
        for (int l = 1; l <= g; ++l) {
            P[static_cast<size_t>(i)][static_cast<size_t>(l - 1)] =
                period(basis[static_cast<size_t>(i)], CycleId::alpha(l), c, cfg) / root;
            P[static_cast<size_t>(i)][static_cast<size_t>(g + l - 1)] =
                period(basis[static_cast<size_t>(i)], CycleId::beta(l), c, cfg) / root;
        }
    }
    // J = [[0, I], [-I, 0]]; defect = max_ij | (P J P^T - J)_ij |
    double defect = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Complex v{0.0};
            for (int l = 0; l < g; ++l)
                v += P[static_cast<size_t>(i)][static_cast<size_t>(l)] *
                         P[static_cast<size_t>(j)][static_cast<size_t>(g + l)] -
                     P[static_cast<size_t>(i)][static_cast<size_t>(g + l)] *
                         P[static_cast<size_t>(j)][static_cast<size_t>(l)];
            Complex expected{0.0};
            if (j == i + g) expected = 1.0;
            if (i == j + g) expected = -1.0;
            defect = std::max(defect, std::abs(v - expected));
        }
    }
    return defect;
}

}  // namespace qad
