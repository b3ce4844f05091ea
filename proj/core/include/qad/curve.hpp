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

#ifndef QAD_CURVE_HPP
#define QAD_CURVE_HPP

#include <optional>
#include <vector>

#include "qad/polynomial.hpp"
#include "qad/quadrature.hpp"

namespace qad {

struct QuadConfig {
    int alphaNodes = 64;
    int betaNodes = 128;
    int rhoNodes = 48;
    int seriesDepth = 0;       // 0: pick 8(g+1)+8
    double tol = 1e-9;         // node-doubling convergence
    double mergeTol = 1e-8;    // branch point separation
    double residueTol = 1e-9;  // residue-free check at infinity
    int maxDoublings = 6;
};

/// Classical hyperelliptic curve w^2 - t(z) w + 1 = 0 with monic real t,
/// positive real simple branch points (roots of t^2 - 4).
struct HyperCurve {
    Polynomial t;
    std::vector<double> roots;   // x_1 < ... < x_{g+1}
    std::vector<double> branch;  // y_1 < ... < y_{2g+2}
    std::vector<double> xi;      // xi_j = log(y_j)/2
    int g = 0;

    double tLeading0() const { return t(0.0); }
    /// Interior cut I_k = [y_{2k}, y_{2k+1}] in z, k = 1..g.
    std::pair<double, double> cutZ(int k) const;
    /// Gap J_k = [y_{2k-1}, y_{2k}] in z, k = 1..g+1.
    std::pair<double, double> gapZ(int k) const;
    /// (t^2-4) = (z - y_{2k})(y_{2k+1} - z) * G_k(z) with G_k > 0 on cut k.
    double cutWeight(double z, int k) const;
};

/// Validate and construct. Accepts a root list or monic coefficients.
HyperCurve buildCurve(const std::vector<double>& roots, const QuadConfig& cfg = {});
HyperCurve buildCurveFromCoeffs(const std::vector<double>& coeffs, const QuadConfig& cfg = {});

enum class DifferentialKind { FirstKind, SecondKind, ThirdKind, Custom };

/// omega = a(z) / (z sqrt(t^2-4)) dz, a stored as a (Laurent) numerator.
struct ClassicalDifferential {
    LaurentSeries numerator;
    DifferentialKind kind = DifferentialKind::Custom;
    int index = 0;
};

ClassicalDifferential omegaFirst(int k, const HyperCurve& c);   // a = z^k, k = 1..g
ClassicalDifferential omegaThird(const HyperCurve& c);          // a = z^{g+1}
ClassicalDifferential omegaSecond(int k, const HyperCurve& c);  // a = z t [z^{-k} t]_>'

/// Numerator of the exact form d(z^{-k} sqrt(t^2-4)) in a/(z sqrt) convention.
ClassicalDifferential exactFormDifferential(int k, const HyperCurve& c);

/// Series for 1/sqrt(t^2-4) = sheet * z^{-(g+1)} (1 + e_1/z + ...) at infinity.
struct InfinityExpansion {
    int sheet = +1;
    std::vector<double> e;  // e[0] = 1
    int gPlus1 = 1;

    /// Laurent expansion of omega's integrand a(z)/(z sqrt(t^2-4)) on this sheet.
    LaurentSeries expandIntegrand(const LaurentSeries& numerator) const;
};

InfinityExpansion infinityExpansion(const HyperCurve& c, int sheet, int depth);

/// Residue pairing omega o omega' = (1/2) sum over sheets of the z^{-1}
/// coefficient of (omega integrand) * antiderivative(omega' integrand).
/// Throws HasResidue if either input has a residue at infinity.
Complex resPairing(const ClassicalDifferential& w1, const ClassicalDifferential& w2,
                   const HyperCurve& c, int depth = 0);

struct CycleId {
    enum Kind { Alpha, Beta, SigmaCycle, RhoPath } kind;
    int k = 0;  // Alpha/Beta index, 1..g
    static CycleId alpha(int k) { return {Alpha, k}; }
    static CycleId beta(int k) { return {Beta, k}; }
    static CycleId sigma() { return {SigmaCycle, 0}; }
    static CycleId rho() { return {RhoPath, 0}; }
};

/// Period of a differential over a cycle. Alpha uses Gauss–Chebyshev over the
/// cut with the positive branch of sqrt(t^2-4); Beta the tracked circle
/// |z| = sqrt(y_{2k} y_{2k+1}); Sigma the residue at infinity^+; Rho the
/// doubled branch-point-to-infinity integral (regularized numerator for
/// second-kind inputs).
Complex period(const ClassicalDifferential& w, CycleId cycle, const HyperCurve& c,
               const QuadConfig& cfg = {});

/// Classical Riemann bilinear relation:
///   sum_l (A_l B'_l - A'_l B_l) = kClassicalBilinear * (omega o omega').
/// Third-kind variant (w1 = omega_{g+1}): RHS = kClassicalBilinear/2 * rho-period.
inline constexpr Complex kClassicalBilinear{0.0, 4.0 * std::numbers::pi};

struct BilinearReport {
    Complex lhs;
    Complex rhs;        // pairing (or rho period) before normalization
    Complex normalized; // kClassicalBilinear * rhs (or /2 variant)
    double relDeviation;
    bool pass;
};

BilinearReport classicalBilinearCheck(const ClassicalDifferential& w1,
                                      const ClassicalDifferential& w2, const HyperCurve& c,
                                      const QuadConfig& cfg = {}, double tol = 1e-6);

/// || P J P^T - J ||_inf for P = (periods of {omega, omegaTilde} over
/// {alpha, beta}) / sqrt(kClassicalBilinear).
double classicalSymplecticDefect(const HyperCurve& c, const QuadConfig& cfg = {});

}  // namespace qad

#endif
