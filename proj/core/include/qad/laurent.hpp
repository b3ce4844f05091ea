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

#ifndef QAD_LAURENT_HPP
#define QAD_LAURENT_HPP

#include <limits>
#include <string>
#include <vector>

#include "qad/params.hpp"

namespace qad {

/// Truncated semi-infinite Laurent series  sum_{d <= top} c_d z^d.
///
/// Every series carries a reliability floor: coefficients at degrees below
/// the floor have been truncated and are unknown, not zero. Exact (finite)
/// series carry kNoFloor. Arithmetic computes the tightest floor of the
/// result so truncation artifacts stay auditable.
class LaurentSeries {
  public:
    static constexpr int kNoFloor = std::numeric_limits<int>::min() / 4;

    LaurentSeries() = default;

    static LaurentSeries zero() { return {}; }
    static LaurentSeries constant(Complex c);
    static LaurentSeries monomial(Complex c, int degree);

    /// Dense construction: coeffs[i] belongs to degree lo + i.
    LaurentSeries(int lo, std::vector<Complex> coeffs, int floor = kNoFloor);

    bool isZero(double tol = 0.0) const;
    bool empty() const { return c_.empty(); }

    int floor() const { return floor_; }
    bool hasFloor() const { return floor_ > kNoFloor; }
    /// Structural degree bounds of the stored coefficients.
    int lowestStored() const { return lo_; }
    int topDegree() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    /// Highest degree with |c_d| > tol, or kNoFloor for (numerically) zero.
    int degree(double tol = 0.0) const;

    Complex coeff(int d) const;
    void setCoeff(int d, Complex v);

    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    LaurentSeries operator-() const;

    LaurentSeries scaled(Complex s) const;

    /// Cauchy product with floor bookkeeping:
    /// floor = max(a.floor + b.top, b.floor + a.top).
    friend LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        return mul(a, b);
    }

    /// Multiply by z^s.
    LaurentSeries shifted(int s) const;

    /// a(z q^{2m}): coefficient a_d -> a_d q^{2 m d}.
    LaurentSeries dilated(int m, const DeformParams& p) const;

    /// Drop coefficients below `floor` and record it.
    LaurentSeries truncatedBelow(int floor) const;

    /// Remove numerically negligible boundary coefficients (storage only).
    LaurentSeries trimmed(double tol = 0.0) const;

    double maxAbs() const;
    /// max |c_d| over degrees >= dmin.
    double maxAbsAbove(int dmin) const;

    Complex evalAt(Complex z) const;

    std::string toString(double tol = 1e-14) const;

  private:
    int floor_ = kNoFloor;
    int lo_ = 0;
    std::vector<Complex> c_;  // c_[d - lo_]

    void ensureRange(int lo, int hi);
};

struct SplitParts {
    LaurentSeries pos;   // strictly positive degrees
    Complex zero{0.0};   // degree-0 coefficient
    LaurentSeries neg;   // strictly negative degrees
};

/// Strict decomposition a = [a]_> + a_0 + [a]_<; degree 0 belongs to neither part.
SplitParts splitParts(const LaurentSeries& a);

LaurentSeries positivePart(const LaurentSeries& a);
LaurentSeries negativePart(const LaurentSeries& a);

/// pi_q: coefficient multiplier (q^{2d}-1)/(q^{2d}+1); annihilates degree 0.
/// Throws DegenerateMultiplier if q^{2d} is within resonanceTol of -1 for a
/// retained degree.
LaurentSeries piQ(const LaurentSeries& a, const DeformParams& p);

/// Coefficient of z^{-1}. Requires the floor to reach -1.
Complex residue(const LaurentSeries& a);

/// Inverse of the (possibly twisted) forward difference.
///
/// weight 0: solves u(z q^2) - u(z) = v with u_0 := 0. Requires |v_0| < zeroTol
/// (NonzeroConstantTerm otherwise) and a resonance-free range (Resonance).
/// weight w = +-2(g+1): solves q^w z^w u(z q^2) - u(z) = v by back-substitution
/// from the top degree; no small divisors appear. Result floor = v.floor.
LaurentSeries deltaInverse(const LaurentSeries& v, int weight, const DeformParams& p);

/// Forward operator matching deltaInverse: weight 0 gives u(zq^2) - u(z);
/// weight w gives q^w z^w u(zq^2) - u(z).
LaurentSeries deltaForward(const LaurentSeries& u, int weight, const DeformParams& p);

}  // namespace qad

#endif
