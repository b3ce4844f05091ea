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

#include "qad/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qad {

namespace {

int addFloorSat(int floor, int shift) {
    if (floor <= LaurentSeries::kNoFloor) return LaurentSeries::kNoFloor;
    long r = static_cast<long>(floor) + shift;
    if (r <= LaurentSeries::kNoFloor) return LaurentSeries::kNoFloor;
    return static_cast<int>(r);
}

}  // namespace

LaurentSeries LaurentSeries::constant(Complex c) { return monomial(c, 0); }

LaurentSeries LaurentSeries::monomial(Complex c, int degree) {
    LaurentSeries s;
    s.lo_ = degree;
    s.c_ = {c};
    return s;
}

LaurentSeries::LaurentSeries(int lo, std::vector<Complex> coeffs, int floor)
    : floor_(floor), lo_(lo), c_(std::move(coeffs)) {}

bool LaurentSeries::isZero(double tol) const {
    for (const auto& v : c_)
        if (std::abs(v) > tol) return false;
    return true;
}

int LaurentSeries::degree(double tol) const {
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
        if (std::abs(c_[i]) > tol) return lo_ + i;
    return kNoFloor;
}

Complex LaurentSeries::coeff(int d) const {
    int i = d - lo_;
    if (i < 0 || i >= static_cast<int>(c_.size())) return {0.0, 0.0};
    return c_[i];
}

void LaurentSeries::ensureRange(int lo, int hi) {
    if (c_.empty()) {
        lo_ = lo;
        c_.assign(static_cast<size_t>(hi - lo + 1), Complex{0.0});
        return;
    }
    int curHi = topDegree();
    if (lo < lo_) {
        c_.insert(c_.begin(), static_cast<size_t>(lo_ - lo), Complex{0.0});
        lo_ = lo;
    }
    if (hi > curHi) c_.resize(c_.size() + static_cast<size_t>(hi - curHi), Complex{0.0});
}

void LaurentSeries::setCoeff(int d, Complex v) {
    ensureRange(std::min(d, c_.empty() ? d : lo_), std::max(d, c_.empty() ? d : topDegree()));
    c_[static_cast<size_t>(d - lo_)] = v;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
    floor_ = std::max(floor_, o.floor_);
    if (o.c_.empty()) return *this;
    ensureRange(c_.empty() ? o.lo_ : std::min(lo_, o.lo_),
                c_.empty() ? o.topDegree() : std::max(topDegree(), o.topDegree()));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<size_t>(o.lo_ + static_cast<int>(i) - lo_)] += o.c_[i];
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

LaurentSeries LaurentSeries::scaled(Complex s) const {
    LaurentSeries r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries r;
    if (a.c_.empty() || b.c_.empty()) {
        // floor of an empty product: lowest degree we could have trusted
        if (a.floor_ > LaurentSeries::kNoFloor || b.floor_ > LaurentSeries::kNoFloor) {
            int fa = (b.c_.empty() ? LaurentSeries::kNoFloor : addFloorSat(a.floor_, b.topDegree()));
            int fb = (a.c_.empty() ? LaurentSeries::kNoFloor : addFloorSat(b.floor_, a.topDegree()));
            r.floor_ = std::max(fa, fb);
        }
        return r;
    }
    const int fa = addFloorSat(a.floor_, b.topDegree());
    const int fb = addFloorSat(b.floor_, a.topDegree());
    r.floor_ = std::max(fa, fb);

    const int lo = a.lo_ + b.lo_;
    const int hi = a.topDegree() + b.topDegree();
    const int cutLo = std::max(lo, r.floor_ > LaurentSeries::kNoFloor ? r.floor_ : lo);
    r.lo_ = cutLo;
    r.c_.assign(static_cast<size_t>(hi - cutLo + 1), Complex{0.0});
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == Complex{0.0}) continue;
        const int da = a.lo_ + static_cast<int>(i);
        const int jmin = std::max(0, cutLo - da - b.lo_);
        for (size_t j = static_cast<size_t>(jmin); j < b.c_.size(); ++j) {
            const int d = da + b.lo_ + static_cast<int>(j);
            r.c_[static_cast<size_t>(d - cutLo)] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

LaurentSeries LaurentSeries::shifted(int s) const {
    LaurentSeries r = *this;
    r.lo_ += s;
    r.floor_ = addFloorSat(r.floor_, s);
    return r;
}

LaurentSeries LaurentSeries::dilated(int m, const DeformParams& p) const {
    LaurentSeries r = *this;
    for (size_t i = 0; i < r.c_.size(); ++i) {
        const long d = r.lo_ + static_cast<long>(i);
        r.c_[i] *= p.qPow(2L * m * d);
    }
    return r;
}

LaurentSeries LaurentSeries::truncatedBelow(int floor) const {
    LaurentSeries r = *this;
    r.floor_ = std::max(r.floor_, floor);
    if (!r.c_.empty() && r.lo_ < r.floor_) {
        const int drop = std::min<int>(r.floor_ - r.lo_, static_cast<int>(r.c_.size()));
        r.c_.erase(r.c_.begin(), r.c_.begin() + drop);
        r.lo_ += drop;
    }
    return r;
}

LaurentSeries LaurentSeries::trimmed(double tol) const {
    LaurentSeries r = *this;
    while (!r.c_.empty() && std::abs(r.c_.back()) <= tol) r.c_.pop_back();
    while (!r.c_.empty() && std::abs(r.c_.front()) <= tol) {
        r.c_.erase(r.c_.begin());
        ++r.lo_;
    }
    return r;
}

double LaurentSeries::maxAbs() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
}

double LaurentSeries::maxAbsAbove(int dmin) const {
    double m = 0.0;
    for (size_t i = 0; i < c_.size(); ++i)
        if (lo_ + static_cast<int>(i) >= dmin) m = std::max(m, std::abs(c_[i]));
    return m;
}

Complex LaurentSeries::evalAt(Complex z) const {
    // Horner over the stored range, then the overall z^{lo} factor.
    Complex acc{0.0};
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) acc = acc * z + c_[static_cast<size_t>(i)];
    return acc * std::pow(z, lo_);
}

std::string LaurentSeries::toString(double tol) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (std::abs(c_[i]) <= tol) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].real() << (c_[i].imag() < 0 ? "" : "+") << c_[i].imag() << "i)z^"
           << lo_ + static_cast<int>(i);
        first = false;
    }
    if (first) os << "0";
    if (hasFloor()) os << "  [floor " << floor_ << "]";
    return os.str();
}

SplitParts splitParts(const LaurentSeries& a) {
    SplitParts out;
    out.pos = LaurentSeries::zero();
    out.neg = LaurentSeries::zero();
    out.zero = a.coeff(0);
    for (int d = a.lowestStored(); d <= a.topDegree(); ++d) {
        const Complex v = a.coeff(d);
        if (v == Complex{0.0}) continue;
        if (d > 0)
            out.pos.setCoeff(d, v);
        else if (d < 0)
            out.neg.setCoeff(d, v);
    }
    // The positive part is exact whenever the floor sits at or below degree 0:
    // everything the projection keeps was reliable.
    if (a.floor() > 0) out.pos = out.pos.truncatedBelow(a.floor());
    out.neg = out.neg.truncatedBelow(a.floor());
    return out;
}

LaurentSeries positivePart(const LaurentSeries& a) { return splitParts(a).pos; }
LaurentSeries negativePart(const LaurentSeries& a) { return splitParts(a).neg; }

LaurentSeries piQ(const LaurentSeries& a, const DeformParams& p) {
    LaurentSeries r = a;
    for (int d = a.lowestStored(); d <= a.topDegree(); ++d) {
        if (d == 0) {
            r.setCoeff(0, {0.0, 0.0});
            continue;
        }
        const Complex q2d = p.qPow(2L * d);
        if (std::abs(q2d + 1.0) <= p.resonanceTol)
            throw DegenerateMultiplier("DegenerateMultiplier: q^{2d} = -1 at d=" + std::to_string(d));
        r.setCoeff(d, a.coeff(d) * (q2d - 1.0) / (q2d + 1.0));
    }
    return r;
}

Complex residue(const LaurentSeries& a) {
    if (a.floor() > -1) throw UnreliableFloor("UnreliableFloor: residue needs floor <= -1");
    return a.coeff(-1);
}

LaurentSeries deltaInverse(const LaurentSeries& v, int weight, const DeformParams& p) {
    LaurentSeries u;
    if (weight == 0) {
        if (std::abs(v.coeff(0)) >= p.zeroTol)
            throw NonzeroConstantTerm("NonzeroConstantTerm: |v_0| = " + std::to_string(std::abs(v.coeff(0))));
        for (int d = v.lowestStored(); d <= v.topDegree(); ++d) {
            if (d == 0) continue;
            const Complex denom = p.qPow(2L * d) - 1.0;
            if (std::abs(denom) <= p.resonanceTol)
                throw Resonance("Resonance in deltaInverse at degree " + std::to_string(d));
            const Complex vd = v.coeff(d);
            if (vd != Complex{0.0}) u.setCoeff(d, vd / denom);
        }
        u = u.truncatedBelow(v.floor());
        return u;
    }

    // Twisted case: q^w z^w u(zq^2) - u(z) = v, coefficientwise
    //   q^{2m-w} u_{m-w} - u_m = v_m.
    if (v.empty()) return u;
    const int top = v.topDegree();
    if (weight > 0) {
        // descend: u_{m-w} = q^{w-2m} (v_m + u_m), u zero above top-w
        for (int m = top; m >= v.lowestStored(); --m) {
            const Complex val = p.qPow(static_cast<long>(weight) - 2L * m) * (v.coeff(m) + u.coeff(m));
            u.setCoeff(m - weight, val);
        }
        u = u.truncatedBelow(v.floor());
    } else {
        // weight < 0: u_m = q^{2m-w} u_{m-w} - v_m, reading the higher degree m-w
        for (int m = top; m >= v.lowestStored(); --m) {
            const Complex val = p.qPow(2L * m - weight) * u.coeff(m - weight) - v.coeff(m);
            u.setCoeff(m, val);
        }
        u = u.truncatedBelow(v.floor());
    }
    return u;
}

LaurentSeries deltaForward(const LaurentSeries& u, int weight, const DeformParams& p) {
    LaurentSeries shifted = u.dilated(1, p);
    if (weight != 0) shifted = shifted.shifted(weight).scaled(p.qPow(weight));
    return shifted - u;
}

}  // namespace qad
