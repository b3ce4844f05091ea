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

#ifndef QAD_DEFORM_HPP
#define QAD_DEFORM_HPP

#include <vector>

#include "qad/asymptotic.hpp"

namespace qad {

/// (D a)(z) = (1/(i gamma)) ( t(z) pi_q(t(z) a(z)) + a(z q^{-2}) - a(z q^2) ).
LaurentSeries applyD(const LaurentSeries& a, const Polynomial& t, const DeformParams& p);

enum class BasisKind { FirstKind, SecondKind, ThirdKind, ExactTail, SecondKindNegative };

struct BasisElement {
    BasisKind kind;
    int index;
    LaurentSeries poly;
};

/// r_k = z^k (k = 1..g first kind, k = g+1 third kind),
/// s_k = (1/(i gamma)) ( t pi_q([t z^{-k}]_>) + [z^{-k}]_> (q^{2k} - q^{-2k}) ),
/// s_k^- the [.]_< companion. s_k for k <= 0 are exact tails.
BasisElement basisElement(BasisKind kind, int k, const Polynomial& t, const DeformParams& p);

LaurentSeries firstKind(int k, const DeformParams& p);                       // z^k
LaurentSeries secondKind(int k, const Polynomial& t, const DeformParams& p);  // s_k
LaurentSeries secondKindNegative(int k, const Polynomial& t, const DeformParams& p);  // s_k^-

/// R(a) = res( z^{-1} a phi_+ phi_- ) = degree-0 coefficient of
/// a z^{-(g+1)} f_+ f_-.
Complex residueFunctional(const LaurentSeries& a, const AsymptoticPair& pair);

/// Skew pairing of residue-free series:
/// a o b = i gamma res( z^{-1} a ( 2 P0 d0^{-1}(b P0) - P+ d-^{-1}(b P-) - P- d+^{-1}(b P+) ) ),
/// P0 = z^{-(g+1)} f+ f-, P+- = z^{-(g+1)} f+-^2, with the twisted inverses of
/// weight +-2(g+1). Throws ResidueNotZero if R(a) or R(b) is not negligible.
Complex pairing(const LaurentSeries& a, const LaurentSeries& b, const AsymptoticPair& pair);

/// Residual of the exactness identity (D a) phi_e phi_e' = delta_gamma(x_{e,e'}),
/// measured relative per coefficient over the reliable range.
/// eps, epsPrime in {+1, -1}.
double exactnessCheck(const LaurentSeries& a, int eps, int epsPrime, const AsymptoticPair& pair);

/// 2g x 2g pairing matrix over {r_1..r_g, s_1..s_g}; expected [[0, I], [-I, 0]].
std::vector<std::vector<Complex>> canonicalMatrix(const Polynomial& t, const DeformParams& params,
                                                  int depth);

}  // namespace qad

#endif
