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

#ifndef QAD_ERRORS_HPP
#define QAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qad {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define QAD_DEFINE_ERROR(Name)                                      \
    struct Name : Error {                                           \
        explicit Name(const std::string& what = #Name) : Error(what) {} \
    }

// series layer
QAD_DEFINE_ERROR(DegenerateMultiplier);
QAD_DEFINE_ERROR(UnreliableFloor);
QAD_DEFINE_ERROR(NonzeroConstantTerm);
QAD_DEFINE_ERROR(Resonance);

// deform layer
QAD_DEFINE_ERROR(NotMonic);
QAD_DEFINE_ERROR(ReconstructionMismatch);
QAD_DEFINE_ERROR(ResidueNotZero);
QAD_DEFINE_ERROR(IndexOutOfRange);

// curve layer
QAD_DEFINE_ERROR(ComplexBranchPoint);
QAD_DEFINE_ERROR(InterlacingViolation);
QAD_DEFINE_ERROR(NearDegenerate);
QAD_DEFINE_ERROR(QuadratureNotConverged);
QAD_DEFINE_ERROR(BranchTrackingLost);
QAD_DEFINE_ERROR(HasResidue);

// wkb layer
QAD_DEFINE_ERROR(OnCutWithoutBank);
QAD_DEFINE_ERROR(MonotonicityViolation);
QAD_DEFINE_ERROR(BasePathObstructed);

// quantum layer
QAD_DEFINE_ERROR(ConvergenceWindowViolated);
QAD_DEFINE_ERROR(GammaWindowViolated);

#undef QAD_DEFINE_ERROR

}  // namespace qad

#endif
