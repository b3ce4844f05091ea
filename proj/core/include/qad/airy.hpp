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

#ifndef QAD_AIRY_HPP
#define QAD_AIRY_HPP

#include "qad/params.hpp"

namespace qad {

/// Ai and Bi by the Maclaurin basis (entire; accurate for |z| <~ 9, which is
/// all the uniform turning-point patches ever request).
struct AiryPair {
    Complex ai;
    Complex bi;
};

AiryPair airy(Complex z);

}  // namespace qad

#endif
