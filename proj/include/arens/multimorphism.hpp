/*
 * Copyright 2026 the arens-workbench authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arens/operators.hpp"

namespace arens {

struct MultiVerdict {
    bool yes = false;
    /// Arguments with |A(x)| != A(|x|) when the verdict is no.
    std::optional<std::vector<Element>> witness;
};

/// Does |A(x_1..x_m)| = A(|x_1|..|x_m|) hold for all arguments? Structural
/// fast paths (one nonnegative entry per output slice for tensors, rule
/// tables for the catalog) are always cross-validated definitionally:
/// exhaustive sign patterns over the support coordinates plus `budget`
/// seeded random tuples. A disagreement between the certificate and the
/// definitional check is a hard error.
MultiVerdict is_multimorphism(const RegOperator& a, int budget = 200,
                              std::uint64_t seed = 0xa11ce);

/// |A(x)| == A(|x|) at one argument tuple.
bool multimorphism_identity_at(const RegOperator& a, const std::vector<Element>& args);

/// Riesz homomorphism factors phi_i with B = phi_1 x ... x phi_m for a
/// scalar-valued multimorphism tensor. The scalar sits entirely on phi_1;
/// the zero operator factors as all-zero functionals.
std::vector<VecElem> kusraev_factor(const RegOperator& b);

}  // namespace arens
