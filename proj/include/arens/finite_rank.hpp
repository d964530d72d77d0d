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
#include <vector>

#include "arens/operators.hpp"

namespace arens {

/// Reduction of an operator with FinDim codomain through the sublattice G
/// generated by its range: G is spanned by pairwise disjoint atoms
/// (sup-norm 1), I is the Riesz isomorphism G -> R^d sending atoms to unit
/// vectors, iso_inv its inverse (atoms as columns), astriction = I o A_1.
struct FiniteRankReduction {
    std::vector<VecElem> atoms;
    RatMatrix iso;        // d x k, row j extracts the coordinate where atom j is 1
    RatMatrix iso_inv;    // k x d, column j = atom j
    RegOperator astriction;
};

/// Sublattice closure of the range samples, atoms via disjointification,
/// the isomorphism onto coordinatewise R^d, and the astriction. Closure
/// iterates pairwise sup/inf rounds until span and sign patterns stabilize
/// (cap `max_rounds`); the result is validated by random lattice-word
/// membership sampling.
FiniteRankReduction finite_rank_reduce(const RegOperator& a, int max_rounds = 32,
                                       int word_samples = 500, std::uint64_t seed = 0xf1fe);

/// Exact membership of v in the linear span of the given vectors.
bool in_span(const std::vector<VecElem>& basis, const VecElem& v);

}  // namespace arens
