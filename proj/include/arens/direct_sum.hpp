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

#include "arens/extension.hpp"
#include "arens/operators.hpp"

namespace arens {

/// i_k(y) = (0, ..., 0, y, 0, ...); pi_k is its one-sided inverse. Both are
/// lattice homomorphisms. k is 0-based.
DirectSumElem embed_component(const SpaceRef& sum_space, std::size_t k, const VecElem& y);
VecElem project_component(const SpaceRef& sum_space, std::size_t k, const DirectSumElem& z);

/// The duality chain of a finite direct sum. All spaces share the blockwise
/// representation at desk scale (components are FinDim, hence reflexive);
/// the maps are exercised as explicit role transports with exact
/// domain checks. For mode p: psi1 : (sum F*)_q -> (sum F)_p^*,
/// psi2 : (sum F**)_p -> (sum F*)_q^*, psi3 = (psi1^{-1})^*,
/// psi = psi2^{-1} o psi3^{-1} : (sum F)_p^{**} -> (sum F**)_p.
/// For mode zero the analogous chain is gamma1/gamma2 with exponents 1, inf.
class SumDuality {
public:
    explicit SumDuality(SpaceRef sum_primal);

    [[nodiscard]] const SpaceRef& primal() const { return primal_; }
    /// (sum F*)_dual-mode as a primal space in its own right.
    [[nodiscard]] SpaceRef dual_sum_space() const;
    /// (sum F**)_bidual-mode as a primal space.
    [[nodiscard]] SpaceRef bidual_sum_space() const;

    [[nodiscard]] Element psi1(const Element& dual_sum_elem) const;
    [[nodiscard]] Element psi1_inv(const Element& dual_model_elem) const;
    [[nodiscard]] Element psi2(const Element& bidual_sum_elem) const;
    [[nodiscard]] Element psi2_inv(const Element& dual_sum_dual_elem) const;
    [[nodiscard]] Element psi3(const Element& dual_sum_dual_elem) const;
    [[nodiscard]] Element psi3_inv(const Element& bidual_model_elem) const;
    /// psi = psi2^{-1} o psi3^{-1}: bidual model of the sum -> sum of biduals.
    [[nodiscard]] Element psi(const Element& bidual_model_elem) const;
    [[nodiscard]] Element psi_inv(const Element& bidual_sum_elem) const;

private:
    Element transport(const Element& x, const SpaceRef& from, const SpaceRef& to) const;
    SpaceRef primal_;
};

/// Band projection onto a set of coordinate atoms of a FinDim lattice.
LinMap band_project(const SpaceRef& space, const std::vector<int>& band);

/// pi o A keeps the multimorphism verdict (definitional re-check).
CheckVerdict check_band_projection(const RegOperator& a, const std::vector<int>& band,
                                   int budget = 100, std::uint64_t seed = 0x9230);

/// psi and gamma maps are mutually inverse lattice isomorphisms: round trips
/// and moduli on random elements.
CheckVerdict check_sum_duality(const SpaceRef& sum, int samples = 100,
                               std::uint64_t seed = 0x9231);

/// Blockwise transport of the extension through psi:
/// (psi o AR(A))(args) = (AR(pi_n o A)(args))_n exactly on the grid, then the
/// modulus transport for multimorphisms.
CheckVerdict transport_check(const RegOperator& a, const Permutation& rho, int samples = 32,
                             std::uint64_t seed = 0x9232);

}  // namespace arens
