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

#include "arens/direct_sum.hpp"

#include "arens/bidual.hpp"
#include "arens/errors.hpp"
#include "arens/multimorphism.hpp"

namespace arens {

DirectSumElem embed_component(const SpaceRef& sum_space, std::size_t k, const VecElem& y) {
    if (sum_space.kind() != SpaceKind::DirectSum)
        throw DomainMismatchError("embed_component: need a direct sum space");
    const auto& comps = sum_space.sum().components;
    if (k >= comps.size()) throw DomainMismatchError("embed_component: component out of range");
    if (static_cast<int>(y.dim()) != comps[k])
        throw DomainMismatchError("embed_component: block shape mismatch");
    DirectSumElem z;
    z.blocks.reserve(comps.size());
    for (std::size_t j = 0; j < comps.size(); ++j)
        z.blocks.emplace_back(static_cast<std::size_t>(comps[j]));
    z.blocks[k] = y;
    return z;
}

VecElem project_component(const SpaceRef& sum_space, std::size_t k, const DirectSumElem& z) {
    sum_space.require(Element(z), "project_component");
    return z.blocks[k];
}

// ---------------------------------------------------------------- SumDuality

SumDuality::SumDuality(SpaceRef sum_primal) : primal_(std::move(sum_primal)) {
    if (primal_.kind() != SpaceKind::DirectSum || primal_.role() != Role::Primal)
        throw DomainMismatchError("SumDuality: need a primal direct sum space");
}

SpaceRef SumDuality::dual_sum_space() const {
    return primal_.dual_model().with_role(Role::Primal);
}

SpaceRef SumDuality::bidual_sum_space() const {
    return primal_.bidual_model().with_role(Role::Primal);
}

Element SumDuality::transport(const Element& x, const SpaceRef& from, const SpaceRef& to) const {
    from.require(x, "SumDuality");
    to.require(x, "SumDuality(target)");
    return x;
}

Element SumDuality::psi1(const Element& x) const {
    return transport(x, dual_sum_space(), primal_.dual_model());
}

Element SumDuality::psi1_inv(const Element& x) const {
    return transport(x, primal_.dual_model(), dual_sum_space());
}

Element SumDuality::psi2(const Element& x) const {
    return transport(x, bidual_sum_space(), dual_sum_space().dual_model());
}

Element SumDuality::psi2_inv(const Element& x) const {
    return transport(x, dual_sum_space().dual_model(), bidual_sum_space());
}

Element SumDuality::psi3(const Element& x) const {
    return transport(x, dual_sum_space().dual_model(), primal_.bidual_model());
}

Element SumDuality::psi3_inv(const Element& x) const {
    return transport(x, primal_.bidual_model(), dual_sum_space().dual_model());
}

Element SumDuality::psi(const Element& x) const { return psi2_inv(psi3_inv(x)); }

Element SumDuality::psi_inv(const Element& x) const { return psi3(psi2(x)); }

// -------------------------------------------------------------------- checks

LinMap band_project(const SpaceRef& space, const std::vector<int>& band) {
    if (space.kind() != SpaceKind::FinDim)
        throw DomainMismatchError("band_project: FinDim bands only");
    return LinMap::band_projection(space.dim(), band);
}

CheckVerdict check_band_projection(const RegOperator& a, const std::vector<int>& band,
                                   int budget, std::uint64_t seed) {
    CheckVerdict verdict;
    const LinMap pi = band_project(a.codomain(), band);

    // idempotent, positive, hom
    const auto n = static_cast<std::size_t>(a.codomain().dim());
    for (std::size_t i = 0; i < n; ++i) {
        const Element e = VecElem::unit(n, i);
        if (!elem_eq(pi.apply(pi.apply(e)), pi.apply(e))) {
            verdict.holds = false;
            verdict.witness = Witness{"band projection is not idempotent", {}};
            return verdict;
        }
    }
    if (!pi.is_hom() || !pi.is_positive()) {
        verdict.holds = false;
        verdict.witness = Witness{"band projection is not a positive hom", {}};
        return verdict;
    }

    const MultiVerdict before = is_multimorphism(a, budget, seed);
    const MultiVerdict after = is_multimorphism(compose_hom(pi, a), budget, seed);
    verdict.cases = 2;
    if (before.yes && !after.yes) {
        verdict.holds = false;
        Witness w;
        w.what = "band projection destroyed the multimorphism verdict";
        if (after.witness)
            for (std::size_t r = 0; r < after.witness->size(); ++r)
                w.data.emplace_back("x_" + std::to_string(r + 1),
                                    to_string((*after.witness)[r]));
        verdict.witness = std::move(w);
    }
    return verdict;
}

CheckVerdict check_sum_duality(const SpaceRef& sum, int samples, std::uint64_t seed) {
    CheckVerdict verdict;
    SumDuality duality(sum);
    Prng rng(seed);
    const auto& comps = sum.sum().components;
    auto random_blocks = [&]() {
        DirectSumElem e;
        e.blocks.reserve(comps.size());
        for (int nc : comps) e.blocks.push_back(rng.vec(nc));
        return Element(e);
    };
    for (int s = 0; s < samples; ++s) {
        const Element x = random_blocks();
        ++verdict.cases;
        const bool round_trips =
            elem_eq(duality.psi1_inv(duality.psi1(x)), x) &&
            elem_eq(duality.psi2_inv(duality.psi2(x)), x) &&
            elem_eq(duality.psi_inv(duality.psi(x)), x);
        const bool moduli = elem_eq(duality.psi(elem_abs(x)), elem_abs(duality.psi(x))) &&
                            elem_eq(duality.psi1(elem_abs(x)), elem_abs(duality.psi1(x)));
        const bool order = !elem_leq(zero_like(x), x) ||
                           elem_leq(zero_like(x), duality.psi(x));
        if (!(round_trips && moduli && order)) {
            verdict.holds = false;
            if (!verdict.witness) {
                Witness w;
                w.what = "sum duality maps are not lattice isomorphisms";
                w.data.emplace_back("x", to_string(x));
                verdict.witness = std::move(w);
            }
        }
    }
    return verdict;
}

CheckVerdict transport_check(const RegOperator& a, const Permutation& rho, int samples,
                             std::uint64_t seed) {
    CheckVerdict verdict;
    if (a.codomain().kind() != SpaceKind::DirectSum)
        throw DomainMismatchError("transport_check: codomain must be a direct sum");
    SumDuality duality(a.codomain());
    const auto& comps = a.codomain().sum().components;

    ExtendedOp ext(a, rho);
    std::vector<std::unique_ptr<ExtendedOp>> comp_exts;
    for (std::size_t k = 0; k < comps.size(); ++k)
        comp_exts.push_back(std::make_unique<ExtendedOp>(
            compose_hom(LinMap::sum_projection(a.codomain().sum(), k), a), rho));

    const bool multimorphism = is_multimorphism(a, 50, seed).yes;
    auto grid = generator_grid(a, 4, 64, samples, seed);
    for (const auto& tuple : grid) {
        const Element transported = duality.psi(ext.value_element(tuple));
        const auto& blocks = std::get<DirectSumElem>(transported).blocks;
        ++verdict.cases;
        bool ok = true;
        for (std::size_t k = 0; k < comps.size() && ok; ++k) {
            const Element comp_val = comp_exts[k]->value_element(tuple);
            ok = elem_eq(Element(blocks[k]), comp_val);
        }
        if (ok && multimorphism) {
            // modulus transport: |psi o AR(A)(x'')| = (AR(pi_n o A)(|x''|))_n
            std::vector<Element> abs_args;
            abs_args.reserve(tuple.size());
            for (const auto& x : tuple) abs_args.push_back(elem_abs(x));
            const Element lhs = elem_abs(transported);
            const auto& lhs_blocks = std::get<DirectSumElem>(lhs).blocks;
            for (std::size_t k = 0; k < comps.size() && ok; ++k) {
                const Element comp_abs = comp_exts[k]->value_element(abs_args);
                ok = elem_eq(Element(lhs_blocks[k]), comp_abs);
            }
        }
        if (!ok) {
            verdict.holds = false;
            if (!verdict.witness) {
                Witness w;
                w.what = "psi transport identity failed";
                for (std::size_t r = 0; r < tuple.size(); ++r)
                    w.data.emplace_back("x''_" + std::to_string(r + 1), to_string(tuple[r]));
                verdict.witness = std::move(w);
            }
        }
    }
    return verdict;
}

}  // namespace arens
