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

#include "arens/lattice.hpp"

#include "arens/errors.hpp"

namespace arens {

LatticeOpsResult lattice_ops(const Element& x, const Element& y, const SpaceRef& space) {
    space.require(x, "lattice_ops");
    space.require(y, "lattice_ops");
    return LatticeOpsResult{elem_sup(x, y), elem_inf(x, y), elem_abs(x), elem_pos(x),
                            elem_neg(x)};
}

bool order_leq(const Element& x, const Element& y, const SpaceRef& space) {
    space.require(x, "order_leq");
    space.require(y, "order_leq");
    return elem_leq(x, y);
}

Rational pairing(const Element& f, const Element& x, const SpaceRef& space) {
    if (space.role() != Role::Primal)
        throw DomainMismatchError("pairing: space must be given in its primal role");
    space.dual_model().require(f, "pairing(f)");
    space.require(x, "pairing(x)");
    switch (space.kind()) {
        case SpaceKind::FinDim:
            return dot(std::get<VecElem>(f), std::get<VecElem>(x));
        case SpaceKind::SeqL1: {
            const auto& fe = std::get<EvConstSeq>(f);
            const auto& xs = std::get<FinSupSeq>(x);
            Rational s;
            for (const auto& [i, v] : xs.terms()) s += fe.at(i) * v;
            return s;
        }
        case SpaceKind::SeqC: {
            const auto& fd = std::get<CDualElem>(f);
            const auto& xt = std::get<EvConstSeq>(x);
            Rational s = fd.b * xt.tail();
            for (const auto& [i, v] : fd.a.terms()) s += v * xt.at(i);
            return s;
        }
        case SpaceKind::DirectSum: {
            const auto& fb = std::get<DirectSumElem>(f);
            const auto& xb = std::get<DirectSumElem>(x);
            Rational s;
            for (std::size_t k = 0; k < xb.blocks.size(); ++k)
                s += dot(fb.blocks[k], xb.blocks[k]);
            return s;
        }
    }
    throw std::logic_error("pairing: unreachable");
}

}  // namespace arens
