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

#include "arens/elements.hpp"
#include "arens/space.hpp"

namespace arens {

/// Riesz operations of a pair, all at once.
struct LatticeOpsResult {
    Element sup;
    Element inf;
    Element abs_x;
    Element pos_x;
    Element neg_x;
};

LatticeOpsResult lattice_ops(const Element& x, const Element& y, const SpaceRef& space);

/// x <= y in the coordinatewise order of `space`.
bool order_leq(const Element& x, const Element& y, const SpaceRef& space);

/// Duality evaluation <f, x> with f in the dual model of `space` and x primal.
Rational pairing(const Element& f, const Element& x, const SpaceRef& space);

}  // namespace arens
