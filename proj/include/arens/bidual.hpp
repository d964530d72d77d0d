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

#include <vector>

#include "arens/elements.hpp"
#include "arens/space.hpp"

namespace arens {

/// Canonical embedding J of `space` (given primal) into its bidual model.
/// FinDim: identity. SeqL1: x -> (x, 0). SeqC: x -> (tail(x), x).
Element embed_J(const Element& x, const SpaceRef& space);

/// Modulus of a bidual-model element, componentwise per the model invariants.
Element model_modulus(const Element& xpp);

/// Order-continuous / singular decomposition of a bidual-model element.
struct OcSplit {
    Element oc;
    Element singular;
};
OcSplit classify_order_continuity(const Element& xpp, const SpaceRef& space);

/// N-th member of the stabilizing approximant sequence of x''. For every
/// fixed dual-model f, pairing(f, approximants(x'', N)) equals x''(f) for all
/// N beyond max(support bound, prefix length) + 1.
Element approximants(const Element& xpp, const SpaceRef& space, int n);

/// Evaluate a bidual-model element on a dual-model element, exactly.
Rational bidual_apply(const Element& xpp, const Element& f, const SpaceRef& space);

/// Dual-model generators: coordinate functionals up to max_index plus the
/// singular generator of the model (all-ones for l1, the limit functional
/// for c). These span every pairing a desk-scale check consumes.
std::vector<Element> dual_generators(const SpaceRef& space, int max_index = 6);

/// The subset of dual_generators that are Riesz homomorphisms.
std::vector<Element> hom_dual_generators(const SpaceRef& space, int max_index = 6);

/// Bidual-model grid generators per slot: J(basis) up to max_index, the pure
/// singular elements, and two fixed mixed elements.
std::vector<Element> bidual_generators(const SpaceRef& space, int max_index = 6);

}  // namespace arens
