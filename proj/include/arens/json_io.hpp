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

#include <json.hpp>

#include "arens/extension.hpp"
#include "arens/operators.hpp"

namespace arens {

using Json = nlohmann::json;

/// Rationals travel as [numerator, denominator] integer pairs; never
/// decimals.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json element_to_json(const Element& x);
Element element_from_json(const Json& j);

Json space_to_json(const SpaceRef& s);
SpaceRef space_from_json(const Json& j);

Json linmap_to_json(const LinMap& u);
LinMap linmap_from_json(const Json& j);

Json operator_to_json(const RegOperator& a);
RegOperator operator_from_json(const Json& j);

Json witness_to_json(const Witness& w);

}  // namespace arens
