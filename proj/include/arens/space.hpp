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

#include <string>
#include <vector>

#include "arens/elements.hpp"
#include "arens/rational.hpp"

namespace arens {

enum class SpaceKind { FinDim, SeqL1, SeqC, DirectSum };
enum class Role { Primal, DualModel, BidualModel };

/// Finite direct sum of FinDim lattices. The exponent is order-inert at desk
/// scale (finitely many components) and carried for interface fidelity; mode
/// transitions under duality are p -> p/(p-1), zero -> 1, 1 -> inf.
struct DirectSumDesc {
    enum class Mode { P, Zero, Inf };
    Mode mode = Mode::P;
    Rational p = Rational(2);
    std::vector<int> components;
    friend bool operator==(const DirectSumDesc&, const DirectSumDesc&) = default;
};

class SpaceRef {
public:
    static SpaceRef fin_dim(int n, Role role = Role::Primal);
    static SpaceRef seq_l1(Role role = Role::Primal);
    static SpaceRef seq_c(Role role = Role::Primal);
    static SpaceRef direct_sum(DirectSumDesc desc, Role role = Role::Primal);

    [[nodiscard]] SpaceKind kind() const { return kind_; }
    [[nodiscard]] Role role() const { return role_; }
    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] const DirectSumDesc& sum() const { return sum_; }

    [[nodiscard]] SpaceRef with_role(Role role) const;
    /// Model of the order dual (role advances Primal -> DualModel -> BidualModel).
    [[nodiscard]] SpaceRef dual_model() const;
    [[nodiscard]] SpaceRef bidual_model() const { return dual_model().dual_model(); }

    /// True when the element's representation matches this space and role.
    [[nodiscard]] bool accepts(const Element& x) const;
    void require(const Element& x, const char* what) const;

    [[nodiscard]] Element zero() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const SpaceRef&, const SpaceRef&) = default;

private:
    SpaceKind kind_ = SpaceKind::FinDim;
    Role role_ = Role::Primal;
    int dim_ = 1;          // FinDim only
    DirectSumDesc sum_;    // DirectSum only
};

}  // namespace arens
