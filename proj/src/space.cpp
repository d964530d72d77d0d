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

#include "arens/space.hpp"

#include <stdexcept>

#include "arens/errors.hpp"

namespace arens {

SpaceRef SpaceRef::fin_dim(int n, Role role) {
    if (n < 1) throw std::domain_error("FinDim dimension must be >= 1");
    SpaceRef s;
    s.kind_ = SpaceKind::FinDim;
    s.dim_ = n;
    s.role_ = role;
    return s;
}

SpaceRef SpaceRef::seq_l1(Role role) {
    SpaceRef s;
    s.kind_ = SpaceKind::SeqL1;
    s.role_ = role;
    return s;
}

SpaceRef SpaceRef::seq_c(Role role) {
    SpaceRef s;
    s.kind_ = SpaceKind::SeqC;
    s.role_ = role;
    return s;
}

SpaceRef SpaceRef::direct_sum(DirectSumDesc desc, Role role) {
    if (desc.components.empty()) throw std::domain_error("direct sum needs components");
    for (int n : desc.components)
        if (n < 1) throw std::domain_error("direct sum component dims must be >= 1");
    if (desc.mode == DirectSumDesc::Mode::P && desc.p < Rational(1))
        throw std::domain_error("direct sum exponent must be >= 1");
    SpaceRef s;
    s.kind_ = SpaceKind::DirectSum;
    s.sum_ = std::move(desc);
    s.role_ = role;
    return s;
}

SpaceRef SpaceRef::with_role(Role role) const {
    SpaceRef s = *this;
    s.role_ = role;
    return s;
}

SpaceRef SpaceRef::dual_model() const {
    Role next;
    switch (role_) {
        case Role::Primal: next = Role::DualModel; break;
        case Role::DualModel: next = Role::BidualModel; break;
        default:
            throw DomainMismatchError("dual_model: bidual models are the end of the chain");
    }
    SpaceRef s = with_role(next);
    if (kind_ == SpaceKind::DirectSum) {
        switch (sum_.mode) {
            case DirectSumDesc::Mode::P:
                if (sum_.p == Rational(1)) {
                    s.sum_.mode = DirectSumDesc::Mode::Inf;
                } else {
                    s.sum_.p = sum_.p / (sum_.p - Rational(1));
                }
                break;
            case DirectSumDesc::Mode::Zero:
                s.sum_.mode = DirectSumDesc::Mode::P;
                s.sum_.p = Rational(1);
                break;
            case DirectSumDesc::Mode::Inf:
                throw DomainMismatchError("dual_model: sum mode inf has no modeled dual");
        }
    }
    return s;
}

bool SpaceRef::accepts(const Element& x) const {
    switch (kind_) {
        case SpaceKind::FinDim: {
            const auto* v = std::get_if<VecElem>(&x);
            return v != nullptr && static_cast<int>(v->dim()) == dim_;
        }
        case SpaceKind::SeqL1:
            switch (role_) {
                case Role::Primal: return std::holds_alternative<FinSupSeq>(x);
                case Role::DualModel: return std::holds_alternative<EvConstSeq>(x);
                case Role::BidualModel: return std::holds_alternative<L1BidualElem>(x);
            }
            return false;
        case SpaceKind::SeqC:
            switch (role_) {
                case Role::Primal: return std::holds_alternative<EvConstSeq>(x);
                case Role::DualModel: return std::holds_alternative<CDualElem>(x);
                case Role::BidualModel: return std::holds_alternative<CBidualElem>(x);
            }
            return false;
        case SpaceKind::DirectSum: {
            const auto* d = std::get_if<DirectSumElem>(&x);
            if (d == nullptr || d->blocks.size() != sum_.components.size()) return false;
            for (std::size_t k = 0; k < d->blocks.size(); ++k)
                if (static_cast<int>(d->blocks[k].dim()) != sum_.components[k]) return false;
            return true;
        }
    }
    return false;
}

void SpaceRef::require(const Element& x, const char* what) const {
    if (!accepts(x))
        throw DomainMismatchError(std::string(what) + ": element does not belong to " + str());
}

Element SpaceRef::zero() const {
    switch (kind_) {
        case SpaceKind::FinDim: return VecElem(static_cast<std::size_t>(dim_));
        case SpaceKind::SeqL1:
            switch (role_) {
                case Role::Primal: return FinSupSeq{};
                case Role::DualModel: return EvConstSeq{};
                case Role::BidualModel: return L1BidualElem{};
            }
            break;
        case SpaceKind::SeqC:
            switch (role_) {
                case Role::Primal: return EvConstSeq{};
                case Role::DualModel: return CDualElem{};
                case Role::BidualModel: return CBidualElem{};
            }
            break;
        case SpaceKind::DirectSum: {
            DirectSumElem z;
            z.blocks.reserve(sum_.components.size());
            for (int n : sum_.components) z.blocks.emplace_back(static_cast<std::size_t>(n));
            return z;
        }
    }
    throw std::logic_error("SpaceRef::zero: unreachable");
}

std::string SpaceRef::str() const {
    std::string role;
    switch (role_) {
        case Role::Primal: role = ""; break;
        case Role::DualModel: role = "~"; break;
        case Role::BidualModel: role = "~~"; break;
    }
    switch (kind_) {
        case SpaceKind::FinDim: return "R^" + std::to_string(dim_) + role;
        case SpaceKind::SeqL1: return "l1" + role;
        case SpaceKind::SeqC: return "c" + role;
        case SpaceKind::DirectSum: {
            std::string s = "sum[";
            for (std::size_t k = 0; k < sum_.components.size(); ++k)
                s += (k ? "," : "") + std::to_string(sum_.components[k]);
            s += "]_";
            switch (sum_.mode) {
                case DirectSumDesc::Mode::P: s += sum_.p.str(); break;
                case DirectSumDesc::Mode::Zero: s += "0"; break;
                case DirectSumDesc::Mode::Inf: s += "inf"; break;
            }
            return s + role;
        }
    }
    return "?";
}

}  // namespace arens
