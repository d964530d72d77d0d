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

#include "arens/bidual.hpp"

#include <stdexcept>

#include "arens/errors.hpp"

namespace arens {

Element embed_J(const Element& x, const SpaceRef& space) {
    if (space.role() != Role::Primal)
        throw DomainMismatchError("embed_J: space must be given in its primal role");
    space.require(x, "embed_J");
    switch (space.kind()) {
        case SpaceKind::FinDim:
        case SpaceKind::DirectSum:
            return x;  // reflexive at desk scale
        case SpaceKind::SeqL1:
            return L1BidualElem{std::get<FinSupSeq>(x), Rational(0)};
        case SpaceKind::SeqC: {
            const auto& t = std::get<EvConstSeq>(x);
            return CBidualElem{t.tail(), t};
        }
    }
    throw std::logic_error("embed_J: unreachable");
}

Element model_modulus(const Element& xpp) { return elem_abs(xpp); }

OcSplit classify_order_continuity(const Element& xpp, const SpaceRef& space) {
    if (space.role() != Role::Primal)
        throw DomainMismatchError("classify_order_continuity: give the primal space");
    space.bidual_model().require(xpp, "classify_order_continuity");
    switch (space.kind()) {
        case SpaceKind::FinDim:
        case SpaceKind::DirectSum:
            return OcSplit{xpp, zero_like(xpp)};
        case SpaceKind::SeqL1: {
            const auto& e = std::get<L1BidualElem>(xpp);
            return OcSplit{Element(L1BidualElem{e.a, Rational(0)}),
                           Element(L1BidualElem{FinSupSeq{}, e.mu})};
        }
        case SpaceKind::SeqC: {
            // The unique split whose singular part kills every order
            // continuous dual: oc = J(t), singular mass = beta - tail(t).
            const auto& e = std::get<CBidualElem>(xpp);
            return OcSplit{Element(CBidualElem{e.t.tail(), e.t}),
                           Element(CBidualElem{e.beta - e.t.tail(), EvConstSeq{}})};
        }
    }
    throw std::logic_error("classify_order_continuity: unreachable");
}

Element approximants(const Element& xpp, const SpaceRef& space, int n) {
    if (n < 1) throw std::domain_error("approximants: N >= 1");
    if (space.role() != Role::Primal)
        throw DomainMismatchError("approximants: give the primal space");
    space.bidual_model().require(xpp, "approximants");
    switch (space.kind()) {
        case SpaceKind::FinDim:
        case SpaceKind::DirectSum:
            return xpp;
        case SpaceKind::SeqL1: {
            const auto& e = std::get<L1BidualElem>(xpp);
            if (e.mu.is_zero()) return e.a;
            const int s = e.a.support_bound() + 1;
            return e.a + FinSupSeq::unit(n + s, e.mu);
        }
        case SpaceKind::SeqC: {
            const auto& e = std::get<CBidualElem>(xpp);
            const int len = n + e.t.prefix_len();
            std::vector<Rational> prefix;
            prefix.reserve(static_cast<std::size_t>(len));
            for (int i = 1; i <= len; ++i) prefix.push_back(e.t.at(i));
            return EvConstSeq(std::move(prefix), e.beta);
        }
    }
    throw std::logic_error("approximants: unreachable");
}

Rational bidual_apply(const Element& xpp, const Element& f, const SpaceRef& space) {
    if (space.role() != Role::Primal)
        throw DomainMismatchError("bidual_apply: give the primal space");
    space.bidual_model().require(xpp, "bidual_apply(x'')");
    space.dual_model().require(f, "bidual_apply(f)");
    switch (space.kind()) {
        case SpaceKind::FinDim:
            return dot(std::get<VecElem>(xpp), std::get<VecElem>(f));
        case SpaceKind::SeqL1: {
            const auto& e = std::get<L1BidualElem>(xpp);
            const auto& t = std::get<EvConstSeq>(f);
            Rational s = e.mu * t.tail();
            for (const auto& [i, v] : e.a.terms()) s += v * t.at(i);
            return s;
        }
        case SpaceKind::SeqC: {
            const auto& e = std::get<CBidualElem>(xpp);
            const auto& d = std::get<CDualElem>(f);
            Rational s = e.beta * d.b;
            for (const auto& [i, v] : d.a.terms()) s += e.t.at(i) * v;
            return s;
        }
        case SpaceKind::DirectSum: {
            const auto& e = std::get<DirectSumElem>(xpp);
            const auto& d = std::get<DirectSumElem>(f);
            Rational s;
            for (std::size_t k = 0; k < e.blocks.size(); ++k)
                s += dot(e.blocks[k], d.blocks[k]);
            return s;
        }
    }
    throw std::logic_error("bidual_apply: unreachable");
}

std::vector<Element> dual_generators(const SpaceRef& space, int max_index) {
    std::vector<Element> out;
    switch (space.kind()) {
        case SpaceKind::FinDim:
            for (int i = 0; i < space.dim(); ++i)
                out.emplace_back(VecElem::unit(static_cast<std::size_t>(space.dim()),
                                               static_cast<std::size_t>(i)));
            break;
        case SpaceKind::SeqL1:
            for (int i = 1; i <= max_index; ++i) out.emplace_back(EvConstSeq::unit(i));
            out.emplace_back(EvConstSeq::constant(Rational(1)));
            break;
        case SpaceKind::SeqC:
            out.emplace_back(CDualElem{Rational(1), FinSupSeq{}});  // limit functional
            for (int i = 1; i <= max_index; ++i)
                out.emplace_back(CDualElem{Rational(0), FinSupSeq::unit(i)});
            break;
        case SpaceKind::DirectSum: {
            const auto& comps = space.sum().components;
            for (std::size_t k = 0; k < comps.size(); ++k)
                for (int i = 0; i < comps[k]; ++i) {
                    DirectSumElem f;
                    for (std::size_t j = 0; j < comps.size(); ++j)
                        f.blocks.emplace_back(static_cast<std::size_t>(comps[j]));
                    f.blocks[k] = VecElem::unit(static_cast<std::size_t>(comps[k]),
                                                static_cast<std::size_t>(i));
                    out.emplace_back(std::move(f));
                }
            break;
        }
    }
    return out;
}

std::vector<Element> hom_dual_generators(const SpaceRef& space, int max_index) {
    std::vector<Element> out;
    switch (space.kind()) {
        case SpaceKind::SeqL1:
            // the all-ones functional is not a homomorphism on the l1 model
            for (int i = 1; i <= max_index; ++i) out.emplace_back(EvConstSeq::unit(i));
            break;
        default:
            out = dual_generators(space, max_index);
            break;
    }
    return out;
}

namespace {

VecElem mixed_vec(int n, int which) {
    VecElem v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (which == 0) {
            v[static_cast<std::size_t>(i)] = Rational((i % 2 == 0) ? i + 1 : -(i + 1));
        } else {
            v[static_cast<std::size_t>(i)] = Rational((i % 3) - 1, 2);
        }
    }
    return v;
}

}  // namespace

std::vector<Element> bidual_generators(const SpaceRef& space, int max_index) {
    std::vector<Element> out;
    switch (space.kind()) {
        case SpaceKind::FinDim: {
            const int n = space.dim();
            for (int i = 0; i < n; ++i)
                out.emplace_back(VecElem::unit(static_cast<std::size_t>(n),
                                               static_cast<std::size_t>(i)));
            out.emplace_back(mixed_vec(n, 0));
            out.emplace_back(mixed_vec(n, 1));
            break;
        }
        case SpaceKind::SeqL1: {
            for (int i = 1; i <= max_index; ++i)
                out.emplace_back(L1BidualElem{FinSupSeq::unit(i), Rational(0)});
            out.emplace_back(L1BidualElem{FinSupSeq{}, Rational(1)});  // L
            out.emplace_back(L1BidualElem{
                FinSupSeq({{1, Rational(1)}, {3, Rational(-2)}}), Rational(3)});
            out.emplace_back(L1BidualElem{
                FinSupSeq({{2, Rational(1)}, {5, Rational(1)}}), Rational(-1)});
            break;
        }
        case SpaceKind::SeqC: {
            for (int i = 1; i <= max_index; ++i)
                out.emplace_back(CBidualElem{Rational(0), EvConstSeq::unit(i)});
            out.emplace_back(CBidualElem{Rational(1), EvConstSeq::constant(Rational(1))});
            out.emplace_back(CBidualElem{Rational(1), EvConstSeq{}});  // pure singular mass
            out.emplace_back(CBidualElem{Rational(2), EvConstSeq({Rational(7)}, Rational(1))});
            out.emplace_back(
                CBidualElem{Rational(-1), EvConstSeq({Rational(1), Rational(-1)}, Rational(0))});
            break;
        }
        case SpaceKind::DirectSum: {
            const auto& comps = space.sum().components;
            for (std::size_t k = 0; k < comps.size(); ++k)
                for (int i = 0; i < comps[k]; ++i) {
                    DirectSumElem e;
                    for (std::size_t j = 0; j < comps.size(); ++j)
                        e.blocks.emplace_back(static_cast<std::size_t>(comps[j]));
                    e.blocks[k] = VecElem::unit(static_cast<std::size_t>(comps[k]),
                                                static_cast<std::size_t>(i));
                    out.emplace_back(std::move(e));
                }
            DirectSumElem m0, m1;
            for (std::size_t j = 0; j < comps.size(); ++j) {
                m0.blocks.push_back(mixed_vec(comps[j], 0));
                m1.blocks.push_back(mixed_vec(comps[j], 1));
            }
            out.emplace_back(std::move(m0));
            out.emplace_back(std::move(m1));
            break;
        }
    }
    return out;
}

}  // namespace arens
