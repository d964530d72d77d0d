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

#include "arens/multimorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "arens/errors.hpp"
#include "arens/prng.hpp"

namespace arens {

namespace {

using FiniteRank = RegOperator::FiniteRank;

bool functional_is_hom(const SpaceRef& domain, const Element& f) {
    return LinMap::dual_functional(domain, f).is_hom();
}

Element random_primal(Prng& rng, const SpaceRef& space, int max_index) {
    switch (space.kind()) {
        case SpaceKind::FinDim: return rng.vec(space.dim());
        case SpaceKind::SeqL1: return rng.finsup(max_index);
        case SpaceKind::SeqC: return rng.evconst(max_index);
        default: throw DomainMismatchError("random_primal: unsupported space");
    }
}

std::vector<Element> abs_args(const std::vector<Element>& args) {
    std::vector<Element> out;
    out.reserve(args.size());
    for (const auto& x : args) out.push_back(elem_abs(x));
    return out;
}

/// The coordinates (slot, index) referenced by the tensor's nonzero entries.
std::vector<std::pair<int, int>> support_coordinates(const TensorOp& t) {
    std::set<std::pair<int, int>> coords;
    for (const auto& term : t.terms())
        for (int r = 1; r <= t.arity(); ++r)
            coords.emplace(r, term.idx[static_cast<std::size_t>(r) - 1]);
    return {coords.begin(), coords.end()};
}

/// Exhaustive sign-pattern search over the support coordinates: every listed
/// coordinate takes a value in `values`, all others stay 0. Returns a witness
/// tuple or nullopt.
std::optional<std::vector<Element>> search_tensor_patterns(
    const RegOperator& a, const TensorOp& t, const std::vector<Rational>& values,
    std::size_t budget_states) {
    const auto coords = support_coordinates(t);
    const std::size_t n = coords.size();
    double states = 1;
    for (std::size_t i = 0; i < n; ++i) states *= static_cast<double>(values.size());
    if (states > static_cast<double>(budget_states)) return std::nullopt;

    std::vector<std::size_t> digit(n, 0);
    while (true) {
        std::vector<Element> args;
        args.reserve(static_cast<std::size_t>(t.arity()));
        for (int r = 1; r <= t.arity(); ++r)
            args.emplace_back(
                VecElem(static_cast<std::size_t>(t.dims()[static_cast<std::size_t>(r) - 1])));
        for (std::size_t i = 0; i < n; ++i) {
            auto& v = std::get<VecElem>(args[static_cast<std::size_t>(coords[i].first) - 1]);
            v[static_cast<std::size_t>(coords[i].second) - 1] = values[digit[i]];
        }
        if (!multimorphism_identity_at(a, args)) return args;
        std::size_t i = 0;
        while (i < n && ++digit[i] == values.size()) digit[i++] = 0;
        if (i == n) return std::nullopt;
    }
}

/// Structural certificate: for each output coordinate, the slice has at most
/// one nonzero entry and it is nonnegative.
bool tensor_certificate(const TensorOp& t) {
    std::map<int, int> per_output;
    for (const auto& term : t.terms()) {
        if (term.value.sign() < 0) return false;
        if (++per_output[term.j] > 1) return false;
    }
    return true;
}

bool rule_yes(const RegOperator& a);

bool rule_yes_rep(const RegOperator& a, const RegOperator::Rep& rep) {
    return std::visit(
        [&](const auto& r) -> bool {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, TensorOp>) {
                return tensor_certificate(r);
            } else if constexpr (std::is_same_v<T, RegOperator::CoordProduct>) {
                return true;  // |xy| = |x||y| coordinatewise
            } else if constexpr (std::is_same_v<T, RegOperator::UpperTriangular>) {
                return false;
            } else if constexpr (std::is_same_v<T, FiniteRank>) {
                if (is_zero_elem(r.v)) return true;
                for (const auto& f : r.factors)
                    if (is_zero_elem(f)) return true;
                for (std::size_t k = 0; k < r.factors.size(); ++k)
                    if (!functional_is_hom(a.domains()[k], r.factors[k])) return false;
                return elem_leq(zero_like(r.v), r.v);
            } else if constexpr (std::is_same_v<T, RegOperator::WeightedDiagonal>) {
                return leq(EvConstSeq{}, r.weights);
            } else if constexpr (std::is_same_v<T, RegOperator::HomComposite>) {
                return r.u.is_hom() && rule_yes(*r.inner);
            } else if constexpr (std::is_same_v<T, RegOperator::SumTuple>) {
                for (const auto& comp : r.components)
                    if (!rule_yes(comp)) return false;
                return true;
            } else {
                // no rule for linear combinations; they are not catalog
                // operators and never reach the certified path
                return false;
            }
        },
        rep);
}

bool rule_yes(const RegOperator& a) { return rule_yes_rep(a, a.rep()); }

/// Small deterministic argument family per slot: units, differences of
/// units, and (for the c model) constants. Differences expose every
/// non-atomic functional at desk scale.
std::vector<Element> deterministic_candidates(const SpaceRef& space, int max_index) {
    std::vector<Element> out;
    switch (space.kind()) {
        case SpaceKind::FinDim: {
            const auto n = static_cast<std::size_t>(space.dim());
            for (std::size_t i = 0; i < n; ++i) out.emplace_back(VecElem::unit(n, i));
            for (std::size_t i = 0; i + 1 < n; ++i)
                out.emplace_back(VecElem::unit(n, i) - VecElem::unit(n, i + 1));
            break;
        }
        case SpaceKind::SeqL1: {
            for (int i = 1; i <= max_index; ++i) out.emplace_back(FinSupSeq::unit(i));
            for (int i = 1; i < max_index; ++i)
                out.emplace_back(FinSupSeq::unit(i) - FinSupSeq::unit(i + 1));
            out.emplace_back(FinSupSeq::unit(1) - FinSupSeq::unit(max_index));
            break;
        }
        case SpaceKind::SeqC: {
            for (int i = 1; i <= std::min(max_index, 4); ++i)
                out.emplace_back(EvConstSeq::unit(i));
            out.emplace_back(EvConstSeq::constant(Rational(1)));
            out.emplace_back(EvConstSeq::unit(1) - EvConstSeq::unit(2));
            out.emplace_back(EvConstSeq::constant(Rational(1)) -
                             Rational(2) * EvConstSeq::unit(1));
            out.emplace_back(EvConstSeq({Rational(1)}, Rational(-1)));
            break;
        }
        default: break;
    }
    return out;
}

/// Targeted witness constructions plus seeded random tuples; first violation
/// wins.
std::optional<std::vector<Element>> definitional_search(const RegOperator& a, int budget,
                                                        std::uint64_t seed) {
    if (const auto* t = std::get_if<TensorOp>(&a.rep())) {
        for (const auto& term : t->terms()) {
            if (term.value.sign() < 0) {
                std::vector<Element> args;
                for (int r = 1; r <= t->arity(); ++r)
                    args.emplace_back(VecElem::unit(
                        static_cast<std::size_t>(t->dims()[static_cast<std::size_t>(r) - 1]),
                        static_cast<std::size_t>(term.idx[static_cast<std::size_t>(r) - 1]) - 1));
                if (!multimorphism_identity_at(a, args)) return args;
            }
        }
        if (auto w =
                search_tensor_patterns(a, *t, {Rational(0), Rational(1), Rational(-1)}, 30000))
            return w;
        if (auto w = search_tensor_patterns(a, *t, {Rational(1), Rational(-1)}, 30000)) return w;
    }

    if (std::holds_alternative<RegOperator::UpperTriangular>(a.rep())) {
        std::vector<Element> args{Element(FinSupSeq({{1, Rational(1)}, {2, Rational(-1)}})),
                                  Element(FinSupSeq::unit(2))};
        if (!multimorphism_identity_at(a, args)) return args;
    }

    const int max_index = a.op_radius() + 4;

    // cartesian sweep over the deterministic candidate family
    std::vector<std::vector<Element>> slots;
    slots.reserve(static_cast<std::size_t>(a.arity()));
    for (const SpaceRef& dom : a.domains())
        slots.push_back(deterministic_candidates(dom, std::min(max_index, 6)));
    std::size_t total = 1;
    for (const auto& s : slots) total *= std::max<std::size_t>(s.size(), 1);
    if (!slots.empty() && total <= 4096) {
        std::vector<std::size_t> digit(slots.size(), 0);
        bool done = slots.front().empty();
        while (!done) {
            std::vector<Element> args;
            args.reserve(slots.size());
            for (std::size_t r = 0; r < slots.size(); ++r) args.push_back(slots[r][digit[r]]);
            if (!multimorphism_identity_at(a, args)) return args;
            std::size_t r = 0;
            while (r < slots.size() && ++digit[r] == slots[r].size()) digit[r++] = 0;
            done = (r == slots.size());
        }
    }

    Prng rng(seed);
    for (int k = 0; k < budget; ++k) {
        std::vector<Element> args;
        args.reserve(static_cast<std::size_t>(a.arity()));
        for (const SpaceRef& dom : a.domains()) args.push_back(random_primal(rng, dom, max_index));
        if (!multimorphism_identity_at(a, args)) return args;
    }
    return std::nullopt;
}

}  // namespace

bool multimorphism_identity_at(const RegOperator& a, const std::vector<Element>& args) {
    const Element lhs = elem_abs(a.evaluate(args));
    const Element rhs = a.evaluate(abs_args(args));
    return elem_eq(lhs, rhs);
}

MultiVerdict is_multimorphism(const RegOperator& a, int budget, std::uint64_t seed) {
    if (std::holds_alternative<RegOperator::LinComb>(a.rep()))
        throw UnsupportedError("is_multimorphism: lin_comb representations carry no certificate");
    const bool certified = rule_yes(a);
    auto witness = definitional_search(a, budget, seed);

    if (certified && witness)
        throw InternalInvariantViolation(
            "is_multimorphism: certificate says yes but a definitional witness exists");
    if (!certified && !witness)
        throw InternalInvariantViolation(
            "is_multimorphism: certificate says no but no definitional witness was found");

    MultiVerdict v;
    v.yes = certified;
    v.witness = std::move(witness);
    return v;
}

std::vector<VecElem> kusraev_factor(const RegOperator& b) {
    const auto* t = std::get_if<TensorOp>(&b.rep());
    if (t == nullptr || t->codomain_dim() != 1)
        throw NotMultimorphismError("kusraev_factor: need a scalar-valued tensor");
    if (!is_multimorphism(b).yes)
        throw NotMultimorphismError("kusraev_factor: operator is not a multimorphism");

    const int m = t->arity();
    std::vector<VecElem> factors;
    factors.reserve(static_cast<std::size_t>(m));
    if (t->terms().empty()) {
        for (int r = 1; r <= m; ++r)
            factors.emplace_back(
                static_cast<std::size_t>(t->dims()[static_cast<std::size_t>(r) - 1]));
        return factors;
    }

    // multimorphism with scalar codomain: exactly one entry, nonnegative
    const TensorOp::Term& term = t->terms().front();
    for (int r = 1; r <= m; ++r) {
        VecElem phi(static_cast<std::size_t>(t->dims()[static_cast<std::size_t>(r) - 1]));
        phi[static_cast<std::size_t>(term.idx[static_cast<std::size_t>(r) - 1]) - 1] =
            (r == 1) ? term.value : Rational(1);
        factors.push_back(std::move(phi));
    }

    // exact reconstruction over all basis tuples
    std::vector<int> idx(static_cast<std::size_t>(m), 1);
    while (true) {
        Rational prod(1);
        for (int r = 1; r <= m; ++r)
            prod *= factors[static_cast<std::size_t>(r) - 1]
                           [static_cast<std::size_t>(idx[static_cast<std::size_t>(r) - 1]) - 1];
        if (prod != t->entry(idx, 1))
            throw InternalInvariantViolation("kusraev_factor: reconstruction mismatch");
        int r = 0;
        while (r < m &&
               ++idx[static_cast<std::size_t>(r)] > t->dims()[static_cast<std::size_t>(r)]) {
            idx[static_cast<std::size_t>(r)] = 1;
            ++r;
        }
        if (r == m) break;
    }
    return factors;
}

}  // namespace arens
