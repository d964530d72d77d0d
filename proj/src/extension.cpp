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

#include "arens/extension.hpp"

#include <algorithm>
#include <sstream>

#include "arens/bidual.hpp"
#include "arens/errors.hpp"
#include "arens/lattice.hpp"

namespace arens {

// ----------------------------------------------------------------- probing

Element probe_dual_representation(const SpaceRef& space, int bound,
                                  const std::function<Rational(const Element&)>& f) {
    switch (space.kind()) {
        case SpaceKind::FinDim: {
            const auto n = static_cast<std::size_t>(space.dim());
            VecElem out(n);
            for (std::size_t i = 0; i < n; ++i) out[i] = f(VecElem::unit(n, i));
            return out;
        }
        case SpaceKind::SeqL1: {
            std::vector<Rational> c;
            c.reserve(static_cast<std::size_t>(bound) + 3);
            for (int i = 1; i <= bound + 3; ++i) c.push_back(f(FinSupSeq::unit(i)));
            const Rational tail = c[static_cast<std::size_t>(bound)];
            if (c[static_cast<std::size_t>(bound) + 1] != tail ||
                c[static_cast<std::size_t>(bound) + 2] != tail)
                throw NotRepresentableError("l1 slice coefficients did not stabilize");
            c.resize(static_cast<std::size_t>(bound));
            return EvConstSeq(std::move(c), tail);
        }
        case SpaceKind::SeqC: {
            std::vector<std::pair<int, Rational>> terms;
            for (int i = 1; i <= bound + 3; ++i) {
                Rational ai = f(EvConstSeq::unit(i));
                if (i > bound && !ai.is_zero())
                    throw NotRepresentableError("c slice atom coefficients did not vanish");
                if (!ai.is_zero()) terms.emplace_back(i, std::move(ai));
            }
            FinSupSeq a(std::move(terms));
            Rational b = f(EvConstSeq::constant(Rational(1)));
            for (const auto& [i, v] : a.terms()) b -= v;
            // the pure-tail probe must see only the limit mass
            std::vector<Rational> zeros(static_cast<std::size_t>(bound) + 3);
            const Rational check = f(EvConstSeq(std::move(zeros), Rational(1)));
            if (check != b)
                throw NotRepresentableError("c slice limit mass is inconsistent");
            return CDualElem{std::move(b), std::move(a)};
        }
        case SpaceKind::DirectSum: {
            const auto& comps = space.sum().components;
            DirectSumElem out;
            out.blocks.reserve(comps.size());
            for (std::size_t kk = 0; kk < comps.size(); ++kk)
                out.blocks.emplace_back(static_cast<std::size_t>(comps[kk]));
            for (std::size_t kk = 0; kk < comps.size(); ++kk)
                for (int i = 0; i < comps[kk]; ++i) {
                    DirectSumElem probe;
                    for (std::size_t jj = 0; jj < comps.size(); ++jj)
                        probe.blocks.emplace_back(static_cast<std::size_t>(comps[jj]));
                    probe.blocks[kk] = VecElem::unit(static_cast<std::size_t>(comps[kk]),
                                                     static_cast<std::size_t>(i));
                    out.blocks[kk][static_cast<std::size_t>(i)] = f(probe);
                }
            return out;
        }
    }
    throw std::logic_error("probe_dual_representation: unreachable");
}

Rational bar_lift_apply(const Element& xpp, const SpaceRef& slot_space, int bound,
                        const std::function<Rational(const Element&)>& evaluate_at) {
    const Element phi = probe_dual_representation(slot_space, bound, evaluate_at);
    return bidual_apply(xpp, phi, slot_space);
}

// --------------------------------------------------------------- ExtendedOp

namespace {

int sum_radius(const std::vector<Element>& xs) {
    int r = 0;
    for (const auto& x : xs) r += radius(x);
    return r;
}

std::string key_of(const std::vector<Element>& args, const Element& yprime) {
    std::ostringstream os;
    for (const auto& a : args) os << to_string(a) << "|";
    os << "#" << to_string(yprime);
    return os.str();
}

/// Assemble a codomain bidual-model element from scalar evaluations against
/// dual probes. `bound` dominates the support radius of the value.
Element assemble_codomain_element(const SpaceRef& codomain, int bound,
                                  const std::function<Rational(const Element&)>& val) {
    switch (codomain.kind()) {
        case SpaceKind::FinDim: {
            const auto n = static_cast<std::size_t>(codomain.dim());
            VecElem out(n);
            for (std::size_t j = 0; j < n; ++j) out[j] = val(VecElem::unit(n, j));
            return out;
        }
        case SpaceKind::SeqL1: {
            std::vector<std::pair<int, Rational>> terms;
            for (int i = 1; i <= bound + 2; ++i) {
                Rational ai = val(EvConstSeq::unit(i));
                if (i > bound && !ai.is_zero())
                    throw NotRepresentableError("l1-bidual value support did not stabilize");
                if (!ai.is_zero()) terms.emplace_back(i, std::move(ai));
            }
            FinSupSeq a(std::move(terms));
            Rational mu = val(EvConstSeq::constant(Rational(1)));
            for (const auto& [i, v] : a.terms()) mu -= v;
            return L1BidualElem{std::move(a), std::move(mu)};
        }
        case SpaceKind::SeqC: {
            std::vector<Rational> prefix;
            prefix.reserve(static_cast<std::size_t>(bound));
            for (int i = 1; i <= bound; ++i)
                prefix.push_back(val(CDualElem{Rational(0), FinSupSeq::unit(i)}));
            const Rational tail = val(CDualElem{Rational(0), FinSupSeq::unit(bound + 1)});
            const Rational tail2 = val(CDualElem{Rational(0), FinSupSeq::unit(bound + 2)});
            if (tail2 != tail)
                throw NotRepresentableError("c-bidual value prefix did not stabilize");
            const Rational beta = val(CDualElem{Rational(1), FinSupSeq{}});
            return CBidualElem{beta, EvConstSeq(std::move(prefix), tail)};
        }
        case SpaceKind::DirectSum: {
            const auto& comps = codomain.sum().components;
            DirectSumElem out;
            for (std::size_t kk = 0; kk < comps.size(); ++kk)
                out.blocks.emplace_back(static_cast<std::size_t>(comps[kk]));
            for (std::size_t kk = 0; kk < comps.size(); ++kk)
                for (int i = 0; i < comps[kk]; ++i) {
                    DirectSumElem probe;
                    for (std::size_t jj = 0; jj < comps.size(); ++jj)
                        probe.blocks.emplace_back(static_cast<std::size_t>(comps[jj]));
                    probe.blocks[kk] = VecElem::unit(static_cast<std::size_t>(comps[kk]),
                                                     static_cast<std::size_t>(i));
                    out.blocks[kk][static_cast<std::size_t>(i)] = val(probe);
                }
            return out;
        }
    }
    throw std::logic_error("assemble_codomain_element: unreachable");
}

}  // namespace

ExtendedOp::ExtendedOp(RegOperator base, Permutation rho)
    : base_(std::move(base)), rho_(std::move(rho)) {
    if (rho_.size() != base_.arity())
        throw DomainMismatchError("ExtendedOp: permutation size must equal the arity");
}

Rational ExtendedOp::stage_value(std::size_t k, const std::vector<Element>& args,
                                 std::vector<std::optional<Element>>& assignment,
                                 const Element& yprime) const {
    if (k == 0) {
        std::vector<Element> primal;
        primal.reserve(assignment.size());
        for (const auto& a : assignment) primal.push_back(*a);
        evals_.fetch_add(1, std::memory_order_relaxed);
        return pairing(yprime, base_.evaluate(primal), base_.codomain());
    }
    const int slot = rho_(static_cast<int>(k));
    const SpaceRef& slot_space = base_.domains()[static_cast<std::size_t>(slot) - 1];
    const Element& xpp = args[static_cast<std::size_t>(slot) - 1];

    Element phi = base_.codomain().zero();
    if (k == 1) {
        phi = slice_functional(base_, assignment, slot, yprime);
    } else {
        int bound = base_.op_radius() + radius(yprime) + 2;
        for (std::size_t j = 1; j < k; ++j)
            bound += radius(args[static_cast<std::size_t>(rho_(static_cast<int>(j))) - 1]);
        for (const auto& a : assignment)
            if (a.has_value()) bound += radius(*a);
        phi = probe_dual_representation(
            slot_space, bound, [&](const Element& x) -> Rational {
                assignment[static_cast<std::size_t>(slot) - 1] = x;
                Rational v = stage_value(k - 1, args, assignment, yprime);
                assignment[static_cast<std::size_t>(slot) - 1].reset();
                return v;
            });
    }
    return bidual_apply(xpp, phi, slot_space);
}

Rational ExtendedOp::value(const std::vector<Element>& args, const Element& yprime) const {
    if (static_cast<int>(args.size()) != base_.arity())
        throw DomainMismatchError("ExtendedOp::value: arity mismatch");
    for (int r = 0; r < base_.arity(); ++r)
        base_.domains()[static_cast<std::size_t>(r)].bidual_model().require(
            args[static_cast<std::size_t>(r)], "ExtendedOp::value");
    base_.codomain().dual_model().require(yprime, "ExtendedOp::value(y')");

    const std::string key = key_of(args, yprime);
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    std::vector<std::optional<Element>> assignment(args.size());
    Rational v = stage_value(static_cast<std::size_t>(base_.arity()), args, assignment, yprime);
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        memo_.emplace(key, v);
    }
    return v;
}

Element ExtendedOp::value_element(const std::vector<Element>& args) const {
    const int bound = base_.op_radius() + sum_radius(args) + 2;
    return assemble_codomain_element(
        base_.codomain(), bound,
        [&](const Element& yprime) { return value(args, yprime); });
}

ExtendedOp arens_extend(const RegOperator& a, const Permutation& rho) {
    return ExtendedOp(a, rho);
}

// ---------------------------------------------------------------- StarChain

StarChain::StarChain(RegOperator base) : base_(std::move(base)) {}

Element StarChain::chain_functional(std::size_t j, const std::vector<Element>& args,
                                    const Element& yprime,
                                    std::vector<std::optional<Element>>& primal) const {
    const int m = base_.arity();
    if (j == 1) {
        // A*(y', x_1..x_{m-1}), the functional on E_m
        return slice_functional(base_, primal, m, yprime);
    }
    // A^{*(j)}(x''_{m-j+2}, ..., x''_m, y', x_1..x_{m-j}) on E_{m-j+1}
    const int slot = m - static_cast<int>(j) + 1;
    const SpaceRef& slot_space = base_.domains()[static_cast<std::size_t>(slot) - 1];
    const int applied_slot = slot + 1;  // x''_{m-j+2} closes slot m-j+2
    const SpaceRef& applied_space = base_.domains()[static_cast<std::size_t>(applied_slot) - 1];
    int bound = base_.op_radius() + radius(yprime) + 2;
    for (int s = applied_slot; s <= m; ++s)
        bound += radius(args[static_cast<std::size_t>(s) - 1]);
    for (const auto& p : primal)
        if (p.has_value()) bound += radius(*p);
    return probe_dual_representation(slot_space, bound, [&](const Element& x) -> Rational {
        primal[static_cast<std::size_t>(slot) - 1] = x;
        Element inner = chain_functional(j - 1, args, yprime, primal);
        primal[static_cast<std::size_t>(slot) - 1].reset();
        return bidual_apply(args[static_cast<std::size_t>(applied_slot) - 1], inner,
                            applied_space);
    });
}

Rational StarChain::value(const std::vector<Element>& args, const Element& yprime) const {
    const int m = base_.arity();
    if (static_cast<int>(args.size()) != m)
        throw DomainMismatchError("StarChain::value: arity mismatch");
    std::vector<std::optional<Element>> primal(static_cast<std::size_t>(m));
    Element top = chain_functional(static_cast<std::size_t>(m), args, yprime, primal);
    return bidual_apply(args[0], top, base_.domains()[0]);
}

Element StarChain::value_element(const std::vector<Element>& args) const {
    const int bound = base_.op_radius() + sum_radius(args) + 2;
    return assemble_codomain_element(
        base_.codomain(), bound, [&](const Element& yprime) { return value(args, yprime); });
}

StarChain star_chain(const RegOperator& a) { return StarChain(a); }

// ------------------------------------------------------------ Davie-Gamelin

namespace {

Rational dg_level(const RegOperator& a, const Permutation& rho,
                  const std::vector<Element>& args, const Element& yprime, int cap,
                  std::size_t k, std::vector<int>& indices) {
    if (k == 0) {
        std::vector<Element> primal;
        primal.reserve(args.size());
        for (std::size_t r = 0; r < args.size(); ++r)
            primal.push_back(approximants(args[r], a.domains()[r], indices[r]));
        return pairing(yprime, a.evaluate(primal), a.codomain());
    }
    const int slot = rho(static_cast<int>(k));
    auto at = [&](int n) {
        indices[static_cast<std::size_t>(slot) - 1] = n;
        Rational v = dg_level(a, rho, args, yprime, cap, k - 1, indices);
        indices[static_cast<std::size_t>(slot) - 1] = 0;
        return v;
    };
    if (cap < 4)
        throw StabilizationFailureError("davie_gamelin cap below the doubling window");
    int n = 1;
    Rational v1 = at(1), v2 = at(2), v4 = at(4);
    while (!(v1 == v2 && v2 == v4)) {
        n *= 2;
        if (4 * n > cap)
            throw StabilizationFailureError("davie_gamelin at slot " + std::to_string(slot));
        v1 = v2;
        v2 = v4;
        v4 = at(4 * n);
    }
    return v1;
}

}  // namespace

Rational davie_gamelin_value(const RegOperator& a, const Permutation& rho,
                             const std::vector<Element>& args, const Element& yprime, int cap) {
    if (static_cast<int>(args.size()) != a.arity())
        throw DomainMismatchError("davie_gamelin_value: arity mismatch");
    std::vector<int> indices(args.size(), 0);
    return dg_level(a, rho, args, yprime, cap, static_cast<std::size_t>(a.arity()), indices);
}

Element davie_gamelin_eval(const RegOperator& a, const Permutation& rho,
                           const std::vector<Element>& args, int cap) {
    const int bound = a.op_radius() + sum_radius(args) + 2;
    return assemble_codomain_element(a.codomain(), bound, [&](const Element& yprime) {
        return davie_gamelin_value(a, rho, args, yprime, cap);
    });
}

// ---------------------------------------------------------------- the grid

Element random_bidual(Prng& rng, const SpaceRef& space, int max_index) {
    switch (space.kind()) {
        case SpaceKind::FinDim: return rng.vec(space.dim());
        case SpaceKind::SeqL1: return L1BidualElem{rng.finsup(max_index), rng.rational()};
        case SpaceKind::SeqC: return CBidualElem{rng.rational(), rng.evconst(max_index)};
        case SpaceKind::DirectSum: {
            DirectSumElem e;
            for (int n : space.sum().components) e.blocks.push_back(rng.vec(n));
            return e;
        }
    }
    throw std::logic_error("random_bidual: unreachable");
}

std::vector<std::vector<Element>> generator_grid(const RegOperator& a, int max_index,
                                                 std::size_t cap, int random_tuples,
                                                 std::uint64_t seed) {
    std::vector<std::vector<Element>> slot_gens;
    slot_gens.reserve(static_cast<std::size_t>(a.arity()));
    std::size_t total = 1;
    for (const SpaceRef& dom : a.domains()) {
        slot_gens.push_back(bidual_generators(dom, max_index));
        total *= slot_gens.back().size();
    }
    std::vector<std::vector<Element>> grid;
    const std::size_t stride = total <= cap ? 1 : (total + cap - 1) / cap;
    std::size_t counter = 0;
    std::vector<std::size_t> digit(slot_gens.size(), 0);
    while (true) {
        if (counter % stride == 0) {
            std::vector<Element> tuple;
            tuple.reserve(slot_gens.size());
            for (std::size_t r = 0; r < slot_gens.size(); ++r)
                tuple.push_back(slot_gens[r][digit[r]]);
            grid.push_back(std::move(tuple));
        }
        ++counter;
        std::size_t r = 0;
        while (r < slot_gens.size() && ++digit[r] == slot_gens[r].size()) digit[r++] = 0;
        if (r == slot_gens.size()) break;
    }
    Prng rng(seed);
    for (int t = 0; t < random_tuples; ++t) {
        std::vector<Element> tuple;
        tuple.reserve(static_cast<std::size_t>(a.arity()));
        for (const SpaceRef& dom : a.domains())
            tuple.push_back(random_bidual(rng, dom, max_index));
        grid.push_back(std::move(tuple));
    }
    return grid;
}

// ------------------------------------------------------------------ checks

namespace {

std::vector<Element> abs_tuple(const std::vector<Element>& args) {
    std::vector<Element> out;
    out.reserve(args.size());
    for (const auto& x : args) out.push_back(elem_abs(x));
    return out;
}

void describe_tuple(Witness& w, const std::vector<Element>& args) {
    for (std::size_t r = 0; r < args.size(); ++r)
        w.data.emplace_back("x''_" + std::to_string(r + 1), to_string(args[r]));
}

}  // namespace

CompareAllReport compare_all_extensions(const RegOperator& a, int random_tuples,
                                        std::uint64_t seed, int max_index) {
    const int m = a.arity();
    if (m > 4) throw std::domain_error("compare_all_extensions: m <= 4");
    CompareAllReport report;
    std::vector<Permutation> perms = Permutation::all(m);
    for (const auto& p : perms) report.perms.push_back(p.str());

    std::vector<std::unique_ptr<ExtendedOp>> exts;
    exts.reserve(perms.size());
    for (const auto& p : perms) exts.push_back(std::make_unique<ExtendedOp>(a, p));

    const auto grid = generator_grid(a, max_index, 512, random_tuples, seed);
    for (const auto& tuple : grid) {
        const Element first = exts.front()->value_element(tuple);
        for (std::size_t p = 1; p < exts.size(); ++p) {
            const Element other = exts[p]->value_element(tuple);
            if (!elem_eq(first, other)) {
                report.all_equal = false;
                if (!report.witness) {
                    Witness w;
                    w.what = "extensions differ between rho=" + perms.front().str() +
                             " and rho=" + perms[p].str();
                    describe_tuple(w, tuple);
                    w.data.emplace_back("value[" + perms.front().str() + "]",
                                        to_string(first));
                    w.data.emplace_back("value[" + perms[p].str() + "]", to_string(other));
                    report.witness = std::move(w);
                }
            }
        }
        ++report.tuples_checked;
    }
    return report;
}

PropsReport verify_extension_props(const RegOperator& a, const Permutation& rho,
                                   const std::optional<LinMap>& u, int random_tuples,
                                   std::uint64_t seed) {
    PropsReport report;
    ExtendedOp ext(a, rho);
    const auto dual_gens = dual_generators(a.codomain(), 6);

    // (b) extension identity on primal basis tuples
    {
        std::vector<std::vector<Element>> tuples{{}};
        for (const SpaceRef& dom : a.domains()) {
            std::vector<Element> basis;
            switch (dom.kind()) {
                case SpaceKind::FinDim:
                    for (int i = 0; i < dom.dim(); ++i)
                        basis.emplace_back(VecElem::unit(static_cast<std::size_t>(dom.dim()),
                                                         static_cast<std::size_t>(i)));
                    break;
                case SpaceKind::SeqL1:
                    for (int i = 1; i <= 4; ++i) basis.emplace_back(FinSupSeq::unit(i));
                    break;
                case SpaceKind::SeqC:
                    for (int i = 1; i <= 3; ++i) basis.emplace_back(EvConstSeq::unit(i));
                    basis.emplace_back(EvConstSeq::constant(Rational(1)));
                    break;
                default:
                    throw DomainMismatchError("verify_extension_props: unsupported domain");
            }
            std::vector<std::vector<Element>> next;
            for (const auto& partial : tuples)
                for (const auto& x : basis) {
                    auto t = partial;
                    t.push_back(x);
                    next.push_back(std::move(t));
                    if (next.size() > 256) break;
                }
            tuples = std::move(next);
        }
        for (const auto& x : tuples) {
            std::vector<Element> jx;
            jx.reserve(x.size());
            for (std::size_t r = 0; r < x.size(); ++r)
                jx.push_back(embed_J(x[r], a.domains()[r]));
            const Element ax = a.evaluate(x);
            for (const auto& yp : dual_gens) {
                if (ext.value(jx, yp) != pairing(yp, ax, a.codomain())) {
                    report.extends = false;
                    if (!report.witness) {
                        Witness w;
                        w.what = "extension identity AR(Jx)(y') = y'(A(x)) failed";
                        describe_tuple(w, jx);
                        w.data.emplace_back("y'", to_string(yp));
                        report.witness = std::move(w);
                    }
                }
            }
        }
    }

    // (c) positivity transfer on positive generator tuples
    {
        const RegOperator* positive_op = nullptr;
        std::optional<RegOperator> abs_op;
        if (is_positive_op(a)) {
            positive_op = &a;
        } else {
            try {
                abs_op.emplace(modulus_op(a));
                positive_op = &*abs_op;
            } catch (const UnsupportedError&) {
                positive_op = nullptr;  // vacuous
            }
        }
        if (positive_op != nullptr) {
            ExtendedOp pos_ext(*positive_op, rho);
            auto grid = generator_grid(*positive_op, 4, 128, 0, seed);
            for (const auto& tuple : grid) {
                bool tuple_positive = true;
                for (const auto& x : tuple)
                    tuple_positive = tuple_positive && elem_leq(zero_like(x), x);
                if (!tuple_positive) continue;
                for (const auto& yp : dual_gens) {
                    if (!elem_leq(zero_like(yp), yp)) continue;
                    if (pos_ext.value(tuple, yp).sign() < 0) {
                        report.positive_transfer = false;
                        if (!report.witness) {
                            Witness w;
                            w.what = "positivity transfer failed";
                            describe_tuple(w, tuple);
                            w.data.emplace_back("y'", to_string(yp));
                            report.witness = std::move(w);
                        }
                    }
                }
            }
        }
    }

    // naturality AR(u o A) = u'' o AR(A), exact on the grid
    {
        auto default_hom = [&]() -> LinMap {
            switch (a.codomain().kind()) {
                case SpaceKind::FinDim: {
                    RatMatrix row(1, static_cast<std::size_t>(a.codomain().dim()));
                    row.at(0, 0) = Rational(1);
                    return LinMap::matrix(row);
                }
                case SpaceKind::DirectSum:
                    return LinMap::sum_projection(a.codomain().sum(), 0);
                default:
                    return LinMap::dual_functional(a.codomain(),
                                                   hom_dual_generators(a.codomain(), 3).front());
            }
        };
        LinMap nat = u.has_value() ? *u : default_hom();
        RegOperator ua = compose_hom(nat, a);
        ExtendedOp ua_ext(ua, rho);
        const auto z_gens = dual_generators(nat.codomain(), 6);
        auto grid = generator_grid(a, 3, 48, random_tuples, seed + 1);
        for (const auto& tuple : grid) {
            const Element ar = ext.value_element(tuple);
            const Element lifted = nat.second_adjoint_apply(ar);
            for (const auto& zp : z_gens) {
                const Rational lhs = ua_ext.value(tuple, zp);
                const Rational rhs = bidual_apply(lifted, zp, nat.codomain());
                if (lhs != rhs) {
                    report.naturality = false;
                    if (!report.witness) {
                        Witness w;
                        w.what = "naturality AR(u o A) = u'' o AR(A) failed";
                        describe_tuple(w, tuple);
                        w.data.emplace_back("u", nat.str());
                        w.data.emplace_back("z'", to_string(zp));
                        w.data.emplace_back("lhs", lhs.str());
                        w.data.emplace_back("rhs", rhs.str());
                        report.witness = std::move(w);
                    }
                }
            }
        }
    }

    // multilinear sign expansion
    {
        auto grid = generator_grid(a, 3, 24, random_tuples, seed + 2);
        const int m = a.arity();
        for (const auto& tuple : grid) {
            for (const auto& yp : dual_gens) {
                Rational expansion;
                for (int mask = 0; mask < (1 << m); ++mask) {
                    std::vector<Element> parts;
                    parts.reserve(tuple.size());
                    int sign = 1;
                    for (int r = 0; r < m; ++r) {
                        const bool plus = ((mask >> r) & 1) == 0;
                        if (!plus) sign = -sign;
                        parts.push_back(plus ? elem_pos(tuple[static_cast<std::size_t>(r)])
                                             : elem_neg(tuple[static_cast<std::size_t>(r)]));
                    }
                    const Rational term = ext.value(parts, yp);
                    expansion += sign > 0 ? term : -term;
                }
                if (expansion != ext.value(tuple, yp)) {
                    report.sign_expansion = false;
                    if (!report.witness) {
                        Witness w;
                        w.what = "multilinear sign expansion failed";
                        describe_tuple(w, tuple);
                        w.data.emplace_back("y'", to_string(yp));
                        report.witness = std::move(w);
                    }
                }
            }
        }
    }
    return report;
}

CheckVerdict check_hom_composite(const RegOperator& a, const Permutation& rho,
                                 const Element& yprime, int samples, std::uint64_t seed) {
    CheckVerdict verdict;
    ExtendedOp ext(a, rho);
    auto grid = generator_grid(a, 6, 256, samples, seed);
    for (const auto& tuple : grid) {
        const Rational lhs = ext.value(tuple, yprime).abs();
        const Rational rhs = ext.value(abs_tuple(tuple), yprime);
        ++verdict.cases;
        if (lhs != rhs) {
            verdict.holds = false;
            if (!verdict.witness) {
                Witness w;
                w.what = "|(y' o AR)(x'')| != (y' o AR)(|x''|)";
                describe_tuple(w, tuple);
                w.data.emplace_back("y'", to_string(yprime));
                w.data.emplace_back("lhs", lhs.str());
                w.data.emplace_back("rhs", rhs.str());
                verdict.witness = std::move(w);
            }
        }
    }
    return verdict;
}

CheckVerdict check_modulus_identity(const RegOperator& a, const Permutation& rho,
                                    const Element& yprime, int samples, std::uint64_t seed) {
    CheckVerdict verdict;
    ExtendedOp ext(a, rho);
    auto grid = generator_grid(a, 5, 128, samples, seed);
    for (const auto& tuple : grid) {
        const Element ar = ext.value_element(tuple);
        const Rational lhs = bidual_apply(elem_abs(ar), yprime, a.codomain());
        const Rational rhs = ext.value(abs_tuple(tuple), yprime);
        ++verdict.cases;
        if (lhs != rhs) {
            verdict.holds = false;
            if (!verdict.witness) {
                Witness w;
                w.what = "|AR(x'')|(y') != AR(|x''|)(y')";
                describe_tuple(w, tuple);
                w.data.emplace_back("y'", to_string(yprime));
                w.data.emplace_back("lhs", lhs.str());
                w.data.emplace_back("rhs", rhs.str());
                verdict.witness = std::move(w);
            }
        }
    }
    return verdict;
}

CheckVerdict check_oc_restriction(const RegOperator& a, const Permutation& rho, int samples,
                                  std::uint64_t seed) {
    CheckVerdict verdict;
    ExtendedOp ext(a, rho);
    Prng rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<Element> tuple;
        tuple.reserve(static_cast<std::size_t>(a.arity()));
        for (const SpaceRef& dom : a.domains()) {
            switch (dom.kind()) {
                case SpaceKind::FinDim:
                    tuple.push_back(rng.vec(dom.dim()));
                    break;
                case SpaceKind::SeqL1:
                    tuple.push_back(L1BidualElem{rng.finsup(6), Rational(0)});
                    break;
                case SpaceKind::SeqC:
                    tuple.push_back(embed_J(rng.evconst(5), dom));
                    break;
                default:
                    throw DomainMismatchError("check_oc_restriction: unsupported domain");
            }
        }
        const Element lhs = elem_abs(ext.value_element(tuple));
        const Element rhs = ext.value_element(abs_tuple(tuple));
        ++verdict.cases;
        if (!elem_eq(lhs, rhs)) {
            verdict.holds = false;
            if (!verdict.witness) {
                Witness w;
                w.what = "restricted multimorphism identity failed on order-continuous tuple";
                describe_tuple(w, tuple);
                w.data.emplace_back("|AR(x'')|", to_string(lhs));
                w.data.emplace_back("AR(|x''|)", to_string(rhs));
                verdict.witness = std::move(w);
            }
        }
    }
    return verdict;
}

CheckVerdict check_dg_oracle(const RegOperator& a, const Permutation& rho, int samples,
                             std::uint64_t seed, int cap) {
    CheckVerdict verdict;
    ExtendedOp ext(a, rho);
    auto grid = generator_grid(a, 4, 64, samples, seed);
    for (const auto& tuple : grid) {
        const Element via_limits = davie_gamelin_eval(a, rho, tuple, cap);
        const Element via_lifts = ext.value_element(tuple);
        ++verdict.cases;
        if (!elem_eq(via_limits, via_lifts)) {
            verdict.holds = false;
            if (!verdict.witness) {
                Witness w;
                w.what = "davie_gamelin disagrees with arens_extend";
                describe_tuple(w, tuple);
                w.data.emplace_back("iterated_limits", to_string(via_limits));
                w.data.emplace_back("bar_lifts", to_string(via_lifts));
                verdict.witness = std::move(w);
            }
        }
    }
    return verdict;
}

}  // namespace arens
