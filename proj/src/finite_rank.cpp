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

#include "arens/finite_rank.hpp"

#include <algorithm>
#include <set>

#include "arens/errors.hpp"
#include "arens/prng.hpp"

namespace arens {

namespace {

/// Row echelon basis of the span; exact Gaussian elimination.
std::vector<VecElem> echelon_basis(const std::vector<VecElem>& vecs) {
    std::vector<VecElem> rows;
    for (const VecElem& v : vecs) {
        VecElem w = v;
        for (const VecElem& r : rows) {
            std::size_t p = 0;
            while (p < r.dim() && r[p].is_zero()) ++p;
            if (p < r.dim() && !w[p].is_zero()) w = w - (w[p] / r[p]) * r;
        }
        bool zero = true;
        for (std::size_t i = 0; i < w.dim(); ++i)
            if (!w[i].is_zero()) {
                zero = false;
                break;
            }
        if (!zero) {
            rows.push_back(w);
            std::sort(rows.begin(), rows.end(), [](const VecElem& a, const VecElem& b) {
                std::size_t pa = 0, pb = 0;
                while (pa < a.dim() && a[pa].is_zero()) ++pa;
                while (pb < b.dim() && b[pb].is_zero()) ++pb;
                return pa < pb;
            });
        }
    }
    return rows;
}

std::vector<int> sign_pattern(const VecElem& v) {
    std::vector<int> p(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) p[i] = v[i].sign();
    return p;
}

bool is_zero_vec(const VecElem& v) {
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (!v[i].is_zero()) return false;
    return true;
}

/// All basis-tuple samples of the operator's range (indices up to the
/// operator radius + 1 on sequence domains).
std::vector<VecElem> range_samples(const RegOperator& a) {
    std::vector<std::vector<Element>> tuples{{}};
    const int seq_bound = a.op_radius() + 1;
    for (const SpaceRef& dom : a.domains()) {
        std::vector<Element> basis;
        switch (dom.kind()) {
            case SpaceKind::FinDim:
                for (int i = 0; i < dom.dim(); ++i)
                    basis.emplace_back(VecElem::unit(static_cast<std::size_t>(dom.dim()),
                                                     static_cast<std::size_t>(i)));
                break;
            case SpaceKind::SeqL1:
                for (int i = 1; i <= seq_bound; ++i) basis.emplace_back(FinSupSeq::unit(i));
                break;
            case SpaceKind::SeqC:
                for (int i = 1; i <= seq_bound; ++i) basis.emplace_back(EvConstSeq::unit(i));
                basis.emplace_back(EvConstSeq::constant(Rational(1)));
                break;
            default:
                throw DomainMismatchError("finite_rank_reduce: unsupported domain");
        }
        std::vector<std::vector<Element>> next;
        for (const auto& partial : tuples)
            for (const auto& x : basis) {
                auto t = partial;
                t.push_back(x);
                next.push_back(std::move(t));
            }
        tuples = std::move(next);
    }
    std::vector<VecElem> out;
    out.reserve(tuples.size());
    for (const auto& t : tuples) {
        VecElem v = std::get<VecElem>(a.evaluate(t));
        if (!is_zero_vec(v)) out.push_back(std::move(v));
    }
    return out;
}

/// Random lattice word over the samples: linear combinations interleaved
/// with sup/inf.
VecElem random_lattice_word(Prng& rng, const std::vector<VecElem>& gens, std::size_t k) {
    VecElem acc = gens[rng.below(gens.size())];
    const int steps = static_cast<int>(rng.below(5)) + 1;
    for (int s = 0; s < steps; ++s) {
        VecElem other = gens[rng.below(gens.size())];
        switch (rng.below(4)) {
            case 0: acc = sup(acc, other); break;
            case 1: acc = inf(acc, other); break;
            case 2: acc = acc + rng.rational() * other; break;
            default: acc = sup(acc, VecElem(k)); break;  // positive part
        }
    }
    return acc;
}

}  // namespace

bool in_span(const std::vector<VecElem>& basis, const VecElem& v) {
    std::vector<VecElem> all = basis;
    const std::size_t d = echelon_basis(all).size();
    all.push_back(v);
    return echelon_basis(all).size() == d;
}

FiniteRankReduction finite_rank_reduce(const RegOperator& a, int max_rounds, int word_samples,
                                       std::uint64_t seed) {
    if (a.codomain().kind() != SpaceKind::FinDim)
        throw DomainMismatchError("finite_rank_reduce: codomain must be FinDim");
    const auto k = static_cast<std::size_t>(a.codomain().dim());

    const std::vector<VecElem> samples = range_samples(a);
    std::vector<VecElem> gens = echelon_basis(samples);

    // zero range: G = {0}; the astriction is the zero operator
    if (gens.empty()) {
        RatMatrix iso(0, k), iso_inv(k, 0);
        return FiniteRankReduction{{}, iso, iso_inv,
                                   RegOperator::lin_comb({{Rational(0), a}})};
    }

    std::size_t prev_dim = 0;
    std::set<std::vector<int>> prev_patterns;
    bool stable = false;
    for (int round = 0; round < max_rounds && !stable; ++round) {
        std::vector<VecElem> pool = gens;
        const VecElem zero(k);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            pool.push_back(sup(gens[i], zero));
            for (std::size_t j = i + 1; j < gens.size(); ++j) {
                pool.push_back(sup(gens[i], gens[j]));
                pool.push_back(inf(gens[i], gens[j]));
            }
        }
        std::vector<VecElem> basis = echelon_basis(pool);
        std::set<std::vector<int>> patterns;
        for (const VecElem& v : pool)
            if (!is_zero_vec(v)) patterns.insert(sign_pattern(v));
        stable = basis.size() == prev_dim && patterns == prev_patterns;
        prev_dim = basis.size();
        prev_patterns = std::move(patterns);
        // keep the echelon basis plus one representative per sign pattern so
        // the next round sees the lattice structure, not just the span
        std::vector<VecElem> next = basis;
        std::set<std::vector<int>> seen;
        for (const VecElem& v : pool) {
            if (is_zero_vec(v)) continue;
            if (seen.insert(sign_pattern(v)).second) next.push_back(v);
        }
        gens = std::move(next);
    }
    if (!stable) throw ClosureBudgetExceededError("finite_rank_reduce: closure round cap hit");

    // atoms by iterated disjointification of the positive parts
    std::vector<VecElem> work;
    const VecElem zero(k);
    for (const VecElem& g : gens) {
        VecElem p = sup(g, zero), n = sup(zero - g, zero);
        if (!is_zero_vec(p)) work.push_back(p);
        if (!is_zero_vec(n)) work.push_back(n);
    }
    bool changed = true;
    int guard = 0;
    while (changed) {
        if (++guard > 10000)
            throw ClosureBudgetExceededError("finite_rank_reduce: disjointification cap hit");
        changed = false;
        for (std::size_t i = 0; i < work.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
                const VecElem meet = inf(work[i], work[j]);
                if (is_zero_vec(meet)) continue;
                VecElem u = work[i], v = work[j];
                std::vector<VecElem> repl{sup(u - v, zero), sup(v - u, zero), meet};
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
                for (VecElem& w : repl)
                    if (!is_zero_vec(w)) work.push_back(std::move(w));
                changed = true;
            }
    }
    // normalize to unit sup-norm and dedupe
    std::vector<VecElem> atoms;
    for (VecElem& w : work) {
        Rational m(0);
        for (std::size_t i = 0; i < k; ++i) m = max(m, w[i]);
        if (m.is_zero()) continue;
        VecElem n = (Rational(1) / m) * w;
        bool dup = false;
        for (const VecElem& at : atoms) dup = dup || at == n;
        if (!dup) atoms.push_back(std::move(n));
    }
    std::sort(atoms.begin(), atoms.end(), [](const VecElem& x, const VecElem& y) {
        return sign_pattern(x) < sign_pattern(y);
    });

    if (atoms.size() != prev_dim)
        throw InternalInvariantViolation("finite_rank_reduce: atom count != span dimension");
    for (const VecElem& g : gens)
        if (!in_span(atoms, g))
            throw InternalInvariantViolation("finite_rank_reduce: atoms do not span G");

    // lattice-word membership validation
    if (!samples.empty()) {
        Prng rng(seed);
        for (int s = 0; s < word_samples; ++s) {
            const VecElem w = random_lattice_word(rng, samples, k);
            if (!in_span(atoms, w))
                throw InternalInvariantViolation(
                    "finite_rank_reduce: closure missed a lattice word");
        }
    }

    const std::size_t d = atoms.size();
    RatMatrix iso(d, k), iso_inv(k, d);
    for (std::size_t j = 0; j < d; ++j) {
        std::size_t pj = 0;
        while (pj < k && atoms[j][pj] != Rational(1)) ++pj;
        if (pj == k) throw InternalInvariantViolation("finite_rank_reduce: atom without unit");
        iso.at(j, pj) = Rational(1);
        for (std::size_t i = 0; i < k; ++i) iso_inv.at(i, j) = atoms[j][i];
    }

    RegOperator astriction = RegOperator::hom_composite(LinMap::matrix(iso), a);
    return FiniteRankReduction{std::move(atoms), std::move(iso), std::move(iso_inv),
                               std::move(astriction)};
}

}  // namespace arens
