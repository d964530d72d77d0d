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

#include "arens/operators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "arens/bidual.hpp"
#include "arens/errors.hpp"
#include "arens/lattice.hpp"

namespace arens {

using CoordProduct = RegOperator::CoordProduct;
using UpperTriangular = RegOperator::UpperTriangular;
using FiniteRank = RegOperator::FiniteRank;
using WeightedDiagonal = RegOperator::WeightedDiagonal;
using HomComposite = RegOperator::HomComposite;
using SumTuple = RegOperator::SumTuple;
using LinComb = RegOperator::LinComb;

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int m = size();
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int v : images_) {
        if (v < 1 || v > m || seen[static_cast<std::size_t>(v) - 1])
            throw std::domain_error("Permutation: not a bijection of {1..m}");
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> im(static_cast<std::size_t>(m));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::theta(int m) {
    std::vector<int> im(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) im[static_cast<std::size_t>(k) - 1] = m + 1 - k;
    return Permutation(std::move(im));
}

std::vector<Permutation> Permutation::all(int m) {
    std::vector<int> im(static_cast<std::size_t>(m));
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::string Permutation::str() const {
    std::string s = "(";
    for (int k = 1; k <= size(); ++k) s += (k > 1 ? " " : "") + std::to_string((*this)(k));
    return s + ")";
}

// ---------------------------------------------------------------- TensorOp

TensorOp::TensorOp(std::vector<int> dims, int codomain_dim)
    : dims_(std::move(dims)), codomain_dim_(codomain_dim) {
    if (dims_.empty()) throw std::domain_error("TensorOp: arity must be >= 1");
    for (int n : dims_)
        if (n < 1) throw std::domain_error("TensorOp: dims must be >= 1");
    if (codomain_dim_ < 1) throw std::domain_error("TensorOp: codomain dim must be >= 1");
}

namespace {
bool term_key_less(const TensorOp::Term& a, const std::vector<int>& idx, int j) {
    if (a.idx != idx) return a.idx < idx;
    return a.j < j;
}
}  // namespace

void TensorOp::set_entry(const std::vector<int>& idx, int j, Rational v) {
    if (static_cast<int>(idx.size()) != arity())
        throw std::domain_error("TensorOp::set_entry: index arity mismatch");
    for (int r = 0; r < arity(); ++r)
        if (idx[static_cast<std::size_t>(r)] < 1 || idx[static_cast<std::size_t>(r)] > dims_[static_cast<std::size_t>(r)])
            throw std::domain_error("TensorOp::set_entry: index out of range");
    if (j < 1 || j > codomain_dim_) throw std::domain_error("TensorOp::set_entry: output index");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{idx, j},
                               [](const Term& t, const std::pair<std::vector<int>, int>& k) {
                                   return term_key_less(t, k.first, k.second);
                               });
    if (it != terms_.end() && it->idx == idx && it->j == j) {
        if (v.is_zero()) {
            terms_.erase(it);
        } else {
            it->value = std::move(v);
        }
    } else if (!v.is_zero()) {
        terms_.insert(it, Term{idx, j, std::move(v)});
    }
}

Rational TensorOp::entry(const std::vector<int>& idx, int j) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{idx, j},
                               [](const Term& t, const std::pair<std::vector<int>, int>& k) {
                                   return term_key_less(t, k.first, k.second);
                               });
    if (it != terms_.end() && it->idx == idx && it->j == j) return it->value;
    return Rational(0);
}

VecElem TensorOp::apply(const std::vector<VecElem>& args) const {
    if (static_cast<int>(args.size()) != arity())
        throw DomainMismatchError("TensorOp::apply: arity mismatch");
    for (int r = 0; r < arity(); ++r)
        if (static_cast<int>(args[static_cast<std::size_t>(r)].dim()) != dims_[static_cast<std::size_t>(r)])
            throw DomainMismatchError("TensorOp::apply: dimension mismatch");
    VecElem out(static_cast<std::size_t>(codomain_dim_));
    for (const Term& t : terms_) {
        Rational p = t.value;
        for (int r = 0; r < arity(); ++r) {
            const Rational& xc =
                args[static_cast<std::size_t>(r)][static_cast<std::size_t>(t.idx[static_cast<std::size_t>(r)]) - 1];
            if (xc.is_zero()) {
                p = Rational(0);
                break;
            }
            p *= xc;
        }
        if (!p.is_zero()) out[static_cast<std::size_t>(t.j) - 1] += p;
    }
    return out;
}

TensorOp TensorOp::entrywise_abs() const {
    TensorOp t(dims_, codomain_dim_);
    t.terms_ = terms_;
    for (auto& term : t.terms_) term.value = term.value.abs();
    return t;
}

TensorOp TensorOp::entrywise_pos() const {
    TensorOp t(dims_, codomain_dim_);
    for (const auto& term : terms_)
        if (term.value.sign() > 0) t.terms_.push_back(term);
    return t;
}

TensorOp TensorOp::entrywise_neg() const {
    TensorOp t(dims_, codomain_dim_);
    for (const auto& term : terms_)
        if (term.value.sign() < 0) t.terms_.push_back(Term{term.idx, term.j, -term.value});
    return t;
}

// ------------------------------------------------------------------ LinMap

LinMap LinMap::matrix(RatMatrix m) {
    LinMap u;
    u.kind_ = Kind::Matrix;
    u.m_ = std::move(m);
    return u;
}

LinMap LinMap::dual_functional(SpaceRef domain, Element functional) {
    if (domain.role() != Role::Primal)
        throw DomainMismatchError("dual_functional: give the primal space");
    domain.dual_model().require(functional, "dual_functional");
    LinMap u;
    u.kind_ = Kind::DualFunctional;
    u.dom_ = std::move(domain);
    u.f_ = std::move(functional);
    return u;
}

LinMap LinMap::sum_projection(DirectSumDesc desc, std::size_t component) {
    if (component >= desc.components.size())
        throw std::domain_error("sum_projection: component out of range");
    LinMap u;
    u.kind_ = Kind::SumProjection;
    u.sum_ = std::move(desc);
    u.component_ = component;
    return u;
}

LinMap LinMap::band_projection(int n, std::vector<int> band) {
    for (int c : band)
        if (c < 0 || c >= n) throw std::domain_error("band_projection: coordinate out of range");
    LinMap u;
    u.kind_ = Kind::BandProjection;
    u.n_ = n;
    u.band_ = std::move(band);
    std::sort(u.band_.begin(), u.band_.end());
    return u;
}

SpaceRef LinMap::domain() const {
    switch (kind_) {
        case Kind::Matrix: return SpaceRef::fin_dim(static_cast<int>(m_.cols()));
        case Kind::DualFunctional: return dom_;
        case Kind::SumProjection: return SpaceRef::direct_sum(sum_);
        case Kind::BandProjection: return SpaceRef::fin_dim(n_);
    }
    throw std::logic_error("LinMap::domain: unreachable");
}

SpaceRef LinMap::codomain() const {
    switch (kind_) {
        case Kind::Matrix: return SpaceRef::fin_dim(static_cast<int>(m_.rows()));
        case Kind::DualFunctional: return SpaceRef::fin_dim(1);
        case Kind::SumProjection:
            return SpaceRef::fin_dim(sum_.components[component_]);
        case Kind::BandProjection: return SpaceRef::fin_dim(n_);
    }
    throw std::logic_error("LinMap::codomain: unreachable");
}

Element LinMap::apply(const Element& x) const {
    switch (kind_) {
        case Kind::Matrix: return m_.apply(std::get<VecElem>(x));
        case Kind::DualFunctional: {
            VecElem out(1);
            out[0] = pairing(f_, x, dom_);
            return out;
        }
        case Kind::SumProjection: return std::get<DirectSumElem>(x).blocks[component_];
        case Kind::BandProjection: {
            VecElem out = std::get<VecElem>(x);
            std::size_t bi = 0;
            for (int c = 0; c < n_; ++c) {
                if (bi < band_.size() && band_[bi] == c) {
                    ++bi;
                } else {
                    out[static_cast<std::size_t>(c)] = Rational(0);
                }
            }
            return out;
        }
    }
    throw std::logic_error("LinMap::apply: unreachable");
}

Element LinMap::adjoint_apply(const Element& zprime) const {
    switch (kind_) {
        case Kind::Matrix: {
            const auto& z = std::get<VecElem>(zprime);
            VecElem out(m_.cols());
            for (std::size_t c = 0; c < m_.cols(); ++c) {
                Rational s;
                for (std::size_t r = 0; r < m_.rows(); ++r) s += m_.at(r, c) * z[r];
                out[c] = s;
            }
            return out;
        }
        case Kind::DualFunctional: {
            const auto& z = std::get<VecElem>(zprime);
            return scale(z[0], f_);
        }
        case Kind::SumProjection: {
            DirectSumElem out;
            for (int n : sum_.components) out.blocks.emplace_back(static_cast<std::size_t>(n));
            out.blocks[component_] = std::get<VecElem>(zprime);
            return out;
        }
        case Kind::BandProjection: return apply(zprime);
    }
    throw std::logic_error("LinMap::adjoint_apply: unreachable");
}

Element LinMap::second_adjoint_apply(const Element& xpp) const {
    switch (kind_) {
        case Kind::Matrix: return m_.apply(std::get<VecElem>(xpp));
        case Kind::DualFunctional: {
            VecElem out(1);
            out[0] = bidual_apply(xpp, f_, dom_);
            return out;
        }
        case Kind::SumProjection: return std::get<DirectSumElem>(xpp).blocks[component_];
        case Kind::BandProjection: return apply(xpp);
    }
    throw std::logic_error("LinMap::second_adjoint_apply: unreachable");
}

bool LinMap::is_hom() const {
    switch (kind_) {
        case Kind::Matrix: return hom_certificate(m_);
        case Kind::DualFunctional: {
            // A scalar functional is a homomorphism iff it is carried by a
            // single atom of the dual model, with nonnegative weight.
            if (const auto* t = std::get_if<EvConstSeq>(&f_)) {
                if (!t->tail().is_zero()) return false;
                int nonzero = 0;
                for (int i = 1; i <= t->prefix_len(); ++i) {
                    if (t->at(i).is_zero()) continue;
                    ++nonzero;
                    if (t->at(i).sign() < 0) return false;
                }
                return nonzero <= 1;
            }
            if (const auto* d = std::get_if<CDualElem>(&f_)) {
                if (d->a.is_zero()) return d->b.sign() >= 0;
                if (!d->b.is_zero()) return false;
                return d->a.terms().size() == 1 && d->a.terms().front().second.sign() > 0;
            }
            if (const auto* v = std::get_if<VecElem>(&f_)) {
                int nonzero = 0;
                for (std::size_t i = 0; i < v->dim(); ++i) {
                    if ((*v)[i].is_zero()) continue;
                    ++nonzero;
                    if ((*v)[i].sign() < 0) return false;
                }
                return nonzero <= 1;
            }
            return false;
        }
        case Kind::SumProjection:
        case Kind::BandProjection:
            return true;
    }
    throw std::logic_error("LinMap::is_hom: unreachable");
}

bool LinMap::is_positive() const {
    switch (kind_) {
        case Kind::Matrix:
            for (std::size_t r = 0; r < m_.rows(); ++r)
                for (std::size_t c = 0; c < m_.cols(); ++c)
                    if (m_.at(r, c).sign() < 0) return false;
            return true;
        case Kind::DualFunctional:
            return elem_leq(zero_like(f_), f_);
        case Kind::SumProjection:
        case Kind::BandProjection:
            return true;
    }
    throw std::logic_error("LinMap::is_positive: unreachable");
}

int LinMap::map_radius() const {
    switch (kind_) {
        case Kind::Matrix: return static_cast<int>(std::max(m_.rows(), m_.cols()));
        case Kind::DualFunctional: return radius(f_);
        case Kind::SumProjection: {
            int r = 0;
            for (int n : sum_.components) r = std::max(r, n);
            return r;
        }
        case Kind::BandProjection: return n_;
    }
    return 0;
}

std::string LinMap::str() const {
    switch (kind_) {
        case Kind::Matrix: return "matrix";
        case Kind::DualFunctional: return "functional " + to_string(f_);
        case Kind::SumProjection: return "pi_" + std::to_string(component_ + 1);
        case Kind::BandProjection: return "band projection";
    }
    return "?";
}

// ------------------------------------------------------------- RegOperator

RegOperator RegOperator::tensor(TensorOp t) {
    std::vector<SpaceRef> doms;
    doms.reserve(static_cast<std::size_t>(t.arity()));
    for (int n : t.dims()) doms.push_back(SpaceRef::fin_dim(n));
    SpaceRef codom = SpaceRef::fin_dim(t.codomain_dim());
    return RegOperator(std::make_shared<const Rep>(std::move(t)), std::move(doms), codom);
}

RegOperator RegOperator::coord_product(SpaceRef space, int arity) {
    if (arity < 2) throw std::domain_error("coord_product: arity must be >= 2");
    if (space.role() != Role::Primal || space.kind() == SpaceKind::DirectSum)
        throw DomainMismatchError("coord_product: FinDim or sequence model, primal role");
    std::vector<SpaceRef> doms(static_cast<std::size_t>(arity), space);
    return RegOperator(std::make_shared<const Rep>(CoordProduct{space, arity}), std::move(doms),
                       space);
}

RegOperator RegOperator::upper_triangular() {
    std::vector<SpaceRef> doms{SpaceRef::seq_l1(), SpaceRef::seq_l1()};
    return RegOperator(std::make_shared<const Rep>(UpperTriangular{}), std::move(doms),
                       SpaceRef::fin_dim(1));
}

RegOperator RegOperator::finite_rank(std::vector<SpaceRef> domains, std::vector<Element> factors,
                                     SpaceRef codomain, Element v) {
    if (domains.size() != factors.size())
        throw DomainMismatchError("finite_rank: one factor per slot");
    if (domains.empty()) throw std::domain_error("finite_rank: arity must be >= 1");
    for (std::size_t r = 0; r < domains.size(); ++r)
        domains[r].dual_model().require(factors[r], "finite_rank factor");
    codomain.require(v, "finite_rank v");
    return RegOperator(std::make_shared<const Rep>(FiniteRank{std::move(factors), std::move(v)}),
                       std::move(domains), codomain);
}

RegOperator RegOperator::weighted_diagonal(SpaceRef space, int arity, EvConstSeq weights) {
    if (arity < 1) throw std::domain_error("weighted_diagonal: arity must be >= 1");
    if (space.role() != Role::Primal || space.kind() == SpaceKind::DirectSum)
        throw DomainMismatchError("weighted_diagonal: FinDim or sequence model, primal role");
    std::vector<SpaceRef> doms(static_cast<std::size_t>(arity), space);
    return RegOperator(
        std::make_shared<const Rep>(WeightedDiagonal{space, arity, std::move(weights)}),
        std::move(doms), space);
}

RegOperator RegOperator::hom_composite(LinMap u, RegOperator inner) {
    if (!(u.domain() == inner.codomain()))
        throw DomainMismatchError("hom_composite: codomain of inner must match domain of u");
    SpaceRef codom = u.codomain();
    std::vector<SpaceRef> doms = inner.domains();
    auto rep = std::make_shared<const Rep>(
        HomComposite{std::move(u), std::make_shared<const RegOperator>(std::move(inner))});
    return RegOperator(std::move(rep), std::move(doms), codom);
}

RegOperator RegOperator::sum_tuple(std::vector<RegOperator> components, DirectSumDesc desc) {
    if (components.empty()) throw std::domain_error("sum_tuple: needs components");
    if (components.size() != desc.components.size())
        throw DomainMismatchError("sum_tuple: one operator per summand");
    const std::vector<SpaceRef>& doms = components.front().domains();
    for (std::size_t k = 0; k < components.size(); ++k) {
        if (!(components[k].domains() == doms))
            throw DomainMismatchError("sum_tuple: all components share the domain tuple");
        if (!(components[k].codomain() == SpaceRef::fin_dim(desc.components[k])))
            throw DomainMismatchError("sum_tuple: component codomain must match the summand");
    }
    SpaceRef codom = SpaceRef::direct_sum(desc);
    std::vector<SpaceRef> dcopy = doms;
    return RegOperator(std::make_shared<const Rep>(SumTuple{std::move(components)}),
                       std::move(dcopy), codom);
}

RegOperator RegOperator::lin_comb(std::vector<std::pair<Rational, RegOperator>> terms) {
    if (terms.empty()) throw std::domain_error("lin_comb: needs at least one term");
    const std::vector<SpaceRef>& doms = terms.front().second.domains();
    const SpaceRef codom = terms.front().second.codomain();
    for (const auto& [c, op] : terms)
        if (!(op.domains() == doms) || !(op.codomain() == codom))
            throw DomainMismatchError("lin_comb: all terms share domains and codomain");
    std::vector<SpaceRef> dcopy = doms;
    return RegOperator(std::make_shared<const Rep>(LinComb{std::move(terms)}), std::move(dcopy),
                       codom);
}

std::string RegOperator::kind_name() const {
    return std::visit(
        [](const auto& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, TensorOp>) return "tensor";
            else if constexpr (std::is_same_v<T, CoordProduct>) return "coord_product";
            else if constexpr (std::is_same_v<T, UpperTriangular>) return "upper_triangular";
            else if constexpr (std::is_same_v<T, FiniteRank>) return "finite_rank";
            else if constexpr (std::is_same_v<T, WeightedDiagonal>) return "weighted_diagonal";
            else if constexpr (std::is_same_v<T, HomComposite>) return "hom_composite";
            else if constexpr (std::is_same_v<T, SumTuple>) return "sum_tuple";
            else return "lin_comb";
        },
        *rep_);
}

namespace {

/// Coordinatewise product across a list of same-model primal elements.
Element coordinate_product(const SpaceRef& space, const std::vector<Element>& args) {
    switch (space.kind()) {
        case SpaceKind::FinDim: {
            VecElem out = std::get<VecElem>(args.front());
            for (std::size_t r = 1; r < args.size(); ++r) {
                const auto& x = std::get<VecElem>(args[r]);
                for (std::size_t i = 0; i < out.dim(); ++i) out[i] *= x[i];
            }
            return out;
        }
        case SpaceKind::SeqL1: {
            FinSupSeq out = std::get<FinSupSeq>(args.front());
            for (std::size_t r = 1; r < args.size(); ++r)
                out = hadamard(out, std::get<FinSupSeq>(args[r]));
            return out;
        }
        case SpaceKind::SeqC: {
            EvConstSeq out = std::get<EvConstSeq>(args.front());
            for (std::size_t r = 1; r < args.size(); ++r)
                out = hadamard(out, std::get<EvConstSeq>(args[r]));
            return out;
        }
        default:
            throw DomainMismatchError("coordinate_product: unsupported space");
    }
}

Element apply_weights(const SpaceRef& space, const EvConstSeq& w, const Element& x) {
    switch (space.kind()) {
        case SpaceKind::FinDim: {
            VecElem out = std::get<VecElem>(x);
            for (std::size_t i = 0; i < out.dim(); ++i) out[i] *= w.at(static_cast<int>(i) + 1);
            return out;
        }
        case SpaceKind::SeqL1: {
            const auto& xs = std::get<FinSupSeq>(x);
            std::vector<std::pair<int, Rational>> terms;
            terms.reserve(xs.terms().size());
            for (const auto& [i, v] : xs.terms()) terms.emplace_back(i, w.at(i) * v);
            return FinSupSeq(std::move(terms));
        }
        case SpaceKind::SeqC:
            return hadamard(w, std::get<EvConstSeq>(x));
        default:
            throw DomainMismatchError("apply_weights: unsupported space");
    }
}

Rational upper_triangular_value(const FinSupSeq& x, const FinSupSeq& y) {
    // sum_{i <= j} x_i y_j = sum_j y_j * (prefix sum of x up to j)
    Rational out;
    for (const auto& [j, yv] : y.terms()) {
        Rational px;
        for (const auto& [i, xv] : x.terms()) {
            if (i > j) break;
            px += xv;
        }
        out += px * yv;
    }
    return out;
}

}  // namespace

Element RegOperator::evaluate(const std::vector<Element>& args) const {
    if (static_cast<int>(args.size()) != arity())
        throw DomainMismatchError("evaluate: arity mismatch");
    for (int r = 0; r < arity(); ++r)
        domains_[static_cast<std::size_t>(r)].require(args[static_cast<std::size_t>(r)],
                                                      "evaluate");
    return std::visit(
        [&](const auto& r) -> Element {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, TensorOp>) {
                std::vector<VecElem> vs;
                vs.reserve(args.size());
                for (const auto& a : args) vs.push_back(std::get<VecElem>(a));
                return r.apply(vs);
            } else if constexpr (std::is_same_v<T, CoordProduct>) {
                return coordinate_product(r.space, args);
            } else if constexpr (std::is_same_v<T, UpperTriangular>) {
                VecElem out(1);
                out[0] = upper_triangular_value(std::get<FinSupSeq>(args[0]),
                                                std::get<FinSupSeq>(args[1]));
                return out;
            } else if constexpr (std::is_same_v<T, FiniteRank>) {
                Rational c(1);
                for (std::size_t k = 0; k < args.size(); ++k)
                    c *= pairing(r.factors[k], args[k], domains_[k]);
                return scale(c, r.v);
            } else if constexpr (std::is_same_v<T, WeightedDiagonal>) {
                return apply_weights(r.space, r.weights, coordinate_product(r.space, args));
            } else if constexpr (std::is_same_v<T, HomComposite>) {
                return r.u.apply(r.inner->evaluate(args));
            } else if constexpr (std::is_same_v<T, SumTuple>) {
                DirectSumElem out;
                out.blocks.reserve(r.components.size());
                for (const auto& comp : r.components)
                    out.blocks.push_back(std::get<VecElem>(comp.evaluate(args)));
                return out;
            } else {
                Element acc = codomain_.zero();
                for (const auto& [c, op] : r.terms) acc = add(acc, scale(c, op.evaluate(args)));
                return acc;
            }
        },
        *rep_);
}

int RegOperator::op_radius() const {
    return std::visit(
        [&](const auto& r) -> int {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, TensorOp>) {
                int m = r.codomain_dim();
                for (int n : r.dims()) m = std::max(m, n);
                return m;
            } else if constexpr (std::is_same_v<T, CoordProduct>) {
                return r.space.kind() == SpaceKind::FinDim ? r.space.dim() : 0;
            } else if constexpr (std::is_same_v<T, UpperTriangular>) {
                return 0;
            } else if constexpr (std::is_same_v<T, FiniteRank>) {
                int m = radius(r.v);
                for (const auto& f : r.factors) m = std::max(m, radius(f));
                return m;
            } else if constexpr (std::is_same_v<T, WeightedDiagonal>) {
                return r.weights.prefix_len() +
                       (r.space.kind() == SpaceKind::FinDim ? r.space.dim() : 0);
            } else if constexpr (std::is_same_v<T, HomComposite>) {
                return r.inner->op_radius() + r.u.map_radius();
            } else if constexpr (std::is_same_v<T, SumTuple>) {
                int m = 0;
                for (const auto& comp : r.components) m = std::max(m, comp.op_radius());
                return m;
            } else {
                int m = 0;
                for (const auto& [c, op] : r.terms) m = std::max(m, op.op_radius());
                return m;
            }
        },
        *rep_);
}

// --------------------------------------------------------- slice_functional

namespace {

/// Fixed arguments as eventually-constant coefficient sequences (l1/c); used
/// to build coordinatewise slice coefficients in one code path.
EvConstSeq as_evconst(const Element& x) {
    if (const auto* s = std::get_if<FinSupSeq>(&x)) return EvConstSeq::from_finsup(*s);
    return std::get<EvConstSeq>(x);
}

}  // namespace

Element slice_functional(const RegOperator& a, const std::vector<std::optional<Element>>& fixed,
                         int dot, const Element& yprime) {
    const int m = a.arity();
    if (static_cast<int>(fixed.size()) != m)
        throw DomainMismatchError("slice_functional: need one entry per slot");
    if (dot < 1 || dot > m || fixed[static_cast<std::size_t>(dot) - 1].has_value())
        throw DomainMismatchError("slice_functional: the dot slot must be the unfixed one");
    for (int r = 1; r <= m; ++r)
        if (r != dot) {
            if (!fixed[static_cast<std::size_t>(r) - 1].has_value())
                throw DomainMismatchError("slice_functional: exactly one unfixed slot");
            a.domains()[static_cast<std::size_t>(r) - 1].require(
                *fixed[static_cast<std::size_t>(r) - 1], "slice_functional");
        }
    a.codomain().dual_model().require(yprime, "slice_functional(y')");
    const SpaceRef slot = a.domains()[static_cast<std::size_t>(dot) - 1];

    return std::visit(
        [&](const auto& r) -> Element {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, TensorOp>) {
                const auto& y = std::get<VecElem>(yprime);
                VecElem c(static_cast<std::size_t>(slot.dim()));
                for (const auto& term : r.terms()) {
                    Rational p = term.value * y[static_cast<std::size_t>(term.j) - 1];
                    if (p.is_zero()) continue;
                    for (int s = 1; s <= a.arity(); ++s) {
                        if (s == dot) continue;
                        const auto& xs = std::get<VecElem>(*fixed[static_cast<std::size_t>(s) - 1]);
                        p *= xs[static_cast<std::size_t>(term.idx[static_cast<std::size_t>(s) - 1]) - 1];
                        if (p.is_zero()) break;
                    }
                    if (!p.is_zero())
                        c[static_cast<std::size_t>(term.idx[static_cast<std::size_t>(dot) - 1]) - 1] += p;
                }
                return c;
            } else if constexpr (std::is_same_v<T, CoordProduct> ||
                                 std::is_same_v<T, WeightedDiagonal>) {
                const SpaceRef& sp = r.space;
                EvConstSeq weights = EvConstSeq::constant(Rational(1));
                if constexpr (std::is_same_v<T, WeightedDiagonal>) weights = r.weights;
                if (sp.kind() == SpaceKind::FinDim) {
                    const auto& y = std::get<VecElem>(yprime);
                    VecElem c(y.coords().size());
                    for (std::size_t i = 0; i < c.dim(); ++i) {
                        Rational p = y[i] * weights.at(static_cast<int>(i) + 1);
                        for (int s = 1; s <= a.arity(); ++s) {
                            if (s == dot || p.is_zero()) continue;
                            p *= std::get<VecElem>(*fixed[static_cast<std::size_t>(s) - 1])[i];
                        }
                        c[i] = p;
                    }
                    return c;
                }
                if (sp.kind() == SpaceKind::SeqL1) {
                    // coefficients f_i w_i prod_r x_{r,i}; eventually constant
                    // (tail 0 whenever at least one fixed factor is finitely
                    // supported).
                    EvConstSeq c = hadamard(std::get<EvConstSeq>(yprime), weights);
                    for (int s = 1; s <= a.arity(); ++s)
                        if (s != dot)
                            c = hadamard(c, as_evconst(*fixed[static_cast<std::size_t>(s) - 1]));
                    return c;
                }
                // c-model: y' = (b, a) acts by b*tail + sum a_i (.)_i.
                const auto& y = std::get<CDualElem>(yprime);
                Rational b = y.b * weights.tail();
                std::vector<std::pair<int, Rational>> terms;
                for (const auto& [i, av] : y.a.terms()) terms.emplace_back(i, av * weights.at(i));
                FinSupSeq coef(std::move(terms));
                for (int s = 1; s <= a.arity(); ++s) {
                    if (s == dot) continue;
                    const auto& xs = std::get<EvConstSeq>(*fixed[static_cast<std::size_t>(s) - 1]);
                    b *= xs.tail();
                    std::vector<std::pair<int, Rational>> t2;
                    for (const auto& [i, cv] : coef.terms()) t2.emplace_back(i, cv * xs.at(i));
                    coef = FinSupSeq(std::move(t2));
                }
                return CDualElem{b, coef};
            } else if constexpr (std::is_same_v<T, UpperTriangular>) {
                const Rational lambda = std::get<VecElem>(yprime)[0];
                if (dot == 2) {
                    // c_j = lambda * sum_{i<=j} x_i ; tail = lambda * sum x
                    const auto& x = std::get<FinSupSeq>(*fixed[0]);
                    const int len = x.support_bound();
                    std::vector<Rational> prefix(static_cast<std::size_t>(len));
                    Rational run;
                    for (int j = 1; j <= len; ++j) {
                        run += x.at(j);
                        prefix[static_cast<std::size_t>(j) - 1] = lambda * run;
                    }
                    return EvConstSeq(std::move(prefix), lambda * run);
                }
                // dot == 1: d_i = lambda * sum_{j>=i} y_j ; tail 0
                const auto& y = std::get<FinSupSeq>(*fixed[1]);
                const int len = y.support_bound();
                std::vector<Rational> prefix(static_cast<std::size_t>(len));
                Rational run;
                for (int i = len; i >= 1; --i) {
                    run += y.at(i);
                    prefix[static_cast<std::size_t>(i) - 1] = lambda * run;
                }
                return EvConstSeq(std::move(prefix), Rational(0));
            } else if constexpr (std::is_same_v<T, FiniteRank>) {
                Rational c = pairing(yprime, r.v, a.codomain());
                for (int s = 1; s <= a.arity(); ++s)
                    if (s != dot)
                        c *= pairing(r.factors[static_cast<std::size_t>(s) - 1],
                                     *fixed[static_cast<std::size_t>(s) - 1],
                                     a.domains()[static_cast<std::size_t>(s) - 1]);
                return scale(c, r.factors[static_cast<std::size_t>(dot) - 1]);
            } else if constexpr (std::is_same_v<T, HomComposite>) {
                return slice_functional(*r.inner, fixed, dot, r.u.adjoint_apply(yprime));
            } else if constexpr (std::is_same_v<T, SumTuple>) {
                const auto& y = std::get<DirectSumElem>(yprime);
                Element acc = slot.dual_model().zero();
                for (std::size_t k = 0; k < r.components.size(); ++k)
                    acc = add(acc, slice_functional(r.components[k], fixed, dot,
                                                    Element(y.blocks[k])));
                return acc;
            } else {
                Element acc = slot.dual_model().zero();
                for (const auto& [c, op] : r.terms)
                    acc = add(acc, scale(c, slice_functional(op, fixed, dot, yprime)));
                return acc;
            }
        },
        a.rep());
}

// ------------------------------------------------- modulus and positivity

RegOperator modulus_op(const RegOperator& a) {
    return std::visit(
        [&](const auto& r) -> RegOperator {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, TensorOp>) {
                return RegOperator::tensor(r.entrywise_abs());
            } else if constexpr (std::is_same_v<T, CoordProduct>) {
                return a;  // positive
            } else if constexpr (std::is_same_v<T, UpperTriangular>) {
                return a;  // positive
            } else if constexpr (std::is_same_v<T, FiniteRank>) {
                std::vector<Element> fs;
                fs.reserve(r.factors.size());
                for (const auto& f : r.factors) fs.push_back(elem_abs(f));
                return RegOperator::finite_rank(a.domains(), std::move(fs), a.codomain(),
                                                elem_abs(r.v));
            } else if constexpr (std::is_same_v<T, WeightedDiagonal>) {
                EvConstSeq w = sup(r.weights, -r.weights);
                return RegOperator::weighted_diagonal(r.space, r.arity, std::move(w));
            } else if constexpr (std::is_same_v<T, HomComposite>) {
                if (!r.u.is_hom())
                    throw UnsupportedError("modulus_op: hom_composite with a non-hom outer map");
                return RegOperator::hom_composite(r.u, modulus_op(*r.inner));
            } else if constexpr (std::is_same_v<T, SumTuple>) {
                std::vector<RegOperator> comps;
                comps.reserve(r.components.size());
                for (const auto& comp : r.components) comps.push_back(modulus_op(comp));
                return RegOperator::sum_tuple(std::move(comps), a.codomain().sum());
            } else {
                throw UnsupportedError("modulus_op: lin_comb carries no modulus rule");
            }
        },
        a.rep());
}

RegOperator pos_part_op(const RegOperator& a) {
    if (const auto* t = std::get_if<TensorOp>(&a.rep()))
        return RegOperator::tensor(t->entrywise_pos());
    const Rational half(1, 2);
    return RegOperator::lin_comb({{half, modulus_op(a)}, {half, a}});
}

RegOperator neg_part_op(const RegOperator& a) {
    if (const auto* t = std::get_if<TensorOp>(&a.rep()))
        return RegOperator::tensor(t->entrywise_neg());
    const Rational half(1, 2);
    return RegOperator::lin_comb({{half, modulus_op(a)}, {-half, a}});
}

namespace {

/// Small deterministic family of positive primal elements of a space.
std::vector<Element> positive_probe_elements(const SpaceRef& space) {
    std::vector<Element> out;
    switch (space.kind()) {
        case SpaceKind::FinDim: {
            const int n = space.dim();
            for (int i = 0; i < n; ++i)
                out.emplace_back(VecElem::unit(static_cast<std::size_t>(n),
                                               static_cast<std::size_t>(i)));
            VecElem ones(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) ones[static_cast<std::size_t>(i)] = Rational(1);
            out.emplace_back(std::move(ones));
            break;
        }
        case SpaceKind::SeqL1:
            for (int i = 1; i <= 4; ++i) out.emplace_back(FinSupSeq::unit(i));
            out.emplace_back(FinSupSeq({{1, Rational(1)}, {2, Rational(2)}}));
            break;
        case SpaceKind::SeqC:
            for (int i = 1; i <= 3; ++i) out.emplace_back(EvConstSeq::unit(i));
            out.emplace_back(EvConstSeq::constant(Rational(1)));
            out.emplace_back(EvConstSeq({Rational(0)}, Rational(1)));  // 1 - delta_1
            break;
        case SpaceKind::DirectSum:
            break;  // not a catalog operator domain
    }
    return out;
}

bool rule_positive(const RegOperator& a);

bool rule_positive_rep(const RegOperator::Rep& rep) {
    return std::visit(
        [&](const auto& r) -> bool {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, TensorOp>) {
                for (const auto& term : r.terms())
                    if (term.value.sign() < 0) return false;
                return true;
            } else if constexpr (std::is_same_v<T, CoordProduct>) {
                return true;
            } else if constexpr (std::is_same_v<T, UpperTriangular>) {
                return true;
            } else if constexpr (std::is_same_v<T, FiniteRank>) {
                if (is_zero_elem(r.v)) return true;
                int sign = 1;
                for (const auto& f : r.factors) {
                    if (is_zero_elem(f)) return true;
                    if (elem_leq(zero_like(f), f)) {
                        continue;
                    } else if (elem_leq(f, zero_like(f))) {
                        sign = -sign;
                    } else {
                        return false;  // mixed-sign factor
                    }
                }
                const Element z = zero_like(r.v);
                return sign > 0 ? elem_leq(z, r.v) : elem_leq(r.v, z);
            } else if constexpr (std::is_same_v<T, WeightedDiagonal>) {
                return leq(EvConstSeq{}, r.weights);
            } else if constexpr (std::is_same_v<T, HomComposite>) {
                return r.u.is_positive() && rule_positive(*r.inner);
            } else if constexpr (std::is_same_v<T, SumTuple>) {
                for (const auto& comp : r.components)
                    if (!rule_positive(comp)) return false;
                return true;
            } else {
                for (const auto& [c, op] : r.terms)
                    if (c.sign() < 0 || !rule_positive(op)) return false;
                return true;
            }
        },
        rep);
}

bool rule_positive(const RegOperator& a) { return rule_positive_rep(a.rep()); }

}  // namespace

bool is_positive_op(const RegOperator& a) {
    const bool rule = rule_positive(a);
    if (rule) {
        // Definitional cross-check on positive tuples; a false certificate is
        // a hard error, not a report line.
        std::vector<std::vector<Element>> tuples{{}};
        for (const SpaceRef& dom : a.domains()) {
            std::vector<std::vector<Element>> next;
            for (const auto& partial : tuples)
                for (const auto& x : positive_probe_elements(dom)) {
                    auto t = partial;
                    t.push_back(x);
                    next.push_back(std::move(t));
                    if (next.size() >= 128) break;
                }
            tuples = std::move(next);
        }
        for (const auto& t : tuples) {
            if (t.size() != static_cast<std::size_t>(a.arity())) continue;
            const Element v = a.evaluate(t);
            if (!elem_leq(zero_like(v), v))
                throw InternalInvariantViolation(
                    "is_positive_op: rule said positive, evaluation found a negative value");
        }
    }
    return rule;
}

RegOperator compose_hom(const LinMap& u, const RegOperator& a) {
    return RegOperator::hom_composite(u, a);
}

}  // namespace arens
