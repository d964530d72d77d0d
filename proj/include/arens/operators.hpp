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

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arens/elements.hpp"
#include "arens/hom.hpp"
#include "arens/space.hpp"

namespace arens {

/// Permutation of {1..m}, 1-based.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int m);
    /// The permutation realizing the iterated-adjoint chain: slots are closed
    /// in the order m, m-1, ..., 1. For m = 2 this is the classical Arens
    /// transpose order.
    static Permutation theta(int m);
    static std::vector<Permutation> all(int m);

    [[nodiscard]] int size() const { return static_cast<int>(images_.size()); }
    int operator()(int k) const { return images_[static_cast<std::size_t>(k) - 1]; }
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Dense regular m-linear operator between FinDim lattices, stored sparsely
/// by nonzero entries. A(x_1..x_m)_j = sum entries[i_1..i_m, j] prod x_r[i_r].
class TensorOp {
public:
    TensorOp(std::vector<int> dims, int codomain_dim);

    [[nodiscard]] int arity() const { return static_cast<int>(dims_.size()); }
    [[nodiscard]] const std::vector<int>& dims() const { return dims_; }
    [[nodiscard]] int codomain_dim() const { return codomain_dim_; }

    /// idx is 1-based per slot, j is 1-based output coordinate.
    void set_entry(const std::vector<int>& idx, int j, Rational v);
    [[nodiscard]] Rational entry(const std::vector<int>& idx, int j) const;

    struct Term {
        std::vector<int> idx;  // 1-based multi-index
        int j;                 // 1-based output coordinate
        Rational value;
    };
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }

    [[nodiscard]] VecElem apply(const std::vector<VecElem>& args) const;
    [[nodiscard]] TensorOp entrywise_abs() const;
    [[nodiscard]] TensorOp entrywise_pos() const;
    [[nodiscard]] TensorOp entrywise_neg() const;

    friend bool operator==(const TensorOp&, const TensorOp&) = default;

private:
    std::vector<int> dims_;
    int codomain_dim_;
    std::vector<Term> terms_;  // sorted by (idx, j), no zero values
};

/// Lattice-relevant linear maps used for composition, naturality and band
/// projections.
class LinMap {
public:
    /// FinDim(cols) -> FinDim(rows).
    static LinMap matrix(RatMatrix m);
    /// Dual-model functional on a sequence-model (or FinDim) space, viewed as
    /// a map into FinDim(1).
    static LinMap dual_functional(SpaceRef domain, Element functional);
    /// pi_k : direct sum -> k-th component (0-based k).
    static LinMap sum_projection(DirectSumDesc desc, std::size_t component);
    /// Band projection of FinDim(n) onto a set of coordinate atoms (0-based).
    static LinMap band_projection(int n, std::vector<int> band);

    [[nodiscard]] SpaceRef domain() const;
    [[nodiscard]] SpaceRef codomain() const;
    [[nodiscard]] Element apply(const Element& x) const;
    /// z' |-> z' o u on dual models.
    [[nodiscard]] Element adjoint_apply(const Element& zprime) const;
    /// u'' on bidual models: u''(x'')(z') = x''(z' o u).
    [[nodiscard]] Element second_adjoint_apply(const Element& xpp) const;
    [[nodiscard]] bool is_hom() const;
    [[nodiscard]] bool is_positive() const;
    [[nodiscard]] int map_radius() const;
    [[nodiscard]] std::string str() const;

private:
    enum class Kind { Matrix, DualFunctional, SumProjection, BandProjection };
    Kind kind_ = Kind::Matrix;
    RatMatrix m_;
    SpaceRef dom_ = SpaceRef::fin_dim(1);
    Element f_ = VecElem(1);
    DirectSumDesc sum_;
    std::size_t component_ = 0;
    int n_ = 0;
    std::vector<int> band_;
};

/// Regular m-linear operator: dense tensor or structured catalog variant.
class RegOperator {
public:
    struct CoordProduct {
        SpaceRef space;
        int arity;
    };
    struct UpperTriangular {};  // l1 x l1 -> R, B(x,y) = sum_{i<=j} x_i y_j
    struct FiniteRank {
        std::vector<Element> factors;  // dual-model functionals, one per slot
        Element v;                     // codomain vector
    };
    struct WeightedDiagonal {
        SpaceRef space;
        int arity;
        EvConstSeq weights;
    };
    struct HomComposite {
        LinMap u;
        std::shared_ptr<const RegOperator> inner;
    };
    struct SumTuple {
        std::vector<RegOperator> components;
    };
    struct LinComb {
        std::vector<std::pair<Rational, RegOperator>> terms;
    };

    using Rep = std::variant<TensorOp, CoordProduct, UpperTriangular, FiniteRank,
                             WeightedDiagonal, HomComposite, SumTuple, LinComb>;

    static RegOperator tensor(TensorOp t);
    static RegOperator coord_product(SpaceRef space, int arity);
    static RegOperator upper_triangular();
    static RegOperator finite_rank(std::vector<SpaceRef> domains, std::vector<Element> factors,
                                   SpaceRef codomain, Element v);
    static RegOperator weighted_diagonal(SpaceRef space, int arity, EvConstSeq weights);
    static RegOperator hom_composite(LinMap u, RegOperator inner);
    static RegOperator sum_tuple(std::vector<RegOperator> components, DirectSumDesc desc);
    static RegOperator lin_comb(std::vector<std::pair<Rational, RegOperator>> terms);

    [[nodiscard]] int arity() const { return static_cast<int>(domains_.size()); }
    [[nodiscard]] const std::vector<SpaceRef>& domains() const { return domains_; }
    [[nodiscard]] const SpaceRef& codomain() const { return codomain_; }
    [[nodiscard]] const Rep& rep() const { return *rep_; }
    [[nodiscard]] std::string kind_name() const;

    [[nodiscard]] Element evaluate(const std::vector<Element>& args) const;
    /// Stabilization radius contributed by the operator itself.
    [[nodiscard]] int op_radius() const;

private:
    RegOperator(std::shared_ptr<const Rep> rep, std::vector<SpaceRef> domains, SpaceRef codomain)
        : rep_(std::move(rep)), domains_(std::move(domains)), codomain_(std::move(codomain)) {}

    std::shared_ptr<const Rep> rep_;
    std::vector<SpaceRef> domains_;
    SpaceRef codomain_ = SpaceRef::fin_dim(1);
};

/// The functional x |-> y'(A(..., x, ...)) with the dot at slot `dot`
/// (1-based), every other slot fixed, represented exactly in the dual model
/// of E_dot. Throws NotRepresentableError if the slice leaves the model.
Element slice_functional(const RegOperator& a, const std::vector<std::optional<Element>>& fixed,
                         int dot, const Element& yprime);

/// Entrywise / rule-based operator modulus. pos/neg parts satisfy
/// A = pos - neg with both parts positive.
RegOperator modulus_op(const RegOperator& a);
RegOperator pos_part_op(const RegOperator& a);
RegOperator neg_part_op(const RegOperator& a);

/// Rule-based positivity, cross-checked definitionally on positive generator
/// tuples (a certified-positive operator evaluating negatively is a hard
/// error).
bool is_positive_op(const RegOperator& a);

/// u o A with evaluate distributing over the composition.
RegOperator compose_hom(const LinMap& u, const RegOperator& a);

}  // namespace arens
