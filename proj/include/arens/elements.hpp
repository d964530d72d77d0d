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

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arens/rational.hpp"

namespace arens {

/// Dense exact-rational vector with coordinatewise order.
class VecElem {
public:
    VecElem() = default;
    explicit VecElem(std::size_t n) : c_(n) {}
    explicit VecElem(std::vector<Rational> c) : c_(std::move(c)) {}
    static VecElem unit(std::size_t n, std::size_t i);

    [[nodiscard]] std::size_t dim() const { return c_.size(); }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    [[nodiscard]] const std::vector<Rational>& coords() const { return c_; }

    friend bool operator==(const VecElem&, const VecElem&) = default;

private:
    std::vector<Rational> c_;
};

VecElem operator+(const VecElem& a, const VecElem& b);
VecElem operator-(const VecElem& a, const VecElem& b);
VecElem operator-(const VecElem& a);
VecElem operator*(const Rational& s, const VecElem& a);
VecElem sup(const VecElem& a, const VecElem& b);
VecElem inf(const VecElem& a, const VecElem& b);
bool leq(const VecElem& a, const VecElem& b);
Rational dot(const VecElem& a, const VecElem& b);

/// Finitely supported sequence, 1-based indices. Canonical: sorted support,
/// no stored zeros.
class FinSupSeq {
public:
    FinSupSeq() = default;
    /// Terms may be unsorted / contain zeros / repeat indices (summed).
    explicit FinSupSeq(std::vector<std::pair<int, Rational>> terms);
    static FinSupSeq unit(int i, Rational v = Rational(1));

    [[nodiscard]] Rational at(int i) const;
    [[nodiscard]] const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /// Largest support index (0 when zero).
    [[nodiscard]] int support_bound() const { return terms_.empty() ? 0 : terms_.back().first; }

    friend bool operator==(const FinSupSeq&, const FinSupSeq&) = default;

private:
    std::vector<std::pair<int, Rational>> terms_;
};

FinSupSeq operator+(const FinSupSeq& a, const FinSupSeq& b);
FinSupSeq operator-(const FinSupSeq& a, const FinSupSeq& b);
FinSupSeq operator-(const FinSupSeq& a);
FinSupSeq operator*(const Rational& s, const FinSupSeq& a);
FinSupSeq sup(const FinSupSeq& a, const FinSupSeq& b);
FinSupSeq inf(const FinSupSeq& a, const FinSupSeq& b);
bool leq(const FinSupSeq& a, const FinSupSeq& b);
/// Coordinatewise product (both factors finitely supported).
FinSupSeq hadamard(const FinSupSeq& a, const FinSupSeq& b);

/// Eventually constant sequence, 1-based. Canonical form: the last prefix
/// entry differs from the tail (or the prefix is empty), so equality is
/// structural equality.
class EvConstSeq {
public:
    EvConstSeq() : tail_(0) {}
    EvConstSeq(std::vector<Rational> prefix, Rational tail);
    static EvConstSeq constant(Rational c) { return EvConstSeq({}, std::move(c)); }
    /// delta_i: 1 at coordinate i, 0 elsewhere.
    static EvConstSeq unit(int i, Rational v = Rational(1));
    static EvConstSeq from_finsup(const FinSupSeq& a);

    [[nodiscard]] Rational at(int i) const;
    [[nodiscard]] int prefix_len() const { return static_cast<int>(prefix_.size()); }
    [[nodiscard]] const std::vector<Rational>& prefix() const { return prefix_; }
    [[nodiscard]] const Rational& tail() const { return tail_; }
    [[nodiscard]] bool is_zero() const { return prefix_.empty() && tail_.is_zero(); }

    friend bool operator==(const EvConstSeq&, const EvConstSeq&) = default;

private:
    std::vector<Rational> prefix_;
    Rational tail_;
};

EvConstSeq operator+(const EvConstSeq& a, const EvConstSeq& b);
EvConstSeq operator-(const EvConstSeq& a, const EvConstSeq& b);
EvConstSeq operator-(const EvConstSeq& a);
EvConstSeq operator*(const Rational& s, const EvConstSeq& a);
EvConstSeq sup(const EvConstSeq& a, const EvConstSeq& b);
EvConstSeq inf(const EvConstSeq& a, const EvConstSeq& b);
bool leq(const EvConstSeq& a, const EvConstSeq& b);
EvConstSeq hadamard(const EvConstSeq& a, const EvConstSeq& b);

/// Element of the c-model order dual: acts on an eventually constant x by
/// b*tail(x) + sum a_i x_i. Lattice operations are coordinatewise on (b, a).
struct CDualElem {
    Rational b;
    FinSupSeq a;
    friend bool operator==(const CDualElem&, const CDualElem&) = default;
};

/// Element of the c-model order bidual: acts on a CDualElem (b, a) by
/// beta*b + sum t_i a_i.
struct CBidualElem {
    Rational beta;
    EvConstSeq t;
    friend bool operator==(const CBidualElem&, const CBidualElem&) = default;
};

/// Element of the l1-model order bidual: acts on an eventually constant t by
/// sum a_i t_i + mu*tail(t). The generalized limit L is (0, 1).
struct L1BidualElem {
    FinSupSeq a;
    Rational mu;
    friend bool operator==(const L1BidualElem&, const L1BidualElem&) = default;
};

/// Element of a finite direct sum of FinDim lattices; blockwise order.
struct DirectSumElem {
    std::vector<VecElem> blocks;
    friend bool operator==(const DirectSumElem&, const DirectSumElem&) = default;
};

CDualElem operator+(const CDualElem& x, const CDualElem& y);
CDualElem operator-(const CDualElem& x, const CDualElem& y);
CDualElem operator*(const Rational& s, const CDualElem& x);
CDualElem sup(const CDualElem& x, const CDualElem& y);
CDualElem inf(const CDualElem& x, const CDualElem& y);
bool leq(const CDualElem& x, const CDualElem& y);
CBidualElem operator+(const CBidualElem& x, const CBidualElem& y);
CBidualElem operator-(const CBidualElem& x, const CBidualElem& y);
CBidualElem operator*(const Rational& s, const CBidualElem& x);
CBidualElem sup(const CBidualElem& x, const CBidualElem& y);
CBidualElem inf(const CBidualElem& x, const CBidualElem& y);
bool leq(const CBidualElem& x, const CBidualElem& y);
L1BidualElem operator+(const L1BidualElem& x, const L1BidualElem& y);
L1BidualElem operator-(const L1BidualElem& x, const L1BidualElem& y);
L1BidualElem operator*(const Rational& s, const L1BidualElem& x);
L1BidualElem sup(const L1BidualElem& x, const L1BidualElem& y);
L1BidualElem inf(const L1BidualElem& x, const L1BidualElem& y);
bool leq(const L1BidualElem& x, const L1BidualElem& y);
DirectSumElem operator+(const DirectSumElem& x, const DirectSumElem& y);
DirectSumElem operator-(const DirectSumElem& x, const DirectSumElem& y);
DirectSumElem operator*(const Rational& s, const DirectSumElem& x);
DirectSumElem sup(const DirectSumElem& x, const DirectSumElem& y);
DirectSumElem inf(const DirectSumElem& x, const DirectSumElem& y);
bool leq(const DirectSumElem& x, const DirectSumElem& y);

/// Any element of any registered space model, all roles.
using Element = std::variant<VecElem, FinSupSeq, EvConstSeq, CDualElem, CBidualElem,
                             L1BidualElem, DirectSumElem>;

Element add(const Element& x, const Element& y);
Element subtract(const Element& x, const Element& y);
Element negate(const Element& x);
Element scale(const Rational& s, const Element& x);
Element elem_sup(const Element& x, const Element& y);
Element elem_inf(const Element& x, const Element& y);
/// abs(x) = sup(x, -x); pos(x) = sup(x, 0); neg(x) = sup(-x, 0).
Element elem_abs(const Element& x);
Element elem_pos(const Element& x);
Element elem_neg(const Element& x);
bool elem_leq(const Element& x, const Element& y);
bool elem_eq(const Element& x, const Element& y);
bool is_zero_elem(const Element& x);
Element zero_like(const Element& x);

/// Largest coordinate index the element references (dimension, support bound
/// or prefix length). Drives probe/stabilization radii.
int radius(const Element& x);

/// Compact human-readable rendering (exact rationals).
std::string to_string(const Element& x);

}  // namespace arens
