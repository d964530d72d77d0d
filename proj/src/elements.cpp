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

#include "arens/elements.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "arens/errors.hpp"

namespace arens {

// ---------------------------------------------------------------- VecElem

VecElem VecElem::unit(std::size_t n, std::size_t i) {
    VecElem e(n);
    e[i] = Rational(1);
    return e;
}

namespace {
void require_same_dim(const VecElem& a, const VecElem& b) {
    if (a.dim() != b.dim()) throw DomainMismatchError("vector dimensions differ");
}
}  // namespace

VecElem operator+(const VecElem& a, const VecElem& b) {
    require_same_dim(a, b);
    VecElem r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

VecElem operator-(const VecElem& a, const VecElem& b) {
    require_same_dim(a, b);
    VecElem r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

VecElem operator-(const VecElem& a) {
    VecElem r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = -a[i];
    return r;
}

VecElem operator*(const Rational& s, const VecElem& a) {
    VecElem r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = s * a[i];
    return r;
}

VecElem sup(const VecElem& a, const VecElem& b) {
    require_same_dim(a, b);
    VecElem r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = max(a[i], b[i]);
    return r;
}

VecElem inf(const VecElem& a, const VecElem& b) {
    require_same_dim(a, b);
    VecElem r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = min(a[i], b[i]);
    return r;
}

bool leq(const VecElem& a, const VecElem& b) {
    require_same_dim(a, b);
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!(a[i] <= b[i])) return false;
    return true;
}

Rational dot(const VecElem& a, const VecElem& b) {
    require_same_dim(a, b);
    Rational s;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

// -------------------------------------------------------------- FinSupSeq

FinSupSeq::FinSupSeq(std::vector<std::pair<int, Rational>> terms) {
    std::map<int, Rational> acc;
    for (auto& [i, v] : terms) {
        if (i < 1) throw std::domain_error("FinSupSeq: indices are 1-based");
        acc[i] += v;
    }
    for (auto& [i, v] : acc)
        if (!v.is_zero()) terms_.emplace_back(i, std::move(v));
}

FinSupSeq FinSupSeq::unit(int i, Rational v) { return FinSupSeq({{i, std::move(v)}}); }

Rational FinSupSeq::at(int i) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                               [](const auto& t, int j) { return t.first < j; });
    if (it != terms_.end() && it->first == i) return it->second;
    return Rational(0);
}

namespace {
/// Merge two supports, combine values coordinatewise (zero off-support).
template <typename F>
FinSupSeq merge_finsup(const FinSupSeq& a, const FinSupSeq& b, F&& combine) {
    std::vector<std::pair<int, Rational>> out;
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    const Rational zero(0);
    while (ia != ea || ib != eb) {
        int i;
        const Rational *va = &zero, *vb = &zero;
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            i = ia->first; va = &ia->second; ++ia;
        } else if (ia == ea || ib->first < ia->first) {
            i = ib->first; vb = &ib->second; ++ib;
        } else {
            i = ia->first; va = &ia->second; vb = &ib->second; ++ia; ++ib;
        }
        Rational v = combine(*va, *vb);
        if (!v.is_zero()) out.emplace_back(i, std::move(v));
    }
    return FinSupSeq(std::move(out));
}
}  // namespace

FinSupSeq operator+(const FinSupSeq& a, const FinSupSeq& b) {
    return merge_finsup(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

FinSupSeq operator-(const FinSupSeq& a, const FinSupSeq& b) {
    return merge_finsup(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

FinSupSeq operator-(const FinSupSeq& a) {
    return merge_finsup(FinSupSeq{}, a, [](const Rational&, const Rational& y) { return -y; });
}

FinSupSeq operator*(const Rational& s, const FinSupSeq& a) {
    std::vector<std::pair<int, Rational>> out;
    if (s.is_zero()) return FinSupSeq{};
    out.reserve(a.terms().size());
    for (const auto& [i, v] : a.terms()) out.emplace_back(i, s * v);
    return FinSupSeq(std::move(out));
}

FinSupSeq sup(const FinSupSeq& a, const FinSupSeq& b) {
    return merge_finsup(a, b, [](const Rational& x, const Rational& y) { return max(x, y); });
}

FinSupSeq inf(const FinSupSeq& a, const FinSupSeq& b) {
    return merge_finsup(a, b, [](const Rational& x, const Rational& y) { return min(x, y); });
}

bool leq(const FinSupSeq& a, const FinSupSeq& b) {
    bool ok = true;
    merge_finsup(a, b, [&ok](const Rational& x, const Rational& y) {
        if (!(x <= y)) ok = false;
        return Rational(0);
    });
    return ok;
}

FinSupSeq hadamard(const FinSupSeq& a, const FinSupSeq& b) {
    return merge_finsup(a, b, [](const Rational& x, const Rational& y) { return x * y; });
}

// -------------------------------------------------------------- EvConstSeq

EvConstSeq::EvConstSeq(std::vector<Rational> prefix, Rational tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

EvConstSeq EvConstSeq::unit(int i, Rational v) {
    if (i < 1) throw std::domain_error("EvConstSeq: indices are 1-based");
    std::vector<Rational> p(static_cast<std::size_t>(i));
    p[static_cast<std::size_t>(i) - 1] = std::move(v);
    return EvConstSeq(std::move(p), Rational(0));
}

EvConstSeq EvConstSeq::from_finsup(const FinSupSeq& a) {
    std::vector<Rational> p(static_cast<std::size_t>(a.support_bound()));
    for (const auto& [i, v] : a.terms()) p[static_cast<std::size_t>(i) - 1] = v;
    return EvConstSeq(std::move(p), Rational(0));
}

Rational EvConstSeq::at(int i) const {
    if (i < 1) throw std::domain_error("EvConstSeq: indices are 1-based");
    if (i <= prefix_len()) return prefix_[static_cast<std::size_t>(i) - 1];
    return tail_;
}

namespace {
template <typename F>
EvConstSeq zip_evconst(const EvConstSeq& a, const EvConstSeq& b, F&& combine) {
    const int n = std::max(a.prefix_len(), b.prefix_len());
    std::vector<Rational> p(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) p[static_cast<std::size_t>(i) - 1] = combine(a.at(i), b.at(i));
    return EvConstSeq(std::move(p), combine(a.tail(), b.tail()));
}
}  // namespace

EvConstSeq operator+(const EvConstSeq& a, const EvConstSeq& b) {
    return zip_evconst(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

EvConstSeq operator-(const EvConstSeq& a, const EvConstSeq& b) {
    return zip_evconst(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

EvConstSeq operator-(const EvConstSeq& a) {
    return zip_evconst(EvConstSeq{}, a, [](const Rational&, const Rational& y) { return -y; });
}

EvConstSeq operator*(const Rational& s, const EvConstSeq& a) {
    return zip_evconst(a, EvConstSeq{}, [&s](const Rational& x, const Rational&) { return s * x; });
}

EvConstSeq sup(const EvConstSeq& a, const EvConstSeq& b) {
    return zip_evconst(a, b, [](const Rational& x, const Rational& y) { return max(x, y); });
}

EvConstSeq inf(const EvConstSeq& a, const EvConstSeq& b) {
    return zip_evconst(a, b, [](const Rational& x, const Rational& y) { return min(x, y); });
}

bool leq(const EvConstSeq& a, const EvConstSeq& b) {
    const int n = std::max(a.prefix_len(), b.prefix_len());
    for (int i = 1; i <= n; ++i)
        if (!(a.at(i) <= b.at(i))) return false;
    return a.tail() <= b.tail();
}

EvConstSeq hadamard(const EvConstSeq& a, const EvConstSeq& b) {
    return zip_evconst(a, b, [](const Rational& x, const Rational& y) { return x * y; });
}

// ------------------------------------------------- dual/bidual model pairs

CDualElem operator+(const CDualElem& x, const CDualElem& y) { return {x.b + y.b, x.a + y.a}; }
CDualElem operator-(const CDualElem& x, const CDualElem& y) { return {x.b - y.b, x.a - y.a}; }
CDualElem operator*(const Rational& s, const CDualElem& x) { return {s * x.b, s * x.a}; }
CDualElem sup(const CDualElem& x, const CDualElem& y) { return {max(x.b, y.b), sup(x.a, y.a)}; }
CDualElem inf(const CDualElem& x, const CDualElem& y) { return {min(x.b, y.b), inf(x.a, y.a)}; }
bool leq(const CDualElem& x, const CDualElem& y) { return x.b <= y.b && leq(x.a, y.a); }

CBidualElem operator+(const CBidualElem& x, const CBidualElem& y) {
    return {x.beta + y.beta, x.t + y.t};
}
CBidualElem operator-(const CBidualElem& x, const CBidualElem& y) {
    return {x.beta - y.beta, x.t - y.t};
}
CBidualElem operator*(const Rational& s, const CBidualElem& x) { return {s * x.beta, s * x.t}; }
CBidualElem sup(const CBidualElem& x, const CBidualElem& y) {
    return {max(x.beta, y.beta), sup(x.t, y.t)};
}
CBidualElem inf(const CBidualElem& x, const CBidualElem& y) {
    return {min(x.beta, y.beta), inf(x.t, y.t)};
}
bool leq(const CBidualElem& x, const CBidualElem& y) {
    return x.beta <= y.beta && leq(x.t, y.t);
}

L1BidualElem operator+(const L1BidualElem& x, const L1BidualElem& y) {
    return {x.a + y.a, x.mu + y.mu};
}
L1BidualElem operator-(const L1BidualElem& x, const L1BidualElem& y) {
    return {x.a - y.a, x.mu - y.mu};
}
L1BidualElem operator*(const Rational& s, const L1BidualElem& x) { return {s * x.a, s * x.mu}; }
L1BidualElem sup(const L1BidualElem& x, const L1BidualElem& y) {
    return {sup(x.a, y.a), max(x.mu, y.mu)};
}
L1BidualElem inf(const L1BidualElem& x, const L1BidualElem& y) {
    return {inf(x.a, y.a), min(x.mu, y.mu)};
}
bool leq(const L1BidualElem& x, const L1BidualElem& y) {
    return leq(x.a, y.a) && x.mu <= y.mu;
}

namespace {
void require_same_blocks(const DirectSumElem& x, const DirectSumElem& y) {
    if (x.blocks.size() != y.blocks.size())
        throw DomainMismatchError("direct sum component counts differ");
}
}  // namespace

DirectSumElem operator+(const DirectSumElem& x, const DirectSumElem& y) {
    require_same_blocks(x, y);
    DirectSumElem r;
    r.blocks.reserve(x.blocks.size());
    for (std::size_t k = 0; k < x.blocks.size(); ++k) r.blocks.push_back(x.blocks[k] + y.blocks[k]);
    return r;
}

DirectSumElem operator-(const DirectSumElem& x, const DirectSumElem& y) {
    require_same_blocks(x, y);
    DirectSumElem r;
    r.blocks.reserve(x.blocks.size());
    for (std::size_t k = 0; k < x.blocks.size(); ++k) r.blocks.push_back(x.blocks[k] - y.blocks[k]);
    return r;
}

DirectSumElem operator*(const Rational& s, const DirectSumElem& x) {
    DirectSumElem r;
    r.blocks.reserve(x.blocks.size());
    for (const auto& b : x.blocks) r.blocks.push_back(s * b);
    return r;
}

DirectSumElem sup(const DirectSumElem& x, const DirectSumElem& y) {
    require_same_blocks(x, y);
    DirectSumElem r;
    r.blocks.reserve(x.blocks.size());
    for (std::size_t k = 0; k < x.blocks.size(); ++k)
        r.blocks.push_back(sup(x.blocks[k], y.blocks[k]));
    return r;
}

DirectSumElem inf(const DirectSumElem& x, const DirectSumElem& y) {
    require_same_blocks(x, y);
    DirectSumElem r;
    r.blocks.reserve(x.blocks.size());
    for (std::size_t k = 0; k < x.blocks.size(); ++k)
        r.blocks.push_back(inf(x.blocks[k], y.blocks[k]));
    return r;
}

bool leq(const DirectSumElem& x, const DirectSumElem& y) {
    require_same_blocks(x, y);
    for (std::size_t k = 0; k < x.blocks.size(); ++k)
        if (!leq(x.blocks[k], y.blocks[k])) return false;
    return true;
}

// ----------------------------------------------------------- variant layer

namespace {
template <typename Op>
Element zip_same(const Element& x, const Element& y, Op&& op, const char* what) {
    if (x.index() != y.index()) throw DomainMismatchError(what);
    return std::visit(
        [&](const auto& a) -> Element {
            using T = std::decay_t<decltype(a)>;
            return op(a, std::get<T>(y));
        },
        x);
}
}  // namespace

Element add(const Element& x, const Element& y) {
    return zip_same(x, y, [](const auto& a, const auto& b) -> Element { return a + b; },
                    "add: element kinds differ");
}

Element subtract(const Element& x, const Element& y) {
    return zip_same(x, y, [](const auto& a, const auto& b) -> Element { return a - b; },
                    "subtract: element kinds differ");
}

Element negate(const Element& x) {
    return subtract(scale(Rational(0), x), x);
}

Element scale(const Rational& s, const Element& x) {
    return std::visit([&](const auto& a) -> Element { return s * a; }, x);
}

Element elem_sup(const Element& x, const Element& y) {
    return zip_same(x, y, [](const auto& a, const auto& b) -> Element { return sup(a, b); },
                    "sup: element kinds differ");
}

Element elem_inf(const Element& x, const Element& y) {
    return zip_same(x, y, [](const auto& a, const auto& b) -> Element { return inf(a, b); },
                    "inf: element kinds differ");
}

Element elem_abs(const Element& x) { return elem_sup(x, negate(x)); }
Element elem_pos(const Element& x) { return elem_sup(x, zero_like(x)); }
Element elem_neg(const Element& x) { return elem_sup(negate(x), zero_like(x)); }

bool elem_leq(const Element& x, const Element& y) {
    if (x.index() != y.index()) throw DomainMismatchError("leq: element kinds differ");
    return std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            return leq(a, std::get<T>(y));
        },
        x);
}

Element zero_like(const Element& x) { return scale(Rational(0), x); }

bool elem_eq(const Element& x, const Element& y) {
    if (x.index() != y.index()) return false;
    return std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            return a == std::get<T>(y);
        },
        x);
}

bool is_zero_elem(const Element& x) { return elem_eq(x, scale(Rational(0), x)); }

int radius(const Element& x) {
    return std::visit(
        [](const auto& a) -> int {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, VecElem>) {
                return static_cast<int>(a.dim());
            } else if constexpr (std::is_same_v<T, FinSupSeq>) {
                return a.support_bound();
            } else if constexpr (std::is_same_v<T, EvConstSeq>) {
                return a.prefix_len();
            } else if constexpr (std::is_same_v<T, CDualElem>) {
                return a.a.support_bound();
            } else if constexpr (std::is_same_v<T, CBidualElem>) {
                return a.t.prefix_len();
            } else if constexpr (std::is_same_v<T, L1BidualElem>) {
                return a.a.support_bound();
            } else {
                int r = 0;
                for (const auto& b : a.blocks) r = std::max(r, static_cast<int>(b.dim()));
                return r;
            }
        },
        x);
}

namespace {
std::string vec_str(const VecElem& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string finsup_str(const FinSupSeq& a) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [i, v] : a.terms()) {
        os << (first ? "" : ",") << i << ":" << v;
        first = false;
    }
    os << "}";
    return os.str();
}

std::string evconst_str(const EvConstSeq& t) {
    std::ostringstream os;
    os << "[";
    for (int i = 1; i <= t.prefix_len(); ++i) os << (i > 1 ? "," : "") << t.at(i);
    os << "|" << t.tail() << "]";
    return os.str();
}
}  // namespace

std::string to_string(const Element& x) {
    return std::visit(
        [](const auto& a) -> std::string {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, VecElem>) {
                return vec_str(a);
            } else if constexpr (std::is_same_v<T, FinSupSeq>) {
                return finsup_str(a);
            } else if constexpr (std::is_same_v<T, EvConstSeq>) {
                return evconst_str(a);
            } else if constexpr (std::is_same_v<T, CDualElem>) {
                return "(b=" + a.b.str() + ",a=" + finsup_str(a.a) + ")";
            } else if constexpr (std::is_same_v<T, CBidualElem>) {
                return "(beta=" + a.beta.str() + ",t=" + evconst_str(a.t) + ")";
            } else if constexpr (std::is_same_v<T, L1BidualElem>) {
                return "(a=" + finsup_str(a.a) + ",mu=" + a.mu.str() + ")";
            } else {
                std::string s = "[";
                for (std::size_t k = 0; k < a.blocks.size(); ++k)
                    s += (k ? " ; " : "") + vec_str(a.blocks[k]);
                return s + "]";
            }
        },
        x);
}

}  // namespace arens
