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

#include "arens/json_io.hpp"

#include "arens/errors.hpp"

namespace arens {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        fail(std::string("missing field '") + key + "' in " + j.dump());
    return j.at(key);
}

}  // namespace

Json rational_to_json(const Rational& r) {
    return Json::array({r.num_i64(), r.den_i64()});
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        fail("rational must be [numerator, denominator]: " + j.dump());
    return Rational(j[0].get<long>(), j[1].get<long>());
}

namespace {

Json vec_to_json(const VecElem& v) {
    Json a = Json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(rational_to_json(v[i]));
    return a;
}

VecElem vec_from_json(const Json& j) {
    if (!j.is_array()) fail("vector must be an array of rationals: " + j.dump());
    VecElem v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i]);
    return v;
}

Json finsup_to_json(const FinSupSeq& s) {
    Json a = Json::array();
    for (const auto& [i, v] : s.terms())
        a.push_back(Json::array({i, v.num_i64(), v.den_i64()}));
    return a;
}

FinSupSeq finsup_from_json(const Json& j) {
    if (!j.is_array()) fail("finitely supported sequence must be [[idx,num,den],...]");
    std::vector<std::pair<int, Rational>> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) fail("term must be [idx,num,den]: " + t.dump());
        terms.emplace_back(t[0].get<int>(), Rational(t[1].get<long>(), t[2].get<long>()));
    }
    return FinSupSeq(std::move(terms));
}

Json evconst_to_json(const EvConstSeq& s) {
    Json prefix = Json::array();
    for (int i = 1; i <= s.prefix_len(); ++i) prefix.push_back(rational_to_json(s.at(i)));
    return Json{{"prefix", prefix}, {"tail", rational_to_json(s.tail())}};
}

EvConstSeq evconst_from_json(const Json& j) {
    std::vector<Rational> prefix;
    for (const auto& p : field(j, "prefix")) prefix.push_back(rational_from_json(p));
    return EvConstSeq(std::move(prefix), rational_from_json(field(j, "tail")));
}

}  // namespace

Json element_to_json(const Element& x) {
    return std::visit(
        [](const auto& a) -> Json {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, VecElem>) {
                return Json{{"vec", vec_to_json(a)}};
            } else if constexpr (std::is_same_v<T, FinSupSeq>) {
                return Json{{"fin_sup", finsup_to_json(a)}};
            } else if constexpr (std::is_same_v<T, EvConstSeq>) {
                return Json{{"ev_const", evconst_to_json(a)}};
            } else if constexpr (std::is_same_v<T, CDualElem>) {
                return Json{{"c_dual", Json{{"b", rational_to_json(a.b)},
                                            {"a", finsup_to_json(a.a)}}}};
            } else if constexpr (std::is_same_v<T, CBidualElem>) {
                Json body = evconst_to_json(a.t);
                body["beta"] = rational_to_json(a.beta);
                return Json{{"c_bidual", body}};
            } else if constexpr (std::is_same_v<T, L1BidualElem>) {
                return Json{{"l1_bidual", Json{{"a", finsup_to_json(a.a)},
                                               {"mu", rational_to_json(a.mu)}}}};
            } else {
                Json blocks = Json::array();
                for (const auto& b : a.blocks) blocks.push_back(vec_to_json(b));
                return Json{{"blocks", blocks}};
            }
        },
        x);
}

Element element_from_json(const Json& j) {
    if (!j.is_object()) fail("element must be an object: " + j.dump());
    if (j.contains("vec")) return vec_from_json(j.at("vec"));
    if (j.contains("fin_sup")) return finsup_from_json(j.at("fin_sup"));
    if (j.contains("ev_const")) return evconst_from_json(j.at("ev_const"));
    if (j.contains("c_dual")) {
        const Json& b = j.at("c_dual");
        return CDualElem{rational_from_json(field(b, "b")), finsup_from_json(field(b, "a"))};
    }
    if (j.contains("c_bidual")) {
        const Json& b = j.at("c_bidual");
        return CBidualElem{rational_from_json(field(b, "beta")), evconst_from_json(b)};
    }
    if (j.contains("l1_bidual")) {
        const Json& b = j.at("l1_bidual");
        return L1BidualElem{finsup_from_json(field(b, "a")),
                            rational_from_json(field(b, "mu"))};
    }
    if (j.contains("blocks")) {
        DirectSumElem e;
        for (const auto& b : j.at("blocks")) e.blocks.push_back(vec_from_json(b));
        return e;
    }
    fail("unknown element form: " + j.dump());
}

Json space_to_json(const SpaceRef& s) {
    switch (s.kind()) {
        case SpaceKind::FinDim: return Json{{"kind", "fin_dim"}, {"n", s.dim()}};
        case SpaceKind::SeqL1: return Json{{"kind", "seq_l1"}};
        case SpaceKind::SeqC: return Json{{"kind", "seq_c"}};
        case SpaceKind::DirectSum: {
            Json j{{"kind", "direct_sum"}, {"components", s.sum().components}};
            switch (s.sum().mode) {
                case DirectSumDesc::Mode::P:
                    j["mode"] = "p";
                    j["p"] = rational_to_json(s.sum().p);
                    break;
                case DirectSumDesc::Mode::Zero: j["mode"] = "zero"; break;
                case DirectSumDesc::Mode::Inf: j["mode"] = "inf"; break;
            }
            return j;
        }
    }
    fail("space_to_json: unreachable");
}

SpaceRef space_from_json(const Json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "fin_dim") return SpaceRef::fin_dim(field(j, "n").get<int>());
    if (kind == "seq_l1") return SpaceRef::seq_l1();
    if (kind == "seq_c") return SpaceRef::seq_c();
    if (kind == "direct_sum") {
        DirectSumDesc d;
        d.components = field(j, "components").get<std::vector<int>>();
        const std::string mode = field(j, "mode").get<std::string>();
        if (mode == "p") {
            d.mode = DirectSumDesc::Mode::P;
            d.p = rational_from_json(field(j, "p"));
        } else if (mode == "zero") {
            d.mode = DirectSumDesc::Mode::Zero;
        } else if (mode == "inf") {
            d.mode = DirectSumDesc::Mode::Inf;
        } else {
            fail("unknown direct sum mode: " + mode);
        }
        return SpaceRef::direct_sum(std::move(d));
    }
    fail("unknown space kind: " + kind);
}

Json linmap_to_json(const LinMap& u) {
    // round-trippable rendering is only needed for matrices and functionals
    Json j{{"kind", "linmap"}, {"describe", u.str()}};
    return j;
}

LinMap linmap_from_json(const Json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "matrix") {
        const auto rows = field(j, "rows").get<std::size_t>();
        const auto cols = field(j, "cols").get<std::size_t>();
        RatMatrix m(rows, cols);
        for (const auto& e : field(j, "entries")) {
            if (!e.is_array() || e.size() != 4) fail("matrix entry must be [row,col,num,den]");
            m.at(e[0].get<std::size_t>(), e[1].get<std::size_t>()) =
                Rational(e[2].get<long>(), e[3].get<long>());
        }
        return LinMap::matrix(std::move(m));
    }
    if (kind == "dual_functional")
        return LinMap::dual_functional(space_from_json(field(j, "space")),
                                       element_from_json(field(j, "functional")));
    if (kind == "sum_projection") {
        SpaceRef s = space_from_json(field(j, "sum"));
        return LinMap::sum_projection(s.sum(), field(j, "component").get<std::size_t>());
    }
    if (kind == "band_projection")
        return LinMap::band_projection(field(j, "n").get<int>(),
                                       field(j, "band").get<std::vector<int>>());
    fail("unknown linmap kind: " + kind);
}

Json operator_to_json(const RegOperator& a) {
    Json j{{"kind", a.kind_name()}};
    if (const auto* t = std::get_if<TensorOp>(&a.rep())) {
        j["dims"] = t->dims();
        j["codomain"] = t->codomain_dim();
        Json entries = Json::array();
        for (const auto& term : t->terms()) {
            Json e = Json::array();
            for (int i : term.idx) e.push_back(i);
            e.push_back(term.j);
            e.push_back(term.value.num_i64());
            e.push_back(term.value.den_i64());
            entries.push_back(e);
        }
        j["entries"] = entries;
    } else {
        j["domains"] = Json::array();
        for (const auto& d : a.domains()) j["domains"].push_back(space_to_json(d));
        j["codomain_space"] = space_to_json(a.codomain());
    }
    return j;
}

RegOperator operator_from_json(const Json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "tensor") {
        std::vector<int> dims = field(j, "dims").get<std::vector<int>>();
        TensorOp t(dims, field(j, "codomain").get<int>());
        for (const auto& e : field(j, "entries")) {
            if (!e.is_array() || e.size() != dims.size() + 3)
                fail("tensor entry must be [i1..im, j, num, den]: " + e.dump());
            std::vector<int> idx;
            idx.reserve(dims.size());
            for (std::size_t r = 0; r < dims.size(); ++r) idx.push_back(e[r].get<int>());
            const int out = e[dims.size()].get<int>();
            t.set_entry(idx, out,
                        Rational(e[dims.size() + 1].get<long>(),
                                 e[dims.size() + 2].get<long>()));
        }
        return RegOperator::tensor(std::move(t));
    }
    if (kind == "coord_product")
        return RegOperator::coord_product(space_from_json(field(j, "space")),
                                          field(j, "arity").get<int>());
    if (kind == "upper_triangular") return RegOperator::upper_triangular();
    if (kind == "finite_rank") {
        std::vector<SpaceRef> domains;
        for (const auto& d : field(j, "domains")) domains.push_back(space_from_json(d));
        std::vector<Element> factors;
        for (const auto& f : field(j, "factors")) factors.push_back(element_from_json(f));
        return RegOperator::finite_rank(std::move(domains), std::move(factors),
                                        space_from_json(field(j, "codomain")),
                                        element_from_json(field(j, "v")));
    }
    if (kind == "weighted_diagonal")
        return RegOperator::weighted_diagonal(space_from_json(field(j, "space")),
                                              field(j, "arity").get<int>(),
                                              evconst_from_json(field(j, "weights")));
    if (kind == "hom_composite")
        return RegOperator::hom_composite(linmap_from_json(field(j, "u")),
                                          operator_from_json(field(j, "inner")));
    if (kind == "sum_tuple") {
        SpaceRef sum = space_from_json(field(j, "sum"));
        std::vector<RegOperator> ops;
        for (const auto& o : field(j, "ops")) ops.push_back(operator_from_json(o));
        return RegOperator::sum_tuple(std::move(ops), sum.sum());
    }
    fail("unknown operator kind: " + kind);
}

Json witness_to_json(const Witness& w) {
    Json data = Json::object();
    for (const auto& [k, v] : w.data) data[k] = v;
    return Json{{"what", w.what}, {"data", data}};
}

}  // namespace arens
