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

#include "arens/scenario.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "arens/bidual.hpp"
#include "arens/direct_sum.hpp"
#include "arens/errors.hpp"
#include "arens/finite_rank.hpp"
#include "arens/hom.hpp"
#include "arens/lattice.hpp"
#include "arens/version.hpp"

namespace arens {

namespace {

bool log_enabled() {
    const char* v = std::getenv("WORKBENCH_LOG");
    return v != nullptr && *v != '\0' && std::string(v) != "0" && std::string(v) != "off";
}

std::vector<Permutation> resolve_rhos(const Json& check, int m) {
    if (!check.contains("rho") || check.at("rho") == "all") return Permutation::all(m);
    const Json& r = check.at("rho");
    if (r.is_string()) {
        const std::string s = r.get<std::string>();
        if (s == "id") return {Permutation::identity(m)};
        if (s == "theta") return {Permutation::theta(m)};
        throw ParseError("unknown rho: " + s);
    }
    if (r.is_array()) {
        std::vector<Permutation> out;
        if (!r.empty() && r[0].is_array()) {
            for (const auto& images : r) out.emplace_back(images.get<std::vector<int>>());
        } else {
            out.emplace_back(r.get<std::vector<int>>());
        }
        return out;
    }
    throw ParseError("rho must be \"all\", \"id\", \"theta\" or images");
}

std::string rho_label(const std::vector<Permutation>& rhos, int m) {
    if (static_cast<int>(rhos.size()) == 1) return rhos.front().str();
    return rhos.size() == Permutation::all(m).size() ? "all" : std::to_string(rhos.size());
}

/// Dual-model element of the codomain from a shorthand or a full element.
Element resolve_dual(const Json& spec, const SpaceRef& codomain) {
    if (spec.contains("gen")) {
        const std::string g = spec.at("gen").get<std::string>();
        if (g == "coord") {
            const int i = spec.at("index").get<int>();
            switch (codomain.kind()) {
                case SpaceKind::FinDim:
                    return VecElem::unit(static_cast<std::size_t>(codomain.dim()),
                                         static_cast<std::size_t>(i) - 1);
                case SpaceKind::SeqL1: return EvConstSeq::unit(i);
                case SpaceKind::SeqC: return CDualElem{Rational(0), FinSupSeq::unit(i)};
                default: throw ParseError("coord generator: unsupported codomain");
            }
        }
        if (g == "limit") {
            if (codomain.kind() != SpaceKind::SeqC)
                throw ParseError("limit functional lives on the c model");
            return CDualElem{Rational(1), FinSupSeq{}};
        }
        if (g == "all_ones") {
            switch (codomain.kind()) {
                case SpaceKind::SeqL1: return EvConstSeq::constant(Rational(1));
                case SpaceKind::FinDim: {
                    VecElem v(static_cast<std::size_t>(codomain.dim()));
                    for (std::size_t j = 0; j < v.dim(); ++j) v[j] = Rational(1);
                    return v;
                }
                default: throw ParseError("all_ones generator: unsupported codomain");
            }
        }
        if (g == "combination") {
            Element acc = codomain.dual_model().zero();
            for (const auto& term : spec.at("terms")) {
                if (!term.is_array() || term.size() != 2)
                    throw ParseError("combination term must be [coef, gen-spec]");
                acc = add(acc, scale(rational_from_json(term[0]),
                                     resolve_dual(term[1], codomain)));
            }
            return acc;
        }
        throw ParseError("unknown dual generator: " + g);
    }
    return element_from_json(spec);
}

struct CheckCtx {
    const Scenario& scenario;
    const Json& spec;
    std::uint64_t seed;
    int samples;

    [[nodiscard]] const RegOperator& op() const {
        if (!spec.contains("operator")) throw ParseError("check needs an \"operator\"");
        const std::string name = spec.at("operator").get<std::string>();
        auto it = scenario.operators.find(name);
        if (it == scenario.operators.end())
            throw ParseError("check references unknown operator '" + name + "'");
        return it->second;
    }
};

struct CheckBody {
    std::string outcome = "pass";
    std::string rho = "-";
    std::uint64_t cases = 0;
    Json witness;
    std::string location;
};

void apply_verdict(CheckBody& body, const CheckVerdict& v) {
    body.cases += v.cases;
    if (!v.holds) {
        body.outcome = "fail";
        if (body.witness.is_null() && v.witness) body.witness = witness_to_json(*v.witness);
    }
}

CheckBody run_irregularity(const CheckCtx& /*ctx*/) {
    CheckBody body;
    const RegOperator ut = RegOperator::upper_triangular();
    const Element limit = L1BidualElem{FinSupSeq{}, Rational(1)};
    const std::vector<Element> args{limit, limit};
    const Element one = VecElem({Rational(1)});

    const Permutation id2 = Permutation::identity(2);
    const Permutation th2 = Permutation::theta(2);
    const Rational lift_id = arens_extend(ut, id2).value(args, one);
    const Rational lift_th = arens_extend(ut, th2).value(args, one);
    const Rational dg_id = davie_gamelin_value(ut, id2, args, one);
    const Rational dg_th = davie_gamelin_value(ut, th2, args, one);
    body.cases = 4;
    body.rho = "id,theta";
    Witness w;
    w.what = "AR^id(B)(L,L) and AR^theta(B)(L,L) by both evaluators";
    w.data.emplace_back("bar_lift[id]", lift_id.str());
    w.data.emplace_back("bar_lift[theta]", lift_th.str());
    w.data.emplace_back("iterated_limits[id]", dg_id.str());
    w.data.emplace_back("iterated_limits[theta]", dg_th.str());
    body.witness = witness_to_json(w);
    const bool ok = lift_id == Rational(0) && lift_th == Rational(1) &&
                    dg_id == Rational(0) && dg_th == Rational(1);
    body.outcome = ok ? "pass" : "fail";
    return body;
}

CheckBody run_compare_all(const CheckCtx& ctx) {
    CheckBody body;
    const RegOperator& a = ctx.op();
    auto report = compare_all_extensions(a, ctx.samples, ctx.seed);
    body.cases = report.tuples_checked;
    body.rho = "all";
    body.outcome = report.all_equal ? "pass" : "fail";
    if (report.witness) body.witness = witness_to_json(*report.witness);
    return body;
}

CheckBody run_theta_chain(const CheckCtx& ctx) {
    CheckBody body;
    const RegOperator& a = ctx.op();
    const Permutation th = Permutation::theta(a.arity());
    body.rho = th.str();
    StarChain chain(a);
    ExtendedOp ext(a, th);
    auto grid = generator_grid(a, 4, 128, ctx.samples, ctx.seed);
    for (const auto& tuple : grid) {
        ++body.cases;
        const Element via_chain = chain.value_element(tuple);
        const Element via_lifts = ext.value_element(tuple);
        if (!elem_eq(via_chain, via_lifts)) {
            body.outcome = "fail";
            if (body.witness.is_null()) {
                Witness w;
                w.what = "A^{*(m+1)} disagrees with AR^theta(A)";
                for (std::size_t r = 0; r < tuple.size(); ++r)
                    w.data.emplace_back("x''_" + std::to_string(r + 1), to_string(tuple[r]));
                w.data.emplace_back("chain", to_string(via_chain));
                w.data.emplace_back("bar_lift", to_string(via_lifts));
                body.witness = witness_to_json(w);
            }
        }
    }
    return body;
}

CheckBody run_props(const CheckCtx& ctx) {
    CheckBody body;
    const RegOperator& a = ctx.op();
    const auto rhos = resolve_rhos(ctx.spec, a.arity());
    body.rho = rho_label(rhos, a.arity());
    std::optional<LinMap> u;
    if (ctx.spec.contains("u")) u = linmap_from_json(ctx.spec.at("u"));
    for (const auto& rho : rhos) {
        auto report = verify_extension_props(a, rho, u, std::min(ctx.samples, 8), ctx.seed);
        ++body.cases;
        if (!(report.extends && report.positive_transfer && report.naturality &&
              report.sign_expansion)) {
            body.outcome = "fail";
            if (body.witness.is_null() && report.witness)
                body.witness = witness_to_json(*report.witness);
        }
    }
    return body;
}

CheckBody run_dg_oracle(const CheckCtx& ctx) {
    CheckBody body;
    const RegOperator& a = ctx.op();
    const int cap = ctx.spec.value("cap", 64);
    const auto rhos = resolve_rhos(ctx.spec, a.arity());
    body.rho = rho_label(rhos, a.arity());
    for (const auto& rho : rhos)
        apply_verdict(body, check_dg_oracle(a, rho, ctx.samples, ctx.seed, cap));
    return body;
}

CheckBody run_hom_composite(const CheckCtx& ctx) {
    CheckBody body;
    const RegOperator& a = ctx.op();
    Element yprime = ctx.spec.contains("y_prime")
                         ? resolve_dual(ctx.spec.at("y_prime"), a.codomain())
                         : hom_dual_generators(a.codomain(), 3).front();
    const auto rhos = resolve_rhos(ctx.spec, a.arity());
    body.rho = rho_label(rhos, a.arity());
    for (const auto& rho : rhos)
        apply_verdict(body, check_hom_composite(a, rho, yprime, ctx.samples, ctx.seed));
    return body;
}

CheckBody run_modulus_identity(const CheckCtx& ctx) {
    CheckBody body;
    const RegOperator& a = ctx.op();
    Element yprime = a.codomain().dual_model().zero();
    if (ctx.spec.contains("y_prime")) {
        yprime = resolve_dual(ctx.spec.at("y_prime"), a.codomain());
    } else {
        const auto gens = hom_dual_generators(a.codomain(), 4);
        yprime = add(scale(Rational(2), gens.front()),
                     scale(Rational(3), gens.back()));
    }
    const auto rhos = resolve_rhos(ctx.spec, a.arity());
    body.rho = rho_label(rhos, a.arity());
    for (const auto& rho : rhos)
        apply_verdict(body, check_modulus_identity(a, rho, yprime, ctx.samples, ctx.seed));
    return body;
}

CheckBody run_oc_restriction(const CheckCtx& ctx) {
    CheckBody body;
    const RegOperator& a = ctx.op();
    const auto rhos = resolve_rhos(ctx.spec, a.arity());
    body.rho = rho_label(rhos, a.arity());
    for (const auto& rho : rhos)
        apply_verdict(body, check_oc_restriction(a, rho, ctx.samples, ctx.seed));
    return body;
}

CheckBody run_multimorphism(const CheckCtx& ctx) {
    CheckBody body;
    const RegOperator& a = ctx.op();
    const bool expect_yes = ctx.spec.value("yes", true);
    auto verdict = is_multimorphism(a, ctx.samples, ctx.seed);
    body.cases = 1;
    body.outcome = verdict.yes == expect_yes ? "pass" : "fail";
    if (verdict.witness) {
        Witness w;
        w.what = "multimorphism identity fails at this tuple";
        for (std::size_t r = 0; r < verdict.witness->size(); ++r)
            w.data.emplace_back("x_" + std::to_string(r + 1),
                                to_string((*verdict.witness)[r]));
        body.witness = witness_to_json(w);
    }
    return body;
}

CheckBody run_riesz_hom(const CheckCtx& ctx) {
    CheckBody body;
    const Json& mj = ctx.spec.contains("matrix") ? ctx.spec.at("matrix") : ctx.spec;
    LinMap u = linmap_from_json(mj);
    const bool expect_yes = ctx.spec.value("yes", true);
    // definitional cross-check through the matrix route
    if (!ctx.spec.contains("matrix") || mj.at("kind") != "matrix")
        throw ParseError("riesz_hom check needs a {\"matrix\": {kind: matrix, ...}} field");
    const auto rows = mj.at("rows").get<std::size_t>();
    const auto cols = mj.at("cols").get<std::size_t>();
    RatMatrix m(rows, cols);
    for (const auto& e : mj.at("entries"))
        m.at(e[0].get<std::size_t>(), e[1].get<std::size_t>()) =
            Rational(e[2].get<long>(), e[3].get<long>());
    auto verdict = is_riesz_hom(m, ctx.samples, ctx.seed);
    body.cases = 1;
    body.outcome = verdict.yes == expect_yes ? "pass" : "fail";
    if (verdict.witness) {
        Witness w;
        w.what = "|Tx| != T|x| at this vector";
        w.data.emplace_back("x", to_string(Element(*verdict.witness)));
        body.witness = witness_to_json(w);
    }
    (void)u;
    return body;
}

CheckBody run_kusraev(const CheckCtx& ctx) {
    CheckBody body;
    const RegOperator& a = ctx.op();
    try {
        const auto factors = kusraev_factor(a);
        body.cases = 1;
        for (std::size_t r = 0; r < factors.size(); ++r) {
            if (!LinMap::dual_functional(a.domains()[r], Element(factors[r])).is_hom()) {
                body.outcome = "fail";
                Witness w;
                w.what = "factor is not a Riesz homomorphism";
                w.data.emplace_back("phi_" + std::to_string(r + 1),
                                    to_string(Element(factors[r])));
                body.witness = witness_to_json(w);
            }
        }
    } catch (const NotMultimorphismError& e) {
        body.outcome = "fail";
        Witness w;
        w.what = e.what();
        body.witness = witness_to_json(w);
    }
    return body;
}

CheckBody run_finite_rank(const CheckCtx& ctx) {
    CheckBody body;
    const RegOperator& a = ctx.op();
    const auto reduction = finite_rank_reduce(a, 32, ctx.samples, ctx.seed);
    const auto d = reduction.atoms.size();

    // reconstruction A = iso_inv o astriction on basis tuples
    std::vector<std::vector<Element>> tuples{{}};
    for (const SpaceRef& dom : a.domains()) {
        std::vector<Element> basis;
        if (dom.kind() == SpaceKind::FinDim) {
            for (int i = 0; i < dom.dim(); ++i)
                basis.emplace_back(VecElem::unit(static_cast<std::size_t>(dom.dim()),
                                                 static_cast<std::size_t>(i)));
        } else {
            for (int i = 1; i <= a.op_radius() + 1; ++i)
                basis.emplace_back(dom.kind() == SpaceKind::SeqL1
                                       ? Element(FinSupSeq::unit(i))
                                       : Element(EvConstSeq::unit(i)));
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
    for (const auto& t : tuples) {
        ++body.cases;
        const VecElem direct = std::get<VecElem>(a.evaluate(t));
        const VecElem through =
            reduction.iso_inv.apply(std::get<VecElem>(reduction.astriction.evaluate(t)));
        if (!(direct == through)) {
            body.outcome = "fail";
            if (body.witness.is_null()) {
                Witness w;
                w.what = "reconstruction i o I^{-1} o I o A_1 != A";
                body.witness = witness_to_json(w);
            }
        }
    }

    // I is a lattice isomorphism on G: I(sup(g,h)) = sup(I g, I h)
    Prng rng(ctx.seed);
    for (int s = 0; s < 200 && d > 0; ++s) {
        VecElem g(static_cast<std::size_t>(a.codomain().dim()));
        VecElem h(static_cast<std::size_t>(a.codomain().dim()));
        for (const auto& atom : reduction.atoms) {
            g = g + rng.rational() * atom;
            h = h + rng.rational() * atom;
        }
        ++body.cases;
        if (!(reduction.iso.apply(sup(g, h)) == sup(reduction.iso.apply(g),
                                                    reduction.iso.apply(h)))) {
            body.outcome = "fail";
            if (body.witness.is_null()) {
                Witness w;
                w.what = "I is not a lattice homomorphism on G";
                w.data.emplace_back("g", to_string(Element(g)));
                w.data.emplace_back("h", to_string(Element(h)));
                body.witness = witness_to_json(w);
            }
        }
    }
    if (ctx.spec.contains("expect_dim") &&
        ctx.spec.at("expect_dim").get<std::size_t>() != d) {
        body.outcome = "fail";
        Witness w;
        w.what = "sublattice dimension differs from the expected value";
        w.data.emplace_back("dim", std::to_string(d));
        body.witness = witness_to_json(w);
    }
    return body;
}

CheckBody run_transport(const CheckCtx& ctx) {
    CheckBody body;
    const RegOperator& a = ctx.op();
    const auto rhos = resolve_rhos(ctx.spec, a.arity());
    body.rho = rho_label(rhos, a.arity());
    for (const auto& rho : rhos)
        apply_verdict(body, transport_check(a, rho, std::min(ctx.samples, 32), ctx.seed));
    return body;
}

CheckBody run_band_projection(const CheckCtx& ctx) {
    CheckBody body;
    const RegOperator& a = ctx.op();
    std::vector<int> band = ctx.spec.contains("band")
                                ? ctx.spec.at("band").get<std::vector<int>>()
                                : std::vector<int>{0};
    apply_verdict(body, check_band_projection(a, band, ctx.samples, ctx.seed));
    return body;
}

CheckBody run_sum_duality(const CheckCtx& ctx) {
    CheckBody body;
    if (!ctx.spec.contains("space")) throw ParseError("sum_duality check needs a space");
    SpaceRef s = [&] {
        const Json& sp = ctx.spec.at("space");
        if (sp.is_string()) {
            auto it = ctx.scenario.spaces.find(sp.get<std::string>());
            if (it == ctx.scenario.spaces.end())
                throw ParseError("unknown space reference: " + sp.get<std::string>());
            return it->second;
        }
        return space_from_json(sp);
    }();
    apply_verdict(body, check_sum_duality(s, ctx.samples, ctx.seed));
    return body;
}

CheckBody dispatch_check(const CheckCtx& ctx, const std::string& kind) {
    if (kind == "irregularity") return run_irregularity(ctx);
    if (kind == "compare_all") return run_compare_all(ctx);
    if (kind == "theta_chain") return run_theta_chain(ctx);
    if (kind == "props") return run_props(ctx);
    if (kind == "dg_oracle") return run_dg_oracle(ctx);
    if (kind == "hom_composite") return run_hom_composite(ctx);
    if (kind == "modulus_identity") return run_modulus_identity(ctx);
    if (kind == "oc_restriction") return run_oc_restriction(ctx);
    if (kind == "multimorphism") return run_multimorphism(ctx);
    if (kind == "riesz_hom") return run_riesz_hom(ctx);
    if (kind == "kusraev") return run_kusraev(ctx);
    if (kind == "finite_rank") return run_finite_rank(ctx);
    if (kind == "transport") return run_transport(ctx);
    if (kind == "band_projection") return run_band_projection(ctx);
    if (kind == "sum_duality") return run_sum_duality(ctx);
    throw ParseError("unknown check kind: " + kind);
}

}  // namespace

Scenario Scenario::parse(const Json& j) {
    Scenario s;
    if (!j.is_object()) throw ParseError("scenario must be a JSON object");
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("samples")) s.samples = j.at("samples").get<int>();
    if (j.contains("spaces"))
        for (const auto& [name, spec] : j.at("spaces").items())
            s.spaces.emplace(name, space_from_json(spec));
    if (j.contains("operators"))
        for (const auto& [name, spec] : j.at("operators").items())
            s.operators.emplace(name, operator_from_json(spec));
    if (j.contains("checks")) {
        if (!j.at("checks").is_array()) throw ParseError("checks must be an array");
        for (const auto& c : j.at("checks")) {
            if (!c.is_object() || !c.contains("check"))
                throw ParseError("each check needs a \"check\" kind: " + c.dump());
            s.checks.push_back(c);
        }
    }
    return s;
}

Report run_scenario(const Scenario& s, const std::string& name, const RunOptions& opts) {
    Report report;
    report.scenario_name = name;
    report.version = kVersion;
    report.seed = opts.seed.value_or(s.seed);
    report.samples = opts.samples.value_or(s.samples);
    report.checks.resize(s.checks.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= s.checks.size()) return;
            const Json& spec = s.checks[i];
            CheckResult& result = report.checks[i];
            result.check = spec.at("check").get<std::string>();
            result.operator_name = spec.value("operator", std::string{});
            result.name = result.check +
                          (result.operator_name.empty() ? "" : ":" + result.operator_name);
            result.expected = spec.value("expect", std::string("pass"));
            const std::uint64_t check_seed =
                spec.contains("seed") ? spec.at("seed").get<std::uint64_t>()
                                      : Prng(report.seed).fork(i).next();
            const int check_samples = spec.value("samples", report.samples);
            const auto start = std::chrono::steady_clock::now();
            try {
                CheckCtx ctx{s, spec, check_seed, check_samples};
                CheckBody body = dispatch_check(ctx, result.check);
                result.outcome = body.outcome;
                result.rho = body.rho;
                result.cases = body.cases;
                result.witness = std::move(body.witness);
                result.location = std::move(body.location);
            } catch (const NotRepresentableError& e) {
                result.outcome = "not_representable";
                result.location = e.location;
            } catch (const StabilizationFailureError& e) {
                result.outcome = "not_representable";
                result.location = e.location;
            } catch (const ParseError&) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            } catch (const InternalInvariantViolation&) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
            result.ok = result.outcome == result.expected &&
                        result.outcome != "not_representable";
            result.ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
            if (log_enabled())
                std::cerr << "[workbench] " << result.name << " -> " << result.outcome
                          << " (" << result.ms << " ms)\n";
        }
    };

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    for (const auto& c : report.checks) report.all_ok = report.all_ok && c.ok;
    return report;
}

Report run_scenario_file(const std::string& path, const RunOptions& opts) {
    std::ifstream in(path);
    if (!in.good()) throw ParseError("cannot open scenario file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("scenario JSON parse error: ") + e.what());
    }
    Scenario s = Scenario::parse(j);
    std::string name = path;
    const auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    return run_scenario(s, name, opts);
}

Json Report::to_json() const {
    Json checks_json = Json::array();
    for (const auto& c : checks) {
        Json cj{{"name", c.name},
                {"check", c.check},
                {"rho", c.rho},
                {"outcome", c.outcome},
                {"expected", c.expected},
                {"ok", c.ok},
                {"cases", c.cases}};
        if (!c.operator_name.empty()) cj["operator"] = c.operator_name;
        if (!c.witness.is_null()) cj["witness"] = c.witness;
        if (!c.location.empty()) cj["location"] = c.location;
        checks_json.push_back(cj);
    }
    return Json{{"artifact", "arens-workbench"},
                {"version", version},
                {"scenario", scenario_name},
                {"seed", seed},
                {"samples", samples},
                {"ok", all_ok},
                {"checks", checks_json}};
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "scenario " << scenario_name << " (seed " << seed << ", samples " << samples
       << ", version " << version << ")\n";
    for (const auto& c : checks) {
        os << (c.ok ? "  PASS " : "  FAIL ") << c.name;
        if (c.rho != "-") os << " rho=" << c.rho;
        os << " [" << c.outcome;
        if (c.expected == "fail") os << ", expected-fail fixture";
        os << ", cases=" << c.cases << ", " << static_cast<long>(c.ms) << " ms]";
        if (!c.location.empty()) os << " at " << c.location;
        os << "\n";
        if (!c.ok && !c.witness.is_null())
            os << "        witness: " << c.witness.dump() << "\n";
    }
    os << (all_ok ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    return os.str();
}

Json catalog_json() {
    return Json{
        {"artifact", "arens-workbench"},
        {"version", kVersion},
        {"spaces", {"fin_dim", "seq_l1", "seq_c", "direct_sum"}},
        {"operators",
         {"tensor", "coord_product", "upper_triangular", "finite_rank", "weighted_diagonal",
          "hom_composite", "sum_tuple"}},
        {"checks",
         {"irregularity", "compare_all", "theta_chain", "props", "dg_oracle", "hom_composite",
          "modulus_identity", "oc_restriction", "multimorphism", "riesz_hom", "kusraev",
          "finite_rank", "transport", "band_projection", "sum_duality"}},
        {"elements",
         {"vec", "fin_sup", "ev_const", "c_dual", "c_bidual", "l1_bidual", "blocks"}}};
}

std::string catalog_text() {
    const Json j = catalog_json();
    std::ostringstream os;
    os << "arens-workbench " << kVersion << "\n";
    for (const char* key : {"spaces", "operators", "checks", "elements"}) {
        os << key << ":";
        for (const auto& v : j.at(key)) os << " " << v.get<std::string>();
        os << "\n";
    }
    return os.str();
}

int demo_irregularity(std::ostream& os) {
    const RegOperator ut = RegOperator::upper_triangular();
    const Element limit = L1BidualElem{FinSupSeq{}, Rational(1)};
    const std::vector<Element> args{limit, limit};
    const Element one = VecElem({Rational(1)});
    const SpaceRef l1 = SpaceRef::seq_l1();

    os << "B(x, y) = sum_{i <= j} x_i y_j on the l1 model; L = the generalized limit\n\n";

    os << "slices of B against sample basis vectors:\n";
    for (int i = 1; i <= 3; ++i) {
        std::vector<std::optional<Element>> fixed{Element(FinSupSeq::unit(i)), std::nullopt};
        os << "  B(e_" << i << ", .) = " << to_string(slice_functional(ut, fixed, 2, one))
           << "   (tail = sum of x = 1)\n";
    }
    for (int j = 1; j <= 3; ++j) {
        std::vector<std::optional<Element>> fixed{std::nullopt, Element(FinSupSeq::unit(j))};
        os << "  B(., e_" << j << ") = " << to_string(slice_functional(ut, fixed, 1, one))
           << "   (tail 0)\n";
    }

    os << "\nrho = id lifts slot 1 first: L sees tail 0 on every slice, so the\n"
          "inner functional is 0 and AR^id(B)(L,L) = L(0) = 0.\n";
    os << "rho = theta lifts slot 2 first: L sees the tail sum(x), the inner\n"
          "functional is the all-ones sequence, and AR^theta(B)(L,L) = L(1) = 1.\n\n";

    const Rational lift_id = arens_extend(ut, Permutation::identity(2)).value(args, one);
    const Rational lift_th = arens_extend(ut, Permutation::theta(2)).value(args, one);
    os << "bar-lift evaluator:    AR^id(B)(L,L) = " << lift_id.str()
       << ",  AR^theta(B)(L,L) = " << lift_th.str() << "\n";

    os << "\niterated limits over approximants L ~ e_{N+1} (B(e_p, e_q) = [p <= q]):\n";
    const Rational dg_id = davie_gamelin_value(ut, Permutation::identity(2), args, one);
    const Rational dg_th = davie_gamelin_value(ut, Permutation::theta(2), args, one);
    os << "  lim_{N2} lim_{N1} [N1 <= N2] = " << dg_id.str() << "   (rho = id)\n";
    os << "  lim_{N1} lim_{N2} [N1 <= N2] = " << dg_th.str() << "   (rho = theta)\n";

    const bool ok = lift_id == Rational(0) && lift_th == Rational(1) &&
                    dg_id == Rational(0) && dg_th == Rational(1);
    os << "\nwitness " << (ok ? "confirmed" : "FAILED") << ": the two extensions differ (0 vs 1)\n";
    (void)l1;
    return ok ? 0 : 1;
}

}  // namespace arens
