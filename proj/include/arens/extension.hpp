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

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "arens/multimorphism.hpp"
#include "arens/operators.hpp"
#include "arens/prng.hpp"

namespace arens {

/// Represent a linear functional on `space` (primal role) in the dual model
/// by probing it on basis/constant test vectors. `bound` must dominate the
/// functional's stabilization radius; the probe verifies stabilization at
/// bound+1..bound+3 and raises NotRepresentableError when it fails.
Element probe_dual_representation(const SpaceRef& space, int bound,
                                  const std::function<Rational(const Element&)>& f);

/// One bar-lift step: the dual-model representation of the slice functional
/// together with the bidual argument applied to it. `evaluate_at` computes
/// the underlying scalar functional at primal probe values of the slot.
Rational bar_lift_apply(const Element& xpp, const SpaceRef& slot_space, int bound,
                        const std::function<Rational(const Element&)>& evaluate_at);

/// An Arens extension AR^rho(A), evaluated lazily through composed bar-lifts.
/// Values are exact; the memo cache is guarded for concurrent use.
class ExtendedOp {
public:
    ExtendedOp(RegOperator base, Permutation rho);

    [[nodiscard]] const RegOperator& base() const { return base_; }
    [[nodiscard]] const Permutation& rho() const { return rho_; }

    /// AR^rho(A)(args)(y'), args in the bidual models of the domains, y' in
    /// the dual model of the codomain.
    [[nodiscard]] Rational value(const std::vector<Element>& args, const Element& yprime) const;

    /// AR^rho(A)(args) assembled as a codomain bidual-model element by
    /// probing dual generators within the computed support radius.
    [[nodiscard]] Element value_element(const std::vector<Element>& args) const;

    /// Number of base-operator evaluations so far (deterministic work metric).
    [[nodiscard]] std::uint64_t evals() const { return evals_.load(); }

private:
    Rational stage_value(std::size_t k, const std::vector<Element>& args,
                         std::vector<std::optional<Element>>& assignment,
                         const Element& yprime) const;

    RegOperator base_;
    Permutation rho_;
    mutable std::unordered_map<std::string, Rational> memo_;
    mutable std::mutex memo_mutex_;
    mutable std::atomic<std::uint64_t> evals_{0};
};

ExtendedOp arens_extend(const RegOperator& a, const Permutation& rho);

/// The literal iterated-adjoint chain A*, A**, ..., A^{*(m+1)}, built from
/// the displayed defining equations; shares only the probe/slice primitives
/// with the bar-lift route.
class StarChain {
public:
    explicit StarChain(RegOperator base);
    [[nodiscard]] Rational value(const std::vector<Element>& args, const Element& yprime) const;
    [[nodiscard]] Element value_element(const std::vector<Element>& args) const;
    [[nodiscard]] const RegOperator& base() const { return base_; }

private:
    /// A^{*(j+1)}(x_{m-j+1}'', ..., x_m'', y', x_1..x_{m-j-1}) as a dual-model
    /// element of E_{m-j} (j = chain depth).
    Element chain_functional(std::size_t j, const std::vector<Element>& args,
                             const Element& yprime,
                             std::vector<std::optional<Element>>& primal) const;

    RegOperator base_;
};

StarChain star_chain(const RegOperator& a);

/// Davie-Gamelin evaluation: iterated exact-stabilizing limits along the
/// approximant sequences, nested with the innermost index alpha_{rho(1)}.
/// Throws StabilizationFailureError if a limit does not settle within `cap`.
Rational davie_gamelin_value(const RegOperator& a, const Permutation& rho,
                             const std::vector<Element>& args, const Element& yprime,
                             int cap = 64);

/// The same iterated limit assembled into a codomain bidual-model element.
Element davie_gamelin_eval(const RegOperator& a, const Permutation& rho,
                           const std::vector<Element>& args, int cap = 64);

/// Exact replayable failure data.
struct Witness {
    std::string what;
    std::vector<std::pair<std::string, std::string>> data;  // name -> rendered value
};

/// Generator grid: every tuple over the per-slot bidual generators plus
/// `random_tuples` seeded random tuples.
std::vector<std::vector<Element>> generator_grid(const RegOperator& a, int max_index,
                                                 std::size_t cap, int random_tuples,
                                                 std::uint64_t seed);

struct CompareAllReport {
    bool all_equal = true;
    std::vector<std::string> perms;
    std::optional<Witness> witness;
    std::uint64_t tuples_checked = 0;
};

/// Evaluates every AR^rho on the generator grid and reports exact equality
/// or a witness tuple. m <= 4 (m! evaluations per tuple).
CompareAllReport compare_all_extensions(const RegOperator& a, int random_tuples = 0,
                                        std::uint64_t seed = 0x9219, int max_index = 6);

struct PropsReport {
    bool extends = true;
    bool positive_transfer = true;
    bool naturality = true;
    bool sign_expansion = true;
    std::optional<Witness> witness;
};

/// Theorem-2.2-style property checks for one extension: the extension
/// identity on basis tuples, positivity transfer, naturality through a
/// catalog hom, and the multilinear sign expansion.
PropsReport verify_extension_props(const RegOperator& a, const Permutation& rho,
                                   const std::optional<LinMap>& u = std::nullopt,
                                   int random_tuples = 8, std::uint64_t seed = 0x9220);

struct CheckVerdict {
    bool holds = true;
    std::optional<Witness> witness;
    std::uint64_t cases = 0;
};

/// |(y' o AR)(x'')| = (y' o AR)(|x''|) over grid + seeded tuples, for a
/// Riesz homomorphism y'.
CheckVerdict check_hom_composite(const RegOperator& a, const Permutation& rho,
                                 const Element& yprime, int samples = 500,
                                 std::uint64_t seed = 0x9221);

/// |AR(args)|(y') = AR(|args|)(y') for y' in the nonnegative span of hom
/// generators.
CheckVerdict check_modulus_identity(const RegOperator& a, const Permutation& rho,
                                    const Element& yprime, int samples = 500,
                                    std::uint64_t seed = 0x9222);

/// Multimorphism identity restricted to zero-singular-part tuples.
CheckVerdict check_oc_restriction(const RegOperator& a, const Permutation& rho,
                                  int samples = 500, std::uint64_t seed = 0x9223);

/// davie_gamelin agreement with arens_extend over grid + seeded tuples.
CheckVerdict check_dg_oracle(const RegOperator& a, const Permutation& rho, int samples = 100,
                             std::uint64_t seed = 0x9224, int cap = 64);

/// Random bidual-model element of the given primal space.
Element random_bidual(Prng& rng, const SpaceRef& space, int max_index = 6);

}  // namespace arens
