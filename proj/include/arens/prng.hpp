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

#include <cstdint>

#include "arens/elements.hpp"

namespace arens {

/// splitmix64. Hand-rolled so sampling is bit-identical across platforms and
/// standard libraries (std distributions are implementation-defined).
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). Modulo bias is irrelevant for test sampling.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Integer in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Derive an independent stream (stable across runs).
    [[nodiscard]] Prng fork(std::uint64_t salt) const {
        Prng p(state_ ^ (0xD1B54A32D192ED03ULL * (salt + 1)));
        p.next();
        return p;
    }

    /// num in [-9, 9], den in [1, 8]; reduced.
    Rational rational() { return Rational(range(-9, 9), range(1, 8)); }
    Rational positive_rational() { return Rational(range(0, 9), range(1, 8)); }
    Rational nonzero_rational() {
        Rational r = rational();
        return r.is_zero() ? Rational(1) : r;
    }

    VecElem vec(int n) {
        VecElem v(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < v.dim(); ++i) v[i] = rational();
        return v;
    }

    VecElem positive_vec(int n) {
        VecElem v(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < v.dim(); ++i) v[i] = positive_rational();
        return v;
    }

    /// Support inside [1, max_index], at most max_terms nonzero entries.
    FinSupSeq finsup(int max_index = 8, int max_terms = 4) {
        std::vector<std::pair<int, Rational>> terms;
        const int k = static_cast<int>(below(static_cast<std::uint64_t>(max_terms + 1)));
        for (int j = 0; j < k; ++j)
            terms.emplace_back(static_cast<int>(range(1, max_index)), rational());
        return FinSupSeq(std::move(terms));
    }

    FinSupSeq positive_finsup(int max_index = 8, int max_terms = 4) {
        std::vector<std::pair<int, Rational>> terms;
        const int k = static_cast<int>(below(static_cast<std::uint64_t>(max_terms + 1)));
        for (int j = 0; j < k; ++j)
            terms.emplace_back(static_cast<int>(range(1, max_index)), positive_rational());
        return FinSupSeq(std::move(terms));
    }

    EvConstSeq evconst(int max_prefix = 4) {
        std::vector<Rational> p;
        const int k = static_cast<int>(below(static_cast<std::uint64_t>(max_prefix + 1)));
        p.reserve(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) p.push_back(rational());
        return EvConstSeq(std::move(p), rational());
    }

    EvConstSeq positive_evconst(int max_prefix = 4) {
        std::vector<Rational> p;
        const int k = static_cast<int>(below(static_cast<std::uint64_t>(max_prefix + 1)));
        p.reserve(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) p.push_back(positive_rational());
        return EvConstSeq(std::move(p), positive_rational());
    }

private:
    std::uint64_t state_;
};

}  // namespace arens
