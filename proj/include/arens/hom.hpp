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
#include <optional>
#include <vector>

#include "arens/elements.hpp"

namespace arens {

/// Dense rational matrix, row-major. Linear maps between FinDim lattices.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    static RatMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const Rational& at(std::size_t r, std::size_t c) const {
        return e_[r * cols_ + c];
    }
    Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    [[nodiscard]] VecElem apply(const VecElem& x) const;
    [[nodiscard]] RatMatrix times(const RatMatrix& other) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

/// Structural lattice-homomorphism certificate: every row has at most one
/// nonzero entry and it is >= 0.
bool hom_certificate(const RatMatrix& t);

struct HomVerdict {
    bool yes = false;
    std::optional<VecElem> witness;  // |Tx| != T|x| at this x when !yes
};

/// Is |Tx| = T|x| for all x? The structural certificate is cross-checked
/// against the definitional test on exhaustive {0,+1,-1} coordinate patterns
/// (plus seeded random magnitudes); disagreement is a hard error, since it
/// would falsify the characterization the certificate relies on.
HomVerdict is_riesz_hom(const RatMatrix& t, int random_budget = 1000,
                        std::uint64_t seed = 0x5eed);

}  // namespace arens
