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

#include <stdexcept>
#include <string>

namespace arens {

/// Arguments live in different (or wrong-role) spaces.
class DomainMismatchError : public std::invalid_argument {
public:
    explicit DomainMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// A slice functional left the computable dual model. First-class outcome:
/// distinguishes "input outside the model" from "identity fails".
class NotRepresentableError : public std::runtime_error {
public:
    explicit NotRepresentableError(const std::string& where)
        : std::runtime_error("not representable: " + where), location(where) {}
    std::string location;
};

/// An iterated limit did not stabilize within the index cap.
class StabilizationFailureError : public std::runtime_error {
public:
    explicit StabilizationFailureError(const std::string& where)
        : std::runtime_error("limit did not stabilize within cap: " + where), location(where) {}
    std::string location;
};

/// Sublattice closure hit the round cap.
class ClosureBudgetExceededError : public std::runtime_error {
public:
    explicit ClosureBudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// Factorization requested for an operator that is not a multimorphism.
class NotMultimorphismError : public std::invalid_argument {
public:
    explicit NotMultimorphismError(const std::string& what) : std::invalid_argument(what) {}
};

/// Operation not defined for this representation (e.g. modulus of a
/// hom-composite whose outer map is not a lattice homomorphism).
class UnsupportedError : public std::invalid_argument {
public:
    explicit UnsupportedError(const std::string& what) : std::invalid_argument(what) {}
};

/// A verified-equivalence claim failed (e.g. structural certificate vs
/// definitional check). Exit code 3 at the CLI; never caught internally.
class InternalInvariantViolation : public std::logic_error {
public:
    explicit InternalInvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// Scenario/operator JSON failed to parse or validate. Exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace arens
