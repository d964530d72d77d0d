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

#include "arens/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace arens {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    mpq_class v(s);
    v.canonicalize();
    return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::int64_t Rational::num_i64() const {
    if (!v_.get_num().fits_slong_p()) throw std::overflow_error("Rational numerator exceeds int64");
    return static_cast<std::int64_t>(v_.get_num().get_si());
}

std::int64_t Rational::den_i64() const {
    if (!v_.get_den().fits_slong_p()) throw std::overflow_error("Rational denominator exceeds int64");
    return static_cast<std::int64_t>(v_.get_den().get_si());
}

bool Rational::fits_i64() const {
    return v_.get_num().fits_slong_p() && v_.get_den().fits_slong_p();
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace arens
