/*
   Copyright 2026 The weylnorm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WEYLNORM_RATIONAL_HPP
#define WEYLNORM_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace weylnorm {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values in lowest
// terms with positive denominator, which is exactly the contract we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "a" or "a/b". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

}  // namespace weylnorm

#endif
