// Copyright 2026 The Baccara Solver Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BACCARA_RATIONAL_HPP_
#define BACCARA_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace baccara {

// Exact rational number in lowest terms with a positive denominator. All
// probabilities, expectations and game values in the core use this type.
using Rational = mpq_class;
using BigInt = mpz_class;

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

// Builds num/den and canonicalizes.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(std::int64_t num, std::int64_t den);

BigInt to_bigint(Int128 value);

// "n/d", or "n" when the denominator is 1.
std::string to_string(const Rational& r);

// Parses "n/d" or "n". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

inline int sign(const Rational& r) { return sgn(r); }

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace baccara

#endif  // BACCARA_RATIONAL_HPP_
