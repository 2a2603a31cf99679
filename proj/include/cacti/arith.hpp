// Copyright 2026 The cacti Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CACTI_ARITH_HPP_
#define CACTI_ARITH_HPP_

#include <initializer_list>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cacti {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised on malformed arguments (bad partitions, size mismatches, ...).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a brute-force routine is asked to exceed its size guard.
struct Refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an internal consistency check fails. Never expected to fire.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

// n! for n >= 0. Negative arguments are a caller error.
const BigInt& factorial(int n);

// n! for n >= 0 and 0 for n < 0, so that a negative argument kills any
// product it appears in.
BigInt factorial_or_zero(int n);

// C(a, b); zero whenever b < 0, b > a or a < 0.
BigInt binomial(int a, int b);

// a! / (k_1! ... k_r! (a - sum k)!); zero if any k_i < 0 or sum k > a.
BigInt multinomial(int a, std::initializer_list<int> ks);

// (m)_r = m (m-1) ... (m-r+1); zero when m < 0, r < 0 or r > m.
BigInt falling_factorial(int m, int r);

// Exact division; throws InternalInconsistency when d does not divide n.
BigInt exact_div(const BigInt& n, const BigInt& d, const char* what);

// Converts a rational known to be integral; throws otherwise.
BigInt to_integer(const Rational& q, const char* what);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace cacti

#endif  // CACTI_ARITH_HPP_
