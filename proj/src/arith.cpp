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

#include "cacti/arith.hpp"

#include <deque>
#include <mutex>

namespace cacti {

const BigInt& factorial(int n) {
  if (n < 0) throw InvalidInput("factorial of negative argument");
  // deque keeps references stable while the table grows.
  static std::deque<BigInt> table{BigInt(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= n) {
    BigInt next = table.back() * static_cast<int>(table.size());
    table.push_back(std::move(next));
  }
  return table[n];
}

BigInt factorial_or_zero(int n) {
  if (n < 0) return 0;
  return factorial(n);
}

BigInt binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  return factorial(a) / (factorial(b) * factorial(a - b));
}

BigInt multinomial(int a, std::initializer_list<int> ks) {
  if (a < 0) return 0;
  int sum = 0;
  BigInt den = 1;
  for (int k : ks) {
    if (k < 0) return 0;
    sum += k;
    den *= factorial(k);
  }
  if (sum > a) return 0;
  den *= factorial(a - sum);
  return factorial(a) / den;
}

BigInt falling_factorial(int m, int r) {
  if (m < 0 || r < 0 || r > m) return 0;
  BigInt v = 1;
  for (int i = 0; i < r; ++i) v *= (m - i);
  return v;
}

BigInt exact_div(const BigInt& n, const BigInt& d, const char* what) {
  if (d == 0) throw InternalInconsistency(std::string(what) + ": division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(n, d, q, r);
  if (r != 0) throw InternalInconsistency(std::string(what) + ": non-integral result");
  return q;
}

BigInt to_integer(const Rational& q, const char* what) {
  if (boost::multiprecision::denominator(q) != 1)
    throw InternalInconsistency(std::string(what) + ": non-integral result");
  return boost::multiprecision::numerator(q);
}

}  // namespace cacti
