// Copyright 2026 The fekete Authors
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

#ifndef FEKETE_INTEGER_HPP
#define FEKETE_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fekete {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Reduced fraction with positive denominator (GMP keeps mpq_class canonical
/// after every arithmetic operation).
using Rational = mpq_class;

/// Input that violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed (two independent routes disagree,
/// or a proven exact division did not divide).
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer make_integer(std::int64_t v) {
  Integer z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer parse_integer(const std::string& text) {
  Integer z;
  if (text.empty() || z.set_str(text, 10) != 0) {
    throw InvalidInput("not a decimal integer: '" + text + "'");
  }
  return z;
}

inline int sign(const Integer& z) { return sgn(z); }

}  // namespace fekete

#endif  // FEKETE_INTEGER_HPP
