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

#ifndef FEKETE_NTHEORY_HPP
#define FEKETE_NTHEORY_HPP

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "fekete/integer.hpp"

namespace fekete {

// ---------------------------------------------------------------------------
// Elementary functions on machine integers.
// ---------------------------------------------------------------------------

/// Kronecker symbol (a/n), defined for every pair of integers.
///
/// Conventions: (a/0) = 1 if a = +-1 and 0 otherwise; (a/-1) = -1 if a < 0
/// and 1 otherwise (so (0/-1) = (0/1) = 1); (a/2) = 0 for even a, 1 for
/// a = +-1 (mod 8) and -1 for a = +-3 (mod 8). Completely multiplicative in n.
int kronecker(std::int64_t a, std::int64_t n);

/// Deterministic for all n < 2^64.
bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// All primes p with p <= bound, ascending (sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

/// Prime factorisation as (prime, exponent) pairs, ascending. n >= 1.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);
/// |n| squarefree; 0 is not squarefree.
bool is_squarefree(std::int64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

struct IntegerSqrt {
  Integer root;
  bool exact = false;
};

/// floor(sqrt(n)) and whether n is a perfect square. Throws on n < 0.
IntegerSqrt integer_sqrt(const Integer& n);

/// Number of reduced forms ax^2+bxy+cy^2 of discriminant -D
/// (|b| <= a <= c, b >= 0 when |b| = a or a = c). Non-fundamental and
/// imprimitive forms are counted too. Requires D > 0, -D = 0 or 1 (mod 4).
std::int64_t class_number_imaginary(std::int64_t D);

// ---------------------------------------------------------------------------
// Quadratic discriminants and characters.
// ---------------------------------------------------------------------------

enum class Family { FourP, MinusFourP, ThreeP, MinusThreeP, OddPrime, Generic };

std::string_view family_name(Family f);
/// Inverse of family_name; throws InvalidInput for unknown names.
Family parse_family(std::string_view name);

/// A fundamental discriminant, validated on construction.
class QuadDisc {
 public:
  /// Wraps an already-fundamental discriminant; throws InvalidInput otherwise.
  static QuadDisc from_discriminant(std::int64_t delta);
  /// Discriminant of Q(sqrt(d)) for squarefree d not in {0, 1}.
  static QuadDisc from_squarefree(std::int64_t d);

  std::int64_t delta() const { return delta_; }
  std::int64_t conductor() const { return conductor_; }
  Family family() const { return family_; }
  /// The prime p of the family, or 0 for Generic.
  std::int64_t prime() const { return prime_; }
  bool is_even() const { return delta_ % 2 == 0; }
  /// chi(-1) = +1, i.e. delta > 0.
  bool character_is_even() const { return delta_ > 0; }

  friend bool operator==(const QuadDisc&, const QuadDisc&) = default;

 private:
  explicit QuadDisc(std::int64_t delta);

  std::int64_t delta_;
  std::int64_t conductor_;
  Family family_ = Family::Generic;
  std::int64_t prime_ = 0;
};

bool is_fundamental_discriminant(std::int64_t delta);

/// Convenience alias of QuadDisc::from_squarefree.
QuadDisc fundamental_discriminant(std::int64_t d);

/// The primitive quadratic character of conductor |delta|: (delta/a).
int chi(const QuadDisc& d, std::int64_t a);

/// Sum of chi(a) * a^k over lo <= a <= hi, with [lo, hi] inside [1, D-1].
Integer weighted_char_sum(const QuadDisc& d, int k, std::int64_t lo, std::int64_t hi);

/// Generalised Bernoulli number B_{1,chi} = (sum_{a<D} chi(a) a) / D.
Rational b1_chi(const QuadDisc& d);

}  // namespace fekete

#endif  // FEKETE_NTHEORY_HPP
