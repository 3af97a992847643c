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

#ifndef FEKETE_MOD_POLY_HPP
#define FEKETE_MOD_POLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fekete/int_poly.hpp"

namespace fekete {

/// Dense polynomial over F_q for a prime q < 2^32. Coefficients are kept
/// reduced and the representation is canonical (no leading zeros).
class ModPoly {
 public:
  using Residue = std::uint32_t;

  explicit ModPoly(std::uint32_t modulus);
  ModPoly(std::uint32_t modulus, std::vector<Residue> coeffs);
  /// Coefficients given as signed integers, reduced into [0, q).
  static ModPoly from_signed(std::uint32_t modulus, std::initializer_list<long long> coeffs);
  static ModPoly x(std::uint32_t modulus);

  std::uint32_t modulus() const { return q_; }
  const std::vector<Residue>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Residue coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Residue leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  friend bool operator==(const ModPoly&, const ModPoly&) = default;

 private:
  void trim();

  std::uint32_t q_;
  std::vector<Residue> c_;
};

/// Coefficient-wise reduction of an integer polynomial modulo q.
ModPoly reduce(const IntPoly& p, std::uint32_t q);

ModPoly add(const ModPoly& a, const ModPoly& b);
ModPoly sub(const ModPoly& a, const ModPoly& b);
ModPoly mul(const ModPoly& a, const ModPoly& b);
/// Quotient and remainder; throws InvalidInput on division by zero.
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly rem(const ModPoly& a, const ModPoly& b);
ModPoly monic(const ModPoly& a);
ModPoly derivative(const ModPoly& a);
/// base^e mod m.
ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m);
/// Monic gcd; gcd(0, 0) = 0. Throws InvalidInput on modulus mismatch.
ModPoly gcd_mod(const ModPoly& a, const ModPoly& b);

std::string to_string(const ModPoly& p);

struct DegreePart {
  int degree;
  /// Product of all monic irreducible factors of that degree.
  ModPoly product;
};

/// Distinct-degree factorisation of a squarefree monic polynomial of degree
/// >= 1. Throws InvalidInput for non-monic or non-squarefree input.
std::vector<DegreePart> distinct_degree_factorization(const ModPoly& f);

/// Called once every factor of degree <= d has been split off; returning
/// false abandons the factorisation.
using DdfMonitor = std::function<bool(int d, const std::vector<DegreePart>& parts)>;

/// As above, but stops early (returning nullopt) when keep_going says so.
std::optional<std::vector<DegreePart>> distinct_degree_factorization(const ModPoly& f, const DdfMonitor& keep_going);

/// Splits a product of distinct monic irreducibles all of degree d
/// (Cantor-Zassenhaus; trace map in characteristic 2). Factors come back
/// sorted by coefficient vector so the output is independent of the seed.
std::vector<ModPoly> equal_degree_factorization(const ModPoly& part, int d, std::mt19937_64& rng);
std::vector<ModPoly> equal_degree_factorization(const ModPoly& part, int d, std::uint64_t seed = 0x5eed);

/// Multiset of degrees of the distinct irreducible factors.
struct FactorShape {
  std::uint32_t q = 0;
  bool squarefree = false;
  /// degree -> number of irreducible factors of that degree (empty unless
  /// squarefree).
  std::map<int, int> degrees;

  int total_degree() const;
  int count(int degree) const;
  friend bool operator==(const FactorShape&, const FactorShape&) = default;
};

/// Thrown by factor_shape when q divides the leading coefficient.
class UnusablePrime : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Shape of p mod q. Requires q prime and lc(p) != 0 mod q.
FactorShape factor_shape(const IntPoly& p, std::uint32_t q);
FactorShape factor_shape(const ModPoly& f);

/// Render as "{2:1, 4:1, 5:2}".
std::string to_string(const FactorShape& s);

}  // namespace fekete

#endif  // FEKETE_MOD_POLY_HPP
