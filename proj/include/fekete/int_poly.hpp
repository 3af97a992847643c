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

#ifndef FEKETE_INT_POLY_HPP
#define FEKETE_INT_POLY_HPP

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fekete/integer.hpp"

namespace fekete {

/// Dense univariate polynomial over Z. coeffs()[i] is the coefficient of x^i.
/// Always canonical: no trailing zero coefficients, the zero polynomial is
/// the empty sequence.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t k);
  /// x^n - 1.
  static IntPoly x_pow_minus_one(std::size_t n);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^i (zero beyond the degree).
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly sub(const IntPoly& p, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly scale(const IntPoly& p, const Integer& c);

/// r with p = q * r when q divides p in Z[x], otherwise nullopt.
/// Throws InvalidInput when q is zero.
std::optional<IntPoly> exact_div(const IntPoly& p, const IntPoly& q);

Integer eval(const IntPoly& p, const Integer& x0);
IntPoly derivative(const IntPoly& p);

/// p(x^k).
IntPoly substitute_power(const IntPoly& p, std::size_t k);
/// p(-x).
IntPoly substitute_negate(const IntPoly& p);
/// p / x^v with v the multiplicity of the root 0; returns v.
std::size_t strip_x_power(IntPoly& p);

/// Palindromic coefficient sequence, x^deg p(1/x) = p(x). Zero is reciprocal.
bool is_reciprocal(const IntPoly& p);

/// The unique g of degree n with f(x) = x^n g(x + 1/x), for reciprocal f of
/// even degree 2n. Throws InvalidInput for non-reciprocal or odd-degree f.
IntPoly trace_polynomial(const IntPoly& f);
/// Inverse of trace_polynomial: x^n g(x + 1/x) for g of degree n.
IntPoly reciprocal_from_trace(const IntPoly& g);

/// Res(p, q) by the subresultant algorithm over Z.
Integer resultant(const IntPoly& p, const IntPoly& q);
/// (-1)^(n(n-1)/2) Res(p, p') / lc(p). Requires degree >= 1.
Integer discriminant(const IntPoly& p);
/// (-1)^n f(1) f(-1) for reciprocal f of degree 2n.
Integer disc_sign_factor(const IntPoly& f);

/// Canonical text: "c_k*x^k + ... + c_1*x + c_0" with signs folded into the
/// separators, e.g. "x^2 - 2*x + 1". Unit coefficients are omitted.
std::string to_string(const IntPoly& p);
/// Accepts the output of to_string, plus explicit unit coefficients ("1*x"),
/// '^' exponents and arbitrary whitespace. Variable name is x or t.
IntPoly parse_poly(std::string_view text);

}  // namespace fekete

#endif  // FEKETE_INT_POLY_HPP
