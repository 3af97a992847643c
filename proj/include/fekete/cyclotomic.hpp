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

#ifndef FEKETE_CYCLOTOMIC_HPP
#define FEKETE_CYCLOTOMIC_HPP

#include <cstdint>
#include <map>

#include "fekete/int_poly.hpp"
#include "fekete/ntheory.hpp"

namespace fekete {

/// The n-th cyclotomic polynomial. Results are memoised process-wide behind
/// a mutex; the returned reference stays valid for the program's lifetime.
const IntPoly& cyclotomic_poly(std::uint64_t n);

/// Largest r with Phi_n^r dividing F. F must be nonzero.
int multiplicity(const IntPoly& F, std::uint64_t n);

/// F = x^v * prod Phi_n^r * residual.
struct MultiplicityReport {
  std::size_t vanishing_order_at_zero = 0;
  std::map<std::uint64_t, int> entries;
  IntPoly residual;

  int multiplicity_of(std::uint64_t n) const {
    auto it = entries.find(n);
    return it == entries.end() ? 0 : it->second;
  }
  /// x^v * prod Phi_n^r (without the residual).
  IntPoly removed_product() const;
};

/// Removes x^v, then every Phi_n with n <= candidate_bound (to maximal
/// multiplicity) while phi(n) fits in the running cofactor.
MultiplicityReport strip_cyclotomic(const IntPoly& F, std::uint64_t candidate_bound);

/// Multiplicities r_Delta(n) of Phi_n in F_Delta that have closed forms.
/// Always contains n = 1 and n = 2; the four prime families add their
/// exceptional factors (including proven zeros).
std::map<std::uint64_t, int> predicted_multiplicities(const QuadDisc& d);

}  // namespace fekete

#endif  // FEKETE_CYCLOTOMIC_HPP
