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

#ifndef FEKETE_FEKETE_HPP
#define FEKETE_FEKETE_HPP

#include <cstdint>
#include <optional>

#include "fekete/cyclotomic.hpp"
#include "fekete/int_poly.hpp"
#include "fekete/ntheory.hpp"

namespace fekete {

/// F_Delta(x) = sum_{a=1}^{D-1} (Delta/a) x^a.
IntPoly fekete_raw(const QuadDisc& d);

/// For even Delta: sum_{a=0}^{D/2-1} (Delta/(2a+1)) x^a, so that
/// F_Delta(x) = x * Ftilde(x^2). Throws InvalidInput for odd Delta.
IntPoly fekete_modified(const QuadDisc& d);

/// The raw polynomials together with the compact polynomial f and its trace g.
///
/// For the four prime families (4p, -4p, 3p, -3p) f is the base polynomial
/// (Ftilde for even Delta, F otherwise) divided by the proven cyclotomic
/// content. Any other Delta falls back to the residual of strip_cyclotomic,
/// flagged as `conjectural`.
struct FeketeBundle {
  QuadDisc disc;
  IntPoly F;
  std::optional<IntPoly> F_tilde;
  IntPoly f;
  IntPoly g;
  /// Cyclotomic content removed from the base polynomial; its residual is
  /// sign * f.
  MultiplicityReport removed;
  /// +1 or -1, so that f = sign * (base / removed product) has positive
  /// leading coefficient.
  int sign = 1;
  bool conjectural = false;

  bool removed_from_modified() const { return F_tilde.has_value(); }
};

/// Degree of f_Delta predicted for the family, or nullopt outside the
/// four prime families.
std::optional<long> predicted_compact_degree(const QuadDisc& d);

/// Default strip bound 3 * D for the generic fallback.
FeketeBundle fekete_compact(const QuadDisc& d, std::optional<std::uint64_t> cyclo_bound = std::nullopt);

/// g = trace_polynomial(bundle.f).
IntPoly fekete_trace(const FeketeBundle& bundle);

}  // namespace fekete

#endif  // FEKETE_FEKETE_HPP
