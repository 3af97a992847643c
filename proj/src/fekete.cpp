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

#include "fekete/fekete.hpp"

#include <string>

namespace fekete {

IntPoly fekete_raw(const QuadDisc& d) {
  const std::int64_t D = d.conductor();
  std::vector<Integer> c(static_cast<std::size_t>(D));
  for (std::int64_t a = 1; a < D; ++a) c[static_cast<std::size_t>(a)] = chi(d, a);
  return IntPoly(std::move(c));
}

IntPoly fekete_modified(const QuadDisc& d) {
  if (!d.is_even()) {
    throw InvalidInput("modified Fekete polynomial needs an even discriminant, got " +
                       std::to_string(d.delta()));
  }
  const std::int64_t half = d.conductor() / 2;
  std::vector<Integer> c(static_cast<std::size_t>(half));
  for (std::int64_t a = 0; a < half; ++a) c[static_cast<std::size_t>(a)] = chi(d, 2 * a + 1);
  return IntPoly(std::move(c));
}

std::optional<long> predicted_compact_degree(const QuadDisc& d) {
  const long p = static_cast<long>(d.prime());
  switch (d.family()) {
    case Family::FourP: return p % 8 == 7 ? p - 7 : p - 3;
    case Family::MinusFourP: return p % 8 == 5 ? p - 5 : p - 3;
    case Family::ThreeP: return p % 3 == 2 ? 2 * (p - 5) : 2 * (p - 3);
    case Family::MinusThreeP: return 2 * (p - 2);
    case Family::OddPrime:
    case Family::Generic: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

// Cyclotomic content divided out of the base polynomial for each family;
// vanishing order at zero is 1 for the odd families (F has no constant term).
MultiplicityReport family_content(const QuadDisc& d) {
  const auto p = static_cast<std::uint64_t>(d.prime());
  MultiplicityReport r;
  switch (d.family()) {
    case Family::FourP:
      if (p % 8 == 7) {
        r.entries = {{1, 2}, {2, 3}, {6, 1}, {p, 1}};
      } else {
        r.entries = {{1, 2}, {2, 1}, {p, 1}};
      }
      break;
    case Family::MinusFourP:
      if (p % 8 == 5) {
        r.entries = {{1, 1}, {2, 2}, {6, 1}, {p, 1}};
      } else {
        r.entries = {{1, 1}, {2, 2}, {p, 1}};
      }
      break;
    case Family::ThreeP:
      r.vanishing_order_at_zero = 1;
      if (p % 3 == 2) {
        r.entries = {{1, 2}, {2, 1}, {3, 2}, {6, 1}, {p, 1}};
      } else {
        r.entries = {{1, 2}, {2, 1}, {3, 1}, {p, 1}};
      }
      break;
    case Family::MinusThreeP:
      r.vanishing_order_at_zero = 1;
      r.entries = {{1, 1}, {3, 1}, {p, 1}};
      break;
    case Family::OddPrime:
    case Family::Generic:
      break;
  }
  return r;
}

}  // namespace

FeketeBundle fekete_compact(const QuadDisc& d, std::optional<std::uint64_t> cyclo_bound) {
  FeketeBundle b{d, fekete_raw(d), std::nullopt, {}, {}, {}, 1, false};
  if (d.is_even()) b.F_tilde = fekete_modified(d);
  const IntPoly& base = b.F_tilde ? *b.F_tilde : b.F;
  const auto expected_degree = predicted_compact_degree(d);

  if (expected_degree) {
    b.removed = family_content(d);
    auto quotient = exact_div(base, b.removed.removed_product());
    if (!quotient) {
      throw VerificationFailure("family cyclotomic content does not divide the Fekete polynomial for Delta=" +
                                std::to_string(d.delta()));
    }
    b.removed.residual = std::move(*quotient);
  } else {
    b.conjectural = true;
    const std::uint64_t bound = cyclo_bound.value_or(3 * static_cast<std::uint64_t>(d.conductor()));
    b.removed = strip_cyclotomic(base, bound);
  }

  b.sign = b.removed.residual.is_zero() || b.removed.residual.leading() > 0 ? 1 : -1;
  b.f = b.removed.residual * Integer(b.sign);
  if (expected_degree && b.f.degree() != *expected_degree) {
    throw VerificationFailure("compact Fekete polynomial for Delta=" + std::to_string(d.delta()) +
                              " has degree " + std::to_string(b.f.degree()) + ", expected " +
                              std::to_string(*expected_degree));
  }
  b.g = fekete_trace(b);
  return b;
}

IntPoly fekete_trace(const FeketeBundle& bundle) { return trace_polynomial(bundle.f); }

}  // namespace fekete
