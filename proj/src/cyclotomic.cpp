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

#include "fekete/cyclotomic.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>

#include "fekete/mod_poly.hpp"

namespace fekete {

namespace {

// Largest prime below 2^32; used to reject non-divisors cheaply before the
// exact division over Z.
constexpr std::uint32_t kFilterPrime = 4294967291u;

struct CyclotomicCache {
  std::mutex mutex;
  std::unordered_map<std::uint64_t, std::unique_ptr<const IntPoly>> polys;
};

CyclotomicCache& cache() {
  static CyclotomicCache instance;
  return instance;
}

// Phi_m for squarefree m: Phi_p = (x^p - 1)/(x - 1), then
// Phi_{mp}(x) = Phi_m(x^p) / Phi_m(x) for each further prime p not dividing m.
IntPoly squarefree_cyclotomic(std::uint64_t m) {
  IntPoly phi{-1, 1};
  std::uint64_t built = 1;
  for (auto [p, e] : factorize(m)) {
    auto q = exact_div(substitute_power(phi, p), phi);
    if (!q) throw VerificationFailure("cyclotomic identity failed at n=" + std::to_string(built * p));
    phi = std::move(*q);
    built *= p;
  }
  return phi;
}

IntPoly compute_cyclotomic(std::uint64_t n) {
  if (n == 1) return IntPoly{-1, 1};
  std::uint64_t radical = 1;
  for (auto [p, e] : factorize(n)) radical *= p;
  // Phi_{2m}(x) = Phi_m(-x) for odd m > 1.
  IntPoly base = (radical % 2 == 0 && radical > 2) ? substitute_negate(squarefree_cyclotomic(radical / 2))
                                                   : squarefree_cyclotomic(radical);
  // Phi_{np}(x) = Phi_n(x^p) when p | n.
  return radical == n ? base : substitute_power(base, n / radical);
}

// True when Phi_n might divide F (always true if it does).
bool may_divide(const IntPoly& F, const IntPoly& phi) {
  return rem(reduce(F, kFilterPrime), reduce(phi, kFilterPrime)).is_zero();
}

int divide_out(IntPoly& F, const IntPoly& phi) {
  int r = 0;
  while (F.degree() >= phi.degree() && may_divide(F, phi)) {
    auto q = exact_div(F, phi);
    if (!q) break;
    F = std::move(*q);
    ++r;
  }
  return r;
}

}  // namespace

const IntPoly& cyclotomic_poly(std::uint64_t n) {
  if (n == 0) throw InvalidInput("cyclotomic_poly: n must be positive");
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    auto it = c.polys.find(n);
    if (it != c.polys.end()) return *it->second;
  }
  auto computed = std::make_unique<const IntPoly>(compute_cyclotomic(n));
  std::lock_guard lock(c.mutex);
  auto [it, inserted] = c.polys.try_emplace(n, std::move(computed));
  return *it->second;
}

int multiplicity(const IntPoly& F, std::uint64_t n) {
  if (F.is_zero()) throw InvalidInput("multiplicity: zero polynomial");
  IntPoly work = F;
  return divide_out(work, cyclotomic_poly(n));
}

IntPoly MultiplicityReport::removed_product() const {
  IntPoly out = IntPoly::monomial(1, vanishing_order_at_zero);
  for (auto [n, r] : entries) {
    for (int i = 0; i < r; ++i) out *= cyclotomic_poly(n);
  }
  return out;
}

MultiplicityReport strip_cyclotomic(const IntPoly& F, std::uint64_t candidate_bound) {
  if (F.is_zero()) throw InvalidInput("strip_cyclotomic: zero polynomial");
  MultiplicityReport report;
  report.residual = F;
  report.vanishing_order_at_zero = strip_x_power(report.residual);
  for (std::uint64_t n = 1; n <= candidate_bound; ++n) {
    if (report.residual.degree() < 1) break;
    if (euler_phi(n) > static_cast<std::uint64_t>(report.residual.degree())) continue;
    const int r = divide_out(report.residual, cyclotomic_poly(n));
    if (r > 0) report.entries[n] = r;
  }
  return report;
}

std::map<std::uint64_t, int> predicted_multiplicities(const QuadDisc& d) {
  std::map<std::uint64_t, int> r;
  const bool odd_character = !d.character_is_even();
  r[1] = odd_character ? 1 : 2;
  if (d.is_even()) {
    r[2] = r[1];
  } else {
    r[2] = odd_character ? 0 : 1;
  }
  const auto p = static_cast<std::uint64_t>(d.prime());
  switch (d.family()) {
    case Family::FourP:
      r[4] = p % 8 == 7 ? 3 : 1;
      r[12] = p % 8 == 7 ? 1 : 0;
      r[p] = 1;
      r[2 * p] = 1;
      break;
    case Family::MinusFourP:
      r[4] = 2;
      r[12] = p % 8 == 5 ? 1 : 0;
      r[p] = 1;
      r[2 * p] = 1;
      break;
    case Family::ThreeP:
      r[3] = p % 3 == 2 ? 2 : 1;
      r[6] = p % 3 == 2 ? 1 : 0;
      r[p] = 1;
      break;
    case Family::MinusThreeP:
      r[3] = 1;
      r[p] = 1;
      break;
    case Family::OddPrime:
    case Family::Generic:
      break;
  }
  return r;
}

}  // namespace fekete
