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

#ifndef FEKETE_GALOIS_HPP
#define FEKETE_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fekete/int_poly.hpp"
#include "fekete/mod_poly.hpp"

namespace fekete {

/// Factorisation patterns mod q used as Frobenius cycle-type witnesses.
/// Every pattern requires a squarefree reduction.
enum class ShapePattern {
  Irreducible,                  // one factor of full degree
  TwoDistinctLinearTimesIrred,  // two roots and an irreducible of degree n-2
  LinearTimesIrred,             // one root and an irreducible of degree n-1
  QuadTimesDistinctOdd,         // one quadratic, every other factor of odd degree
  QuartTimesDistinctOdd,        // one quartic, every other factor of odd degree
  QuadPlusQuartPlusDistinctOdd  // one quadratic, one quartic, the rest odd
};

std::string_view pattern_name(ShapePattern p);
ShapePattern parse_pattern(std::string_view name);

bool match_pattern(const FactorShape& shape, int total_degree, ShapePattern pat);

/// Conclusion a certificate supports.
enum class Target { SymmetricOnTrace, FullHyperoctahedral, KernelHyperoctahedral };

std::string_view target_name(Target t);
Target parse_target(std::string_view name);

/// Group label for the degree n of the trace polynomial: "S_n",
/// "(Z/2)^n ⋊ S_n" or "ker(Σ') ⋊ S_n".
std::string group_label(Target t, int n);

struct Witness {
  std::uint32_t q = 0;
  ShapePattern pattern = ShapePattern::Irreducible;
  FactorShape shape;

  friend bool operator==(const Witness&, const Witness&) = default;
};

enum class DiscRoute { SFactor, FullResultant, Both };
std::string_view route_name(DiscRoute r);

struct DiscVerdict {
  bool square = false;
  /// (-1)^n f(1) f(-1); only meaningful when the s-factor route ran.
  Integer s;
  /// sqrt(s) when the s-factor route ran and s is a square.
  std::optional<Integer> s_root;
  /// Full discriminant when the resultant route ran.
  std::optional<Integer> discriminant;
  DiscRoute via = DiscRoute::Both;

  friend bool operator==(const DiscVerdict&, const DiscVerdict&) = default;
};

/// Perfect-square test for disc(f). For reciprocal f of even degree both the
/// s-factor route and the full resultant route run (unless full_route is
/// false), and the identity disc(f) = s * disc(g)^2 is checked; any
/// disagreement throws VerificationFailure. disc(f) = 0 throws InvalidInput.
DiscVerdict disc_is_square(const IntPoly& f, bool full_route = true);

struct GaloisCertificate {
  Target target = Target::SymmetricOnTrace;
  /// Degree of the certified polynomial.
  int degree = 0;
  std::vector<Witness> witnesses;
  std::optional<DiscVerdict> disc;
  std::uint64_t bound = 0;
  std::string group;
  /// Certificate for the trace polynomial (2-cycle and kernel routes).
  std::shared_ptr<const GaloisCertificate> trace;

  friend bool operator==(const GaloisCertificate& a, const GaloisCertificate& b);
};

/// Least prime q <= bound (starting at 2) at which p reduces without degree
/// drop, squarefree, and matching pat. Deterministic.
std::optional<Witness> find_smallest_witness(const IntPoly& p, ShapePattern pat, std::uint64_t bound);

/// One scan over the primes filling each slot with its own smallest
/// witness. Slots still empty at the bound are nullopt.
std::vector<std::optional<Witness>> find_witnesses_per_slot(const IntPoly& p,
                                                             std::span<const ShapePattern> slots,
                                                             std::uint64_t bound);

/// Joint mode: the prefix of primes up to the first q where every slot has
/// been satisfied; returns the tuple together with max q_i. For independent
/// slots this coincides with the per-slot minima.
struct JointSearch {
  std::vector<Witness> witnesses;
  std::uint32_t max_q = 0;
};
std::optional<JointSearch> find_witnesses_joint(const IntPoly& p, std::span<const ShapePattern> slots,
                                                std::uint64_t bound);

/// Slot patterns of the triple test on g (degree n => S_n).
std::span<const ShapePattern> triple_patterns();
/// Slot patterns of the quadruple test on reciprocal f.
std::span<const ShapePattern> quadruple_patterns();

std::optional<GaloisCertificate> certify_trace_symmetric(const IntPoly& g, std::uint64_t bound);
std::optional<GaloisCertificate> certify_full_quadruple(const IntPoly& f, std::uint64_t bound);
/// Requires a valid S_n certificate for trace_polynomial(f).
std::optional<GaloisCertificate> certify_full_2cycle(const IntPoly& f, const GaloisCertificate& g_cert,
                                                     std::uint64_t bound);
std::optional<GaloisCertificate> certify_kernel(const IntPoly& f, const GaloisCertificate& g_cert,
                                                std::uint64_t bound, bool full_disc_route = true);

/// Recomputes every witness shape of cert against poly (and, for attached
/// trace certificates, against trace_polynomial(poly)); true iff all match
/// and each still satisfies its pattern.
bool revalidate(const GaloisCertificate& cert, const IntPoly& poly);

struct SignEmbeddingReport {
  int n = 0;
  std::uint64_t elements = 0;
  std::uint64_t failures = 0;
  bool passed() const { return failures == 0; }
};

/// Enumerates all 2^n n! signed permutations as permutations of
/// {+-1..+-n} and checks sgn = a_1 ... a_n. 1 <= n <= 4.
SignEmbeddingReport brute_force_sign_embedding(int n);

}  // namespace fekete

#endif  // FEKETE_GALOIS_HPP
