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

#include "fekete/galois.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "fekete/ntheory.hpp"

namespace fekete {

namespace {

constexpr std::array<ShapePattern, 3> kTriple = {ShapePattern::Irreducible, ShapePattern::LinearTimesIrred,
                                                 ShapePattern::QuadTimesDistinctOdd};
constexpr std::array<ShapePattern, 4> kQuadruple = {
    ShapePattern::Irreducible, ShapePattern::TwoDistinctLinearTimesIrred, ShapePattern::QuadTimesDistinctOdd,
    ShapePattern::QuartTimesDistinctOdd};

// Every degree other than the listed exceptions (each required exactly once)
// is odd.
bool rest_odd(const FactorShape& s, std::initializer_list<int> once) {
  for (int d : once) {
    if (s.count(d) != 1) return false;
  }
  for (auto [deg, cnt] : s.degrees) {
    if (cnt == 0) continue;
    const bool listed = std::find(once.begin(), once.end(), deg) != once.end();
    if (!listed && deg % 2 == 0) return false;
  }
  return true;
}

std::vector<int> degree_multiset(const FactorShape& s) {
  std::vector<int> out;
  for (auto [deg, cnt] : s.degrees) out.insert(out.end(), static_cast<std::size_t>(cnt), deg);
  return out;
}

bool same_multiset(const FactorShape& s, std::vector<int> want) {
  std::sort(want.begin(), want.end());
  return degree_multiset(s) == want;
}

// Shape of p mod q, or nullopt when q is unusable (degree drop) or the
// reduction is not squarefree.
std::optional<FactorShape> usable_shape(const IntPoly& p, std::uint32_t q) {
  if (mpz_fdiv_ui(p.leading().get_mpz_t(), q) == 0) return std::nullopt;
  FactorShape s = factor_shape(reduce(p, q));
  if (!s.squarefree) return std::nullopt;
  return s;
}

std::vector<int> target_multiset(int n, ShapePattern pat) {
  switch (pat) {
    case ShapePattern::Irreducible: return {n};
    case ShapePattern::LinearTimesIrred: return {1, n - 1};
    case ShapePattern::TwoDistinctLinearTimesIrred: return {1, 1, n - 2};
    default: return {};
  }
}

// Whether a shape whose factors of degree <= d are those in `partial` (all
// further factors having degree > d) can still match pat.
bool pattern_viable(const FactorShape& partial, int d, int n, ShapePattern pat) {
  std::vector<int> once;
  switch (pat) {
    case ShapePattern::QuadTimesDistinctOdd: once = {2}; break;
    case ShapePattern::QuartTimesDistinctOdd: once = {4}; break;
    case ShapePattern::QuadPlusQuartPlusDistinctOdd: once = {2, 4}; break;
    default: {
      std::map<int, int> want;
      for (int k : target_multiset(n, pat)) ++want[k];
      for (int k = 1; k <= d; ++k) {
        const auto it = want.find(k);
        if (partial.count(k) != (it == want.end() ? 0 : it->second)) return false;
      }
      return true;
    }
  }
  for (int k = 2; k <= d; k += 2) {
    const bool listed = std::find(once.begin(), once.end(), k) != once.end();
    if (partial.count(k) != (listed ? 1 : 0)) return false;
  }
  return true;
}

// Like usable_shape, but gives up (nullopt) as soon as no pattern in `open`
// can match any more.
std::optional<FactorShape> usable_shape_for(const IntPoly& p, std::uint32_t q, int n,
                                            const std::vector<ShapePattern>& open) {
  if (mpz_fdiv_ui(p.leading().get_mpz_t(), q) == 0) return std::nullopt;
  const ModPoly m = monic(reduce(p, q));
  if (!gcd_mod(m, derivative(m)).is_one()) return std::nullopt;
  FactorShape partial;
  partial.q = q;
  partial.squarefree = true;
  std::size_t seen = 0;
  auto keep_going = [&](int d, const std::vector<DegreePart>& parts) {
    for (; seen < parts.size(); ++seen) {
      partial.degrees[parts[seen].degree] += static_cast<int>(parts[seen].product.degree() / parts[seen].degree);
    }
    return std::any_of(open.begin(), open.end(),
                       [&](ShapePattern pat) { return pattern_viable(partial, d, n, pat); });
  };
  auto parts = distinct_degree_factorization(m, keep_going);
  if (!parts) return std::nullopt;
  FactorShape shape;
  shape.q = q;
  shape.squarefree = true;
  for (const auto& part : *parts) shape.degrees[part.degree] += static_cast<int>(part.product.degree() / part.degree);
  return shape;
}

std::vector<std::uint32_t> primes_to(std::uint64_t bound) {
  const auto b = static_cast<std::uint32_t>(std::min<std::uint64_t>(bound, 0xffffffffu));
  return primes_up_to(b);
}

void require_nonconstant(const IntPoly& p) {
  if (p.degree() < 1) throw InvalidInput("witness search needs a nonconstant polynomial");
}

// Checks that g_cert is a valid S_n certificate for the trace of f.
void require_trace_certificate(const IntPoly& f, const GaloisCertificate& g_cert) {
  if (g_cert.target != Target::SymmetricOnTrace) {
    throw InvalidInput("trace certificate must conclude S_n");
  }
  const IntPoly g = trace_polynomial(f);
  if (g_cert.degree != g.degree() || !revalidate(g_cert, g)) {
    throw InvalidInput("trace certificate does not match the trace polynomial of f");
  }
}

std::optional<GaloisCertificate> single_witness(const IntPoly& f, ShapePattern pat, std::uint64_t bound) {
  auto w = find_smallest_witness(f, pat, bound);
  if (!w) return std::nullopt;
  GaloisCertificate c;
  c.degree = static_cast<int>(f.degree());
  c.witnesses.push_back(std::move(*w));
  c.bound = bound;
  return c;
}

bool certificates_equal(const GaloisCertificate* a, const GaloisCertificate* b) {
  if (a == nullptr || b == nullptr) return a == b;
  return *a == *b;
}

}  // namespace

std::string_view pattern_name(ShapePattern p) {
  switch (p) {
    case ShapePattern::Irreducible: return "Irreducible";
    case ShapePattern::TwoDistinctLinearTimesIrred: return "TwoDistinctLinearTimesIrred";
    case ShapePattern::LinearTimesIrred: return "LinearTimesIrred";
    case ShapePattern::QuadTimesDistinctOdd: return "QuadTimesDistinctOdd";
    case ShapePattern::QuartTimesDistinctOdd: return "QuartTimesDistinctOdd";
    case ShapePattern::QuadPlusQuartPlusDistinctOdd: return "QuadPlusQuartPlusDistinctOdd";
  }
  return "?";
}

ShapePattern parse_pattern(std::string_view name) {
  for (auto p : {ShapePattern::Irreducible, ShapePattern::TwoDistinctLinearTimesIrred,
                 ShapePattern::LinearTimesIrred, ShapePattern::QuadTimesDistinctOdd,
                 ShapePattern::QuartTimesDistinctOdd, ShapePattern::QuadPlusQuartPlusDistinctOdd}) {
    if (pattern_name(p) == name) return p;
  }
  throw InvalidInput("unknown shape pattern: " + std::string(name));
}

bool match_pattern(const FactorShape& shape, int n, ShapePattern pat) {
  if (!shape.squarefree || shape.total_degree() != n) return false;
  switch (pat) {
    case ShapePattern::Irreducible: return same_multiset(shape, {n});
    case ShapePattern::TwoDistinctLinearTimesIrred: return n >= 3 && same_multiset(shape, {1, 1, n - 2});
    case ShapePattern::LinearTimesIrred: return n >= 2 && same_multiset(shape, {1, n - 1});
    case ShapePattern::QuadTimesDistinctOdd: return rest_odd(shape, {2});
    case ShapePattern::QuartTimesDistinctOdd: return rest_odd(shape, {4});
    case ShapePattern::QuadPlusQuartPlusDistinctOdd: return rest_odd(shape, {2, 4});
  }
  return false;
}

std::string_view target_name(Target t) {
  switch (t) {
    case Target::SymmetricOnTrace: return "SymmetricOnTrace";
    case Target::FullHyperoctahedral: return "FullHyperoctahedral";
    case Target::KernelHyperoctahedral: return "KernelHyperoctahedral";
  }
  return "?";
}

Target parse_target(std::string_view name) {
  for (auto t : {Target::SymmetricOnTrace, Target::FullHyperoctahedral, Target::KernelHyperoctahedral}) {
    if (target_name(t) == name) return t;
  }
  throw InvalidInput("unknown certificate target: " + std::string(name));
}

std::string group_label(Target t, int n) {
  const std::string sn = "S_" + std::to_string(n);
  switch (t) {
    case Target::SymmetricOnTrace: return sn;
    case Target::FullHyperoctahedral: return "(Z/2)^" + std::to_string(n) + " ⋊ " + sn;
    case Target::KernelHyperoctahedral: return "ker(Σ') ⋊ " + sn;
  }
  return sn;
}

std::string_view route_name(DiscRoute r) {
  switch (r) {
    case DiscRoute::SFactor: return "SFactor";
    case DiscRoute::FullResultant: return "FullResultant";
    case DiscRoute::Both: return "Both";
  }
  return "?";
}

bool operator==(const GaloisCertificate& a, const GaloisCertificate& b) {
  return a.target == b.target && a.degree == b.degree && a.witnesses == b.witnesses && a.disc == b.disc &&
         a.bound == b.bound && a.group == b.group && certificates_equal(a.trace.get(), b.trace.get());
}

DiscVerdict disc_is_square(const IntPoly& f, bool full_route) {
  if (f.degree() < 1) throw InvalidInput("disc_is_square: polynomial must be nonconstant");
  DiscVerdict v;
  const bool reciprocal = f.degree() % 2 == 0 && is_reciprocal(f);

  if (!reciprocal) {
    v.via = DiscRoute::FullResultant;
    v.discriminant = discriminant(f);
    if (*v.discriminant == 0) throw InvalidInput("disc_is_square: discriminant is zero");
    v.square = *v.discriminant > 0 && integer_sqrt(*v.discriminant).exact;
    return v;
  }

  v.s = disc_sign_factor(f);
  const Integer disc_g = discriminant(trace_polynomial(f));
  if (v.s == 0 || disc_g == 0) throw InvalidInput("disc_is_square: discriminant is zero");
  const bool s_square = v.s > 0 && integer_sqrt(v.s).exact;
  if (s_square) v.s_root = integer_sqrt(v.s).root;
  v.square = s_square;
  v.via = DiscRoute::SFactor;

  if (full_route) {
    v.via = DiscRoute::Both;
    v.discriminant = discriminant(f);
    if (*v.discriminant != v.s * disc_g * disc_g) {
      throw VerificationFailure("disc(f) != s * disc(g)^2 for f = " + to_string(f));
    }
    const bool full_square = *v.discriminant > 0 && integer_sqrt(*v.discriminant).exact;
    if (full_square != s_square) {
      throw VerificationFailure("discriminant routes disagree on squareness for f = " + to_string(f));
    }
  }
  return v;
}

std::optional<Witness> find_smallest_witness(const IntPoly& p, ShapePattern pat, std::uint64_t bound) {
  const std::array<ShapePattern, 1> slot = {pat};
  return find_witnesses_per_slot(p, slot, bound).front();
}

std::vector<std::optional<Witness>> find_witnesses_per_slot(const IntPoly& p,
                                                             std::span<const ShapePattern> slots,
                                                             std::uint64_t bound) {
  require_nonconstant(p);
  const int n = static_cast<int>(p.degree());
  std::vector<std::optional<Witness>> out(slots.size());
  std::size_t open = slots.size();
  for (std::uint32_t q : primes_to(bound)) {
    if (open == 0) break;
    std::vector<ShapePattern> pending;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (!out[i]) pending.push_back(slots[i]);
    }
    auto shape = usable_shape_for(p, q, n, pending);
    if (!shape) continue;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (out[i] || !match_pattern(*shape, n, slots[i])) continue;
      out[i] = Witness{q, slots[i], *shape};
      --open;
    }
  }
  return out;
}

std::optional<JointSearch> find_witnesses_joint(const IntPoly& p, std::span<const ShapePattern> slots,
                                                std::uint64_t bound) {
  require_nonconstant(p);
  const int n = static_cast<int>(p.degree());
  // Candidates per slot in increasing q; a tuple needs pairwise distinct q.
  std::vector<std::vector<Witness>> cand(slots.size());
  std::vector<Witness> chosen(slots.size());
  std::vector<std::uint32_t> used;

  // Lexicographically least assignment of distinct primes, slot by slot.
  auto assign = [&](auto&& self, std::size_t i) -> bool {
    if (i == slots.size()) return true;
    for (const Witness& w : cand[i]) {
      if (std::find(used.begin(), used.end(), w.q) != used.end()) continue;
      used.push_back(w.q);
      chosen[i] = w;
      if (self(self, i + 1)) return true;
      used.pop_back();
    }
    return false;
  };

  const std::vector<ShapePattern> all(slots.begin(), slots.end());
  for (std::uint32_t q : primes_to(bound)) {
    auto shape = usable_shape_for(p, q, n, all);
    if (!shape) continue;
    bool grew = false;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (match_pattern(*shape, n, slots[i])) {
        cand[i].push_back(Witness{q, slots[i], *shape});
        grew = true;
      }
    }
    if (!grew) continue;
    used.clear();
    if (assign(assign, 0)) return JointSearch{chosen, q};
  }
  return std::nullopt;
}

std::span<const ShapePattern> triple_patterns() { return kTriple; }
std::span<const ShapePattern> quadruple_patterns() { return kQuadruple; }

std::optional<GaloisCertificate> certify_trace_symmetric(const IntPoly& g, std::uint64_t bound) {
  auto found = find_witnesses_per_slot(g, kTriple, bound);
  GaloisCertificate c;
  c.target = Target::SymmetricOnTrace;
  c.degree = static_cast<int>(g.degree());
  c.bound = bound;
  for (auto& w : found) {
    if (!w) return std::nullopt;
    c.witnesses.push_back(std::move(*w));
  }
  c.group = group_label(c.target, c.degree);
  return c;
}

std::optional<GaloisCertificate> certify_full_quadruple(const IntPoly& f, std::uint64_t bound) {
  if (f.degree() < 2 || f.degree() % 2 != 0 || !is_reciprocal(f)) {
    throw InvalidInput("quadruple test needs a reciprocal polynomial of even degree");
  }
  auto found = find_witnesses_per_slot(f, kQuadruple, bound);
  GaloisCertificate c;
  c.target = Target::FullHyperoctahedral;
  c.degree = static_cast<int>(f.degree());
  c.bound = bound;
  for (auto& w : found) {
    if (!w) return std::nullopt;
    c.witnesses.push_back(std::move(*w));
  }
  c.group = group_label(c.target, c.degree / 2);
  return c;
}

std::optional<GaloisCertificate> certify_full_2cycle(const IntPoly& f, const GaloisCertificate& g_cert,
                                                     std::uint64_t bound) {
  require_trace_certificate(f, g_cert);
  auto c = single_witness(f, ShapePattern::QuadTimesDistinctOdd, bound);
  if (!c) return std::nullopt;
  c->target = Target::FullHyperoctahedral;
  c->group = group_label(c->target, c->degree / 2);
  c->trace = std::make_shared<const GaloisCertificate>(g_cert);
  return c;
}

std::optional<GaloisCertificate> certify_kernel(const IntPoly& f, const GaloisCertificate& g_cert,
                                                std::uint64_t bound, bool full_disc_route) {
  require_trace_certificate(f, g_cert);
  auto c = single_witness(f, ShapePattern::QuadPlusQuartPlusDistinctOdd, bound);
  if (!c) return std::nullopt;
  c->disc = disc_is_square(f, full_disc_route);
  c->target = c->disc->square ? Target::KernelHyperoctahedral : Target::FullHyperoctahedral;
  c->group = group_label(c->target, c->degree / 2);
  c->trace = std::make_shared<const GaloisCertificate>(g_cert);
  return c;
}

bool revalidate(const GaloisCertificate& cert, const IntPoly& poly) {
  if (poly.degree() != cert.degree) return false;
  for (const Witness& w : cert.witnesses) {
    if (!is_prime(w.q)) return false;
    auto shape = usable_shape(poly, w.q);
    if (!shape || *shape != w.shape) return false;
    if (!match_pattern(*shape, cert.degree, w.pattern)) return false;
  }
  if (cert.trace) {
    if (poly.degree() % 2 != 0 || !is_reciprocal(poly)) return false;
    if (!revalidate(*cert.trace, trace_polynomial(poly))) return false;
  }
  if (cert.disc) {
    if (disc_is_square(poly, cert.disc->discriminant.has_value()) != *cert.disc) return false;
  }
  return true;
}

SignEmbeddingReport brute_force_sign_embedding(int n) {
  if (n < 1 || n > 4) throw InvalidInput("sign embedding check supports 1 <= n <= 4");
  SignEmbeddingReport report;
  report.n = n;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  // Points +i and -i are stored at 2i and 2i+1.
  const auto m = static_cast<std::size_t>(2 * n);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> image(m);
      int product = 1;
      for (int i = 0; i < n; ++i) {
        const bool flip = (mask >> i) & 1u;
        if (flip) product = -product;
        const auto target = static_cast<std::size_t>(2 * sigma[static_cast<std::size_t>(i)]);
        image[static_cast<std::size_t>(2 * i)] = target + (flip ? 1 : 0);
        image[static_cast<std::size_t>(2 * i + 1)] = target + (flip ? 0 : 1);
      }
      std::vector<bool> seen(m, false);
      std::size_t cycles = 0;
      for (std::size_t s = 0; s < m; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t t = s; !seen[t]; t = image[t]) seen[t] = true;
      }
      const int sgn = (m - cycles) % 2 == 0 ? 1 : -1;
      ++report.elements;
      if (sgn != product) ++report.failures;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return report;
}

}  // namespace fekete
