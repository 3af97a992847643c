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

#include <doctest.h>

#include <random>
#include <set>

#include "fekete/fekete.hpp"
#include "fekete/galois.hpp"
#include "oracles.hpp"

using namespace fekete;

namespace {

const IntPoly kF44{1, -1, 2, 0, 3, 0, 2, -1, 1};
const IntPoly kG44{1, 3, -2, -1, 1};
constexpr std::uint64_t kBound = 100000;

FactorShape shape_of(std::map<int, int> degrees) {
  FactorShape s;
  s.squarefree = true;
  s.degrees = std::move(degrees);
  return s;
}

std::vector<std::uint32_t> primes_of(const GaloisCertificate& c) {
  std::vector<std::uint32_t> out;
  for (const Witness& w : c.witnesses) out.push_back(w.q);
  return out;
}

FeketeBundle bundle(std::int64_t delta) { return fekete_compact(QuadDisc::from_discriminant(delta)); }

// Independent check that a witness really has the claimed degrees, using
// the trial-division oracle for small degree.
void check_witness_with_oracle(const IntPoly& p, const Witness& w) {
  oracle::FPoly c;
  for (const Integer& a : p.coeffs()) {
    c.push_back(static_cast<int>(mpz_fdiv_ui(a.get_mpz_t(), w.q)));
  }
  bool squarefree = false;
  const auto degrees = oracle::factor_degrees(c, static_cast<int>(w.q), squarefree);
  CHECK(squarefree);
  CHECK(degrees == w.shape.degrees);
}

}  // namespace

TEST_CASE("pattern predicates") {
  CHECK(match_pattern(shape_of({{4, 1}}), 4, ShapePattern::Irreducible));
  CHECK(match_pattern(shape_of({{2, 1}, {4, 1}, {5, 2}}), 16, ShapePattern::QuadPlusQuartPlusDistinctOdd));
  CHECK_FALSE(match_pattern(shape_of({{2, 2}}), 4, ShapePattern::QuadTimesDistinctOdd));
  CHECK(match_pattern(shape_of({{1, 1}, {3, 1}}), 4, ShapePattern::LinearTimesIrred));
  CHECK_FALSE(match_pattern(shape_of({{1, 1}, {3, 1}}), 4, ShapePattern::Irreducible));
  CHECK(match_pattern(shape_of({{1, 2}, {6, 1}}), 8, ShapePattern::TwoDistinctLinearTimesIrred));
  CHECK_FALSE(match_pattern(shape_of({{1, 2}, {3, 2}}), 8, ShapePattern::TwoDistinctLinearTimesIrred));
  CHECK(match_pattern(shape_of({{2, 1}, {1, 3}, {3, 1}}), 8, ShapePattern::QuadTimesDistinctOdd));
  CHECK(match_pattern(shape_of({{4, 1}, {1, 1}, {3, 1}}), 8, ShapePattern::QuartTimesDistinctOdd));
  CHECK_FALSE(match_pattern(shape_of({{4, 1}, {2, 1}, {1, 2}}), 8, ShapePattern::QuartTimesDistinctOdd));
  // total degree must match, and the reduction must be squarefree
  CHECK_FALSE(match_pattern(shape_of({{4, 1}}), 5, ShapePattern::Irreducible));
  FactorShape not_sf;
  not_sf.squarefree = false;
  CHECK_FALSE(match_pattern(not_sf, 4, ShapePattern::Irreducible));

  for (ShapePattern p : {ShapePattern::Irreducible, ShapePattern::TwoDistinctLinearTimesIrred,
                         ShapePattern::LinearTimesIrred, ShapePattern::QuadTimesDistinctOdd,
                         ShapePattern::QuartTimesDistinctOdd, ShapePattern::QuadPlusQuartPlusDistinctOdd}) {
    CHECK(parse_pattern(pattern_name(p)) == p);
  }
  CHECK_THROWS_AS(parse_pattern("bogus"), InvalidInput);
}

TEST_CASE("group labels") {
  CHECK(group_label(Target::SymmetricOnTrace, 4) == "S_4");
  CHECK(group_label(Target::FullHyperoctahedral, 4) == "(Z/2)^4 ⋊ S_4");
  CHECK(group_label(Target::KernelHyperoctahedral, 8) == "ker(Σ') ⋊ S_8");
  for (Target t : {Target::SymmetricOnTrace, Target::FullHyperoctahedral, Target::KernelHyperoctahedral}) {
    CHECK(parse_target(target_name(t)) == t);
  }
}

TEST_CASE("smallest witness examples") {
  auto w = find_smallest_witness(kG44, ShapePattern::Irreducible, kBound);
  REQUIRE(w);
  CHECK(w->q == 3);
  w = find_smallest_witness(kG44, ShapePattern::LinearTimesIrred, kBound);
  REQUIRE(w);
  CHECK(w->q == 7);
  CHECK(w->shape.degrees == std::map<int, int>{{1, 1}, {3, 1}});
  w = find_smallest_witness(kF44, ShapePattern::Irreducible, kBound);
  REQUIRE(w);
  CHECK(w->q == 3);
  // a polynomial that factors over Z is never irreducible mod q
  CHECK_FALSE(find_smallest_witness(IntPoly{-1, 0, 0, 0, 1}, ShapePattern::Irreducible, 2000));
  CHECK_THROWS_AS(find_smallest_witness(IntPoly{3}, ShapePattern::Irreducible, 100), InvalidInput);
}

TEST_CASE("minimality: no smaller prime satisfies the slot") {
  const auto slots = find_witnesses_per_slot(kF44, quadruple_patterns(), kBound);
  REQUIRE(slots.size() == 4);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    REQUIRE(slots[i]);
    for (std::uint32_t q : primes_up_to(slots[i]->q - 1)) {
      if (mpz_fdiv_ui(kF44.leading().get_mpz_t(), q) == 0) continue;
      const FactorShape s = factor_shape(kF44, q);
      CHECK_FALSE(match_pattern(s, 8, quadruple_patterns()[i]));
    }
  }
}

TEST_CASE("early-abort search agrees with a full-shape scan") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> dist(-5, 5);
  const std::vector<ShapePattern> all = {
      ShapePattern::Irreducible,          ShapePattern::LinearTimesIrred,
      ShapePattern::TwoDistinctLinearTimesIrred, ShapePattern::QuadTimesDistinctOdd,
      ShapePattern::QuartTimesDistinctOdd, ShapePattern::QuadPlusQuartPlusDistinctOdd};
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 6 + trial % 9;
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (auto& a : c) a = dist(rng);
    c.back() = 1 + trial % 3;
    const IntPoly p(std::move(c));
    const auto found = find_witnesses_per_slot(p, all, 600);
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::optional<std::uint32_t> want;
      for (std::uint32_t q : primes_up_to(600)) {
        if (mpz_fdiv_ui(p.leading().get_mpz_t(), q) == 0) continue;
        if (match_pattern(factor_shape(p, q), n, all[i])) {
          want = q;
          break;
        }
      }
      REQUIRE_MESSAGE(found[i].has_value() == want.has_value(), "trial " << trial << " slot " << i);
      if (want) {
        REQUIRE(found[i]->q == *want);
        REQUIRE(found[i]->shape == factor_shape(p, *want));
      }
    }
  }
}

TEST_CASE("trace certificate examples") {
  auto c = certify_trace_symmetric(kG44, kBound);
  REQUIRE(c);
  CHECK(primes_of(*c) == std::vector<std::uint32_t>{3, 7, 43});
  CHECK(c->group == "S_4");
  CHECK(c->bound == kBound);
  for (const Witness& w : c->witnesses) check_witness_with_oracle(kG44, w);

  // x^4 - 1 factors over Z, so no Irreducible witness exists
  CHECK_FALSE(certify_trace_symmetric(IntPoly{-1, 0, 0, 0, 1}, 5000));
}

TEST_CASE("quadruple certificate examples") {
  auto c = certify_full_quadruple(kF44, kBound);
  REQUIRE(c);
  CHECK(primes_of(*c) == std::vector<std::uint32_t>{3, 31, 97, 647});
  CHECK(c->group == "(Z/2)^4 ⋊ S_4");
  CHECK(c->target == Target::FullHyperoctahedral);

  c = certify_full_quadruple(bundle(4 * 23).f, kBound);
  REQUIRE(c);
  CHECK(primes_of(*c) == std::vector<std::uint32_t>{19, 109, 163, 761});

  CHECK_THROWS_AS(certify_full_quadruple(kG44, kBound), InvalidInput);
}

TEST_CASE("no quadruple for Delta = 76 below 10^4") {
  CHECK_FALSE(certify_full_quadruple(bundle(76).f, 10000));
}

TEST_CASE("2-cycle route") {
  const auto g_cert = certify_trace_symmetric(kG44, kBound);
  REQUIRE(g_cert);
  const auto c = certify_full_2cycle(kF44, *g_cert, kBound);
  REQUIRE(c);
  REQUIRE(c->witnesses.size() == 1);
  CHECK(match_pattern(c->witnesses[0].shape, 8, ShapePattern::QuadTimesDistinctOdd));
  REQUIRE(c->trace);
  CHECK(*c->trace == *g_cert);

  // both routes agree on the group for f44
  const auto quad = certify_full_quadruple(kF44, kBound);
  REQUIRE(quad);
  CHECK(quad->group == c->group);

  // a mismatched or wrong-kind trace certificate is rejected
  CHECK_THROWS_AS(certify_full_2cycle(bundle(92).f, *g_cert, kBound), InvalidInput);
  CHECK_THROWS_AS(certify_full_2cycle(kF44, *quad, kBound), InvalidInput);

  for (auto [delta, q] : std::vector<std::pair<std::int64_t, std::uint32_t>>{{4 * 563, 631}, {-4 * 601, 3}}) {
    const FeketeBundle b = bundle(delta);
    const auto gc = certify_trace_symmetric(b.g, kBound);
    REQUIRE(gc);
    const auto fc = certify_full_2cycle(b.f, *gc, kBound);
    REQUIRE(fc);
    CHECK_MESSAGE(fc->witnesses[0].q == q, "delta=" << delta);
    CHECK(fc->target == Target::FullHyperoctahedral);
  }
}

TEST_CASE("kernel route") {
  const FeketeBundle b76 = bundle(76);
  const auto gc = certify_trace_symmetric(b76.g, kBound);
  REQUIRE(gc);
  CHECK(gc->group == "S_8");
  const auto kc = certify_kernel(b76.f, *gc, kBound);
  REQUIRE(kc);
  REQUIRE(kc->witnesses.size() == 1);
  CHECK(kc->witnesses[0].q == 227);
  CHECK(kc->witnesses[0].shape.degrees == std::map<int, int>{{2, 1}, {4, 1}, {5, 2}});
  REQUIRE(kc->disc);
  CHECK(kc->disc->square);
  CHECK(kc->target == Target::KernelHyperoctahedral);
  CHECK(kc->group == "ker(Σ') ⋊ S_8");

  for (auto [delta, q] : std::vector<std::pair<std::int64_t, std::uint32_t>>{{-15, 5}, {-39, 47}}) {
    const FeketeBundle b = bundle(delta);
    const auto g = certify_trace_symmetric(b.g, kBound);
    REQUIRE(g);
    const auto k = certify_kernel(b.f, *g, kBound);
    REQUIRE(k);
    CHECK_MESSAGE(k->witnesses[0].q == q, "delta=" << delta);
    CHECK(k->target == Target::KernelHyperoctahedral);
  }

  // f44 has a non-square discriminant, so the kernel route concludes the full group
  const auto g44 = certify_trace_symmetric(kG44, kBound);
  REQUIRE(g44);
  const auto k44 = certify_kernel(kF44, *g44, kBound);
  if (k44) {
    CHECK(k44->target == Target::FullHyperoctahedral);
    CHECK_FALSE(k44->disc->square);
  }
}

TEST_CASE("discriminant square test") {
  auto v = disc_is_square(kF44);
  CHECK_FALSE(v.square);
  CHECK(v.s == 77);
  CHECK(v.via == DiscRoute::Both);

  v = disc_is_square(bundle(76).f);
  CHECK(v.square);
  CHECK(v.s == 361);
  REQUIRE(v.s_root);
  CHECK(*v.s_root == 19);

  v = disc_is_square(IntPoly{-2, 0, 1});
  CHECK_FALSE(v.square);
  CHECK(v.via == DiscRoute::FullResultant);
  CHECK(disc_is_square(IntPoly{-1, 0, 1}).square);
  CHECK_THROWS_AS(disc_is_square(IntPoly{1, 2, 1}), InvalidInput);

  v = disc_is_square(kF44, false);
  CHECK(v.via == DiscRoute::SFactor);
  CHECK_FALSE(v.discriminant);
}

TEST_CASE("discriminant routes agree for every family f with p <= 100") {
  int checked = 0;
  for (std::uint32_t p : primes_up_to(100)) {
    std::vector<std::int64_t> deltas;
    if (p % 4 == 3) deltas.push_back(4 * static_cast<std::int64_t>(p));
    if (p % 4 == 1) deltas.push_back(-4 * static_cast<std::int64_t>(p));
    if (p > 3 && p % 4 == 3) deltas.push_back(3 * static_cast<std::int64_t>(p));
    if (p > 3 && p % 4 == 1) deltas.push_back(-3 * static_cast<std::int64_t>(p));
    for (std::int64_t delta : deltas) {
      const FeketeBundle b = bundle(delta);
      if (b.f.degree() < 2 || discriminant(b.g) == 0) continue;
      const DiscVerdict v = disc_is_square(b.f);  // throws on any disagreement
      REQUIRE(v.via == DiscRoute::Both);
      REQUIRE(v.discriminant);
      REQUIRE((*v.discriminant > 0 && integer_sqrt(*v.discriminant).exact) == v.square);
      ++checked;
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("discriminant is a square for -3p with p = 5 (mod 8)") {
  for (std::uint32_t p : primes_up_to(200)) {
    if (p % 8 != 5) continue;
    const DiscVerdict v = disc_is_square(bundle(-3 * static_cast<std::int64_t>(p)).f);
    CHECK_MESSAGE(v.square, "p=" << p);
  }
}

TEST_CASE("s-factor identity on random reciprocal polynomials up to degree 20") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> dist(-4, 4);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 10;
    std::vector<Integer> c(static_cast<std::size_t>(2 * n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(2 * n - i)] = dist(rng);
    c.front() = c.back() = 1;
    const IntPoly f(std::move(c));
    const IntPoly g = trace_polynomial(f);
    if (discriminant(g) == 0 || eval(f, Integer(1)) == 0 || eval(f, Integer(-1)) == 0) continue;
    const DiscVerdict v = disc_is_square(f);
    REQUIRE(v.via == DiscRoute::Both);
    ++checked;
  }
  CHECK(checked > 80);
}

TEST_CASE("revalidation") {
  auto c = certify_full_quadruple(kF44, kBound);
  REQUIRE(c);
  CHECK(revalidate(*c, kF44));
  CHECK_FALSE(revalidate(*c, kF44 + IntPoly{0, 0, 0, 0, 1}));
  GaloisCertificate tampered = *c;
  tampered.witnesses[1].q = 29;
  CHECK_FALSE(revalidate(tampered, kF44));

  const FeketeBundle b76 = bundle(76);
  const auto gc = certify_trace_symmetric(b76.g, kBound);
  REQUIRE(gc);
  const auto kc = certify_kernel(b76.f, *gc, kBound);
  REQUIRE(kc);
  CHECK(revalidate(*kc, b76.f));
  GaloisCertificate wrong_disc = *kc;
  wrong_disc.disc->square = false;
  CHECK_FALSE(revalidate(wrong_disc, b76.f));
}

TEST_CASE("joint search") {
  const auto joint = find_witnesses_joint(kG44, triple_patterns(), kBound);
  REQUIRE(joint);
  std::vector<std::uint32_t> qs;
  for (const Witness& w : joint->witnesses) qs.push_back(w.q);
  std::set<std::uint32_t> distinct(qs.begin(), qs.end());
  CHECK(distinct.size() == qs.size());
  CHECK(joint->max_q == *std::max_element(qs.begin(), qs.end()));
  for (std::size_t i = 0; i < qs.size(); ++i) {
    CHECK(match_pattern(joint->witnesses[i].shape, 4, triple_patterns()[i]));
  }
  // per-slot minima are distinct here, so both modes agree
  CHECK(qs == std::vector<std::uint32_t>{3, 7, 43});
  CHECK_FALSE(find_witnesses_joint(IntPoly{-1, 0, 0, 0, 1}, triple_patterns(), 2000));
}

TEST_CASE("sign embedding brute force") {
  const std::uint64_t sizes[] = {2, 8, 48, 384};
  for (int n = 1; n <= 4; ++n) {
    const auto r = brute_force_sign_embedding(n);
    CHECK(r.elements == sizes[n - 1]);
    CHECK(r.passed());
  }
  CHECK_THROWS_AS(brute_force_sign_embedding(5), InvalidInput);
}
