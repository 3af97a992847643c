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

#include "fekete/ntheory.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace fekete {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 magnitude(std::int64_t v) {
  return v < 0 ? u64(0) - static_cast<u64>(v) : static_cast<u64>(v);
}

// Jacobi symbol (a/n) for odd n >= 1 and 0 <= a < n.
int jacobi(u64 a, u64 n) {
  int result = 1;
  while (a != 0) {
    const int twos = std::countr_zero(a);
    a >>= twos;
    if ((twos & 1) && (n % 8 == 3 || n % 8 == 5)) result = -result;
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? result : 0;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0 && a < 0) result = -1;
  u64 m = magnitude(n);
  const int twos = std::countr_zero(m);
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    m >>= twos;
    if (twos & 1) {
      const std::int64_t r = ((a % 8) + 8) % 8;
      if (r == 3 || r == 5) result = -result;
    }
  }
  // m is odd and positive now.
  const std::int64_t sm = static_cast<std::int64_t>(m);
  const u64 reduced = m == 1 ? 0 : static_cast<u64>(((a % sm) + sm) % sm);
  return result * jacobi(reduced, m);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  const int s = std::countr_zero(d);
  d >>= s;
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  u64 c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
  std::vector<std::uint32_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (u64 i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<u64, int>> out;
  if (n == 0) throw InvalidInput("factorize: n must be positive");
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) return 0;
  u64 phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

int moebius(std::uint64_t n) {
  if (n == 0) return 0;
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  return moebius(magnitude(n)) != 0;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<u64> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t current = out.size();
    u64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < current; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntegerSqrt integer_sqrt(const Integer& n) {
  if (n < 0) throw InvalidInput("integer_sqrt: negative argument");
  IntegerSqrt out;
  Integer rem;
  mpz_sqrtrem(out.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  out.exact = rem == 0;
  return out;
}

std::int64_t class_number_imaginary(std::int64_t D) {
  if (D <= 0) throw InvalidInput("class_number_imaginary: D must be positive");
  const std::int64_t r = ((-D) % 4 + 4) % 4;
  if (r != 0 && r != 1) {
    throw InvalidInput("class_number_imaginary: -D must be 0 or 1 mod 4, got D=" + std::to_string(D));
  }
  std::int64_t count = 0;
  // 3b^2 <= D for a reduced form since |b| <= a <= c.
  for (std::int64_t b = D % 2; 3 * b * b <= D; b += 2) {
    const std::int64_t ac = (b * b + D) / 4;
    for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= ac; ++a) {
      if (ac % a != 0) continue;
      const std::int64_t c = ac / a;
      if (b == 0 || b == a || a == c) {
        count += 1;
      } else {
        count += 2;
      }
    }
  }
  return count;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::FourP: return "FourP";
    case Family::MinusFourP: return "MinusFourP";
    case Family::ThreeP: return "ThreeP";
    case Family::MinusThreeP: return "MinusThreeP";
    case Family::OddPrime: return "OddPrime";
    case Family::Generic: return "Generic";
  }
  return "Generic";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::FourP, Family::MinusFourP, Family::ThreeP, Family::MinusThreeP,
                   Family::OddPrime, Family::Generic}) {
    if (family_name(f) == name) return f;
  }
  if (name == "4p") return Family::FourP;
  if (name == "-4p") return Family::MinusFourP;
  if (name == "3p") return Family::ThreeP;
  if (name == "-3p") return Family::MinusThreeP;
  throw InvalidInput("unknown family '" + std::string(name) + "'");
}

bool is_fundamental_discriminant(std::int64_t delta) {
  if (delta == 0 || delta == 1) return false;
  const std::int64_t r = ((delta % 4) + 4) % 4;
  if (r == 1) return is_squarefree(delta);
  if (r != 0) return false;
  const std::int64_t d = delta / 4;
  const std::int64_t rd = ((d % 4) + 4) % 4;
  return (rd == 2 || rd == 3) && is_squarefree(d);
}

QuadDisc::QuadDisc(std::int64_t delta) : delta_(delta), conductor_(delta < 0 ? -delta : delta) {
  auto prime_with = [](std::int64_t p, std::int64_t mod, std::int64_t residue) {
    return p > 0 && p % mod == residue && is_prime(static_cast<u64>(p));
  };
  if (delta % 4 == 0 && prime_with(delta / 4, 4, 3)) {
    family_ = Family::FourP;
    prime_ = delta / 4;
  } else if (delta % 4 == 0 && prime_with(-delta / 4, 4, 1)) {
    family_ = Family::MinusFourP;
    prime_ = -delta / 4;
  } else if (delta % 3 == 0 && delta / 3 > 3 && prime_with(delta / 3, 4, 3)) {
    family_ = Family::ThreeP;
    prime_ = delta / 3;
  } else if (delta % 3 == 0 && -delta / 3 > 3 && prime_with(-delta / 3, 4, 1)) {
    family_ = Family::MinusThreeP;
    prime_ = -delta / 3;
  } else if (conductor_ % 2 == 1 && is_prime(static_cast<u64>(conductor_))) {
    family_ = Family::OddPrime;
    prime_ = conductor_;
  }
}

QuadDisc QuadDisc::from_discriminant(std::int64_t delta) {
  if (!is_fundamental_discriminant(delta)) {
    throw InvalidInput(std::to_string(delta) + " is not a fundamental discriminant");
  }
  return QuadDisc(delta);
}

QuadDisc QuadDisc::from_squarefree(std::int64_t d) {
  if (d == 0 || d == 1) throw InvalidInput("d must not be 0 or 1");
  if (!is_squarefree(d)) throw InvalidInput(std::to_string(d) + " is not squarefree");
  const std::int64_t r = ((d % 4) + 4) % 4;
  return QuadDisc(r == 1 ? d : 4 * d);
}

QuadDisc fundamental_discriminant(std::int64_t d) { return QuadDisc::from_squarefree(d); }

int chi(const QuadDisc& d, std::int64_t a) { return kronecker(d.delta(), a); }

Integer weighted_char_sum(const QuadDisc& d, int k, std::int64_t lo, std::int64_t hi) {
  if (k < 0 || k > 2) throw InvalidInput("weighted_char_sum: exponent must be 0, 1 or 2");
  if (lo < 1 || hi > d.conductor() - 1) {
    throw InvalidInput("weighted_char_sum: range must lie in [1, D-1]");
  }
  Integer sum = 0;
  for (std::int64_t a = lo; a <= hi; ++a) {
    const int c = chi(d, a);
    if (c == 0) continue;
    Integer term = 1;
    for (int i = 0; i < k; ++i) term *= make_integer(a);
    if (c > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Rational b1_chi(const QuadDisc& d) {
  Rational r(weighted_char_sum(d, 1, 1, d.conductor() - 1), make_integer(d.conductor()));
  r.canonicalize();
  return r;
}

}  // namespace fekete
