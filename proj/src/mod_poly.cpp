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

#include "fekete/mod_poly.hpp"

#include <algorithm>

#include "fekete/ntheory.hpp"

namespace fekete {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Residue = ModPoly::Residue;

Residue mul_mod(Residue a, Residue b, std::uint32_t q) {
  return static_cast<Residue>(static_cast<u64>(a) * b % q);
}

Residue inverse_mod(Residue a, std::uint32_t q) {
  if (a == 0) throw InvalidInput("inverse of zero in F_q");
  // Fermat: a^(q-2).
  u64 result = 1;
  u64 base = a;
  u64 e = q - 2;
  while (e != 0) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

void require_same_modulus(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) {
    throw InvalidInput("modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                       std::to_string(b.modulus()));
  }
}

}  // namespace

ModPoly::ModPoly(std::uint32_t modulus) : q_(modulus) {
  if (modulus < 2) throw InvalidInput("modulus must be a prime");
}

ModPoly::ModPoly(std::uint32_t modulus, std::vector<Residue> coeffs) : q_(modulus), c_(std::move(coeffs)) {
  if (modulus < 2) throw InvalidInput("modulus must be a prime");
  for (auto& x : c_) x %= q_;
  trim();
}

ModPoly ModPoly::from_signed(std::uint32_t modulus, std::initializer_list<long long> coeffs) {
  std::vector<Residue> v;
  const long long q = modulus;
  for (long long c : coeffs) v.push_back(static_cast<Residue>(((c % q) + q) % q));
  return ModPoly(modulus, std::move(v));
}

ModPoly ModPoly::x(std::uint32_t modulus) { return ModPoly(modulus, {0, 1}); }

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly reduce(const IntPoly& p, std::uint32_t q) {
  std::vector<Residue> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    v.push_back(static_cast<Residue>(mpz_fdiv_ui(c.get_mpz_t(), q)));
  }
  return ModPoly(q, std::move(v));
}

ModPoly add(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  const std::uint32_t q = a.modulus();
  std::vector<Residue> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<Residue>((static_cast<u64>(a.coeff(i)) + b.coeff(i)) % q);
  }
  return ModPoly(q, std::move(out));
}

ModPoly sub(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  const std::uint32_t q = a.modulus();
  std::vector<Residue> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<Residue>((static_cast<u64>(a.coeff(i)) + q - b.coeff(i)) % q);
  }
  return ModPoly(q, std::move(out));
}

ModPoly mul(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  const std::uint32_t q = a.modulus();
  if (a.is_zero() || b.is_zero()) return ModPoly(q);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<u128> acc(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    const u64 ai = ac[i];
    for (std::size_t j = 0; j < bc.size(); ++j) acc[i + j] += ai * bc[j];
  }
  std::vector<Residue> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<Residue>(acc[i] % q);
  return ModPoly(q, std::move(out));
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  const std::uint32_t q = a.modulus();
  if (a.degree() < b.degree()) return {ModPoly(q), a};
  std::vector<Residue> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Residue inv = inverse_mod(bc.back(), q);
  std::vector<Residue> quot(r.size() - db, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Residue top = r[i + db];
    if (top == 0) continue;
    const Residue c = mul_mod(top, inv, q);
    quot[i] = c;
    const u64 neg = q - c;
    for (std::size_t j = 0; j < db; ++j) {
      r[i + j] = static_cast<Residue>((r[i + j] + neg * bc[j]) % q);
    }
    r[i + db] = 0;
  }
  r.resize(db);
  return {ModPoly(q, std::move(quot)), ModPoly(q, std::move(r))};
}

ModPoly rem(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

ModPoly monic(const ModPoly& a) {
  if (a.is_zero() || a.leading() == 1) return a;
  const std::uint32_t q = a.modulus();
  const Residue inv = inverse_mod(a.leading(), q);
  std::vector<Residue> out = a.coeffs();
  for (auto& x : out) x = mul_mod(x, inv, q);
  return ModPoly(q, std::move(out));
}

ModPoly derivative(const ModPoly& a) {
  const std::uint32_t q = a.modulus();
  const auto& c = a.coeffs();
  if (c.size() <= 1) return ModPoly(q);
  std::vector<Residue> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    out[i - 1] = mul_mod(c[i], static_cast<Residue>(i % q), q);
  }
  return ModPoly(q, std::move(out));
}

ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m) {
  require_same_modulus(base, m);
  if (e < 0) throw InvalidInput("powmod: negative exponent");
  const std::uint32_t q = m.modulus();
  ModPoly result = rem(ModPoly(q, {1}), m);
  const ModPoly b = rem(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), m);
  }
  return result;
}

ModPoly gcd_mod(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  ModPoly x = a;
  ModPoly y = b;
  while (!y.is_zero()) {
    ModPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

std::string to_string(const ModPoly& p) {
  std::vector<Integer> c;
  for (auto x : p.coeffs()) c.emplace_back(static_cast<unsigned long>(x));
  return to_string(IntPoly(std::move(c)));
}

namespace {

// Rows x^(i q) mod f for i < deg f, so that raising to the q-th power
// modulo f becomes a vector-matrix product.
class FrobeniusMatrix {
 public:
  explicit FrobeniusMatrix(const ModPoly& f) : q_(f.modulus()), n_(static_cast<std::size_t>(f.degree())) {
    const ModPoly xq = powmod(ModPoly::x(q_), Integer(static_cast<unsigned long>(q_)), f);
    rows_.reserve(n_);
    ModPoly row(q_, {1});
    for (std::size_t i = 0; i < n_; ++i) {
      rows_.push_back(row.coeffs());
      if (i + 1 < n_) row = rem(mul(row, xq), f);
    }
  }

  ModPoly apply(const ModPoly& h) const {
    std::vector<u128> acc(n_, 0);
    const auto& hc = h.coeffs();
    for (std::size_t i = 0; i < hc.size(); ++i) {
      if (hc[i] == 0) continue;
      const u64 hi = hc[i];
      const auto& row = rows_[i];
      for (std::size_t j = 0; j < row.size(); ++j) acc[j] += hi * row[j];
    }
    std::vector<Residue> out(n_);
    for (std::size_t j = 0; j < n_; ++j) out[j] = static_cast<Residue>(acc[j] % q_);
    return ModPoly(q_, std::move(out));
  }

 private:
  std::uint32_t q_;
  std::size_t n_;
  std::vector<std::vector<Residue>> rows_;
};

}  // namespace

std::optional<std::vector<DegreePart>> distinct_degree_factorization(const ModPoly& f,
                                                                     const DdfMonitor& keep_going) {
  if (f.degree() < 1) throw InvalidInput("distinct_degree_factorization: degree must be >= 1");
  if (f.leading() != 1) throw InvalidInput("distinct_degree_factorization: input must be monic");
  if (!gcd_mod(f, derivative(f)).is_one()) {
    throw InvalidInput("distinct_degree_factorization: input must be squarefree");
  }
  const std::uint32_t q = f.modulus();
  const Integer qz(static_cast<unsigned long>(q));
  const ModPoly x = ModPoly::x(q);
  std::vector<DegreePart> parts;
  ModPoly rest = f;

  // h = x^(q^d) is kept modulo the full f; every divisor of f sees the same
  // residue. Early steps use plain powering. Once that has cost about as
  // many multiplications as building the Frobenius matrix, switch to it.
  const long power_cost = static_cast<long>(mpz_sizeinbase(qz.get_mpz_t(), 2) + mpz_popcount(qz.get_mpz_t()));
  long spent = 0;
  std::optional<FrobeniusMatrix> frob;
  ModPoly h = rem(x, f);
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    if (frob) {
      h = frob->apply(h);
    } else {
      h = powmod(h, qz, f);
      spent += power_cost;
      if (spent >= f.degree()) frob.emplace(f);
    }
    ModPoly g = gcd_mod(rest, sub(h, x));
    if (g.degree() >= 1) {
      rest = divmod(rest, g).first;
      parts.push_back({d, std::move(g)});
    }
    if (keep_going && !keep_going(d, parts)) return std::nullopt;
  }
  if (rest.degree() >= 1) {
    const int d = static_cast<int>(rest.degree());
    parts.push_back({d, std::move(rest)});
  }
  return parts;
}

std::vector<DegreePart> distinct_degree_factorization(const ModPoly& f) {
  return *distinct_degree_factorization(f, DdfMonitor{});
}

namespace {

ModPoly random_poly(std::uint32_t q, long degree_below, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, q - 1);
  std::vector<Residue> c(static_cast<std::size_t>(degree_below));
  for (auto& x : c) x = dist(rng);
  return ModPoly(q, std::move(c));
}

// A polynomial whose gcd with part splits it with probability >= 1/2.
ModPoly splitting_candidate(const ModPoly& part, int d, std::mt19937_64& rng) {
  const std::uint32_t q = part.modulus();
  ModPoly a = random_poly(q, part.degree(), rng);
  if (q == 2) {
    // Absolute trace a + a^2 + ... + a^(2^(d-1)).
    ModPoly t = a;
    ModPoly power = a;
    for (int i = 1; i < d; ++i) {
      power = rem(mul(power, power), part);
      t = add(t, power);
    }
    return t;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), q, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  return sub(powmod(a, e, part), ModPoly(q, {1}));
}

void split_into(const ModPoly& part, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (part.degree() <= d) {
    out.push_back(part);
    return;
  }
  for (;;) {
    const ModPoly g = gcd_mod(part, splitting_candidate(part, d, rng));
    if (g.degree() > 0 && g.degree() < part.degree()) {
      split_into(g, d, rng, out);
      split_into(divmod(part, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ModPoly> equal_degree_factorization(const ModPoly& part, int d, std::mt19937_64& rng) {
  if (d < 1 || part.degree() < 1 || part.degree() % d != 0) {
    throw InvalidInput("equal_degree_factorization: degree must be a positive multiple of d");
  }
  std::vector<ModPoly> out;
  split_into(monic(part), d, rng, out);
  std::sort(out.begin(), out.end(),
            [](const ModPoly& a, const ModPoly& b) { return a.coeffs() < b.coeffs(); });
  return out;
}

std::vector<ModPoly> equal_degree_factorization(const ModPoly& part, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return equal_degree_factorization(part, d, rng);
}

int FactorShape::total_degree() const {
  int total = 0;
  for (auto [d, n] : degrees) total += d * n;
  return total;
}

int FactorShape::count(int degree) const {
  auto it = degrees.find(degree);
  return it == degrees.end() ? 0 : it->second;
}

FactorShape factor_shape(const ModPoly& f) {
  if (f.is_zero()) throw InvalidInput("factor_shape: zero polynomial");
  FactorShape shape;
  shape.q = f.modulus();
  const ModPoly m = monic(f);
  if (m.degree() == 0) {
    shape.squarefree = true;
    return shape;
  }
  shape.squarefree = gcd_mod(m, derivative(m)).is_one();
  if (!shape.squarefree) return shape;
  for (const auto& part : distinct_degree_factorization(m)) {
    shape.degrees[part.degree] += static_cast<int>(part.product.degree() / part.degree);
  }
  return shape;
}

FactorShape factor_shape(const IntPoly& p, std::uint32_t q) {
  if (!is_prime(q)) throw InvalidInput(std::to_string(q) + " is not prime");
  if (p.is_zero()) throw InvalidInput("factor_shape: zero polynomial");
  if (mpz_fdiv_ui(p.leading().get_mpz_t(), q) == 0) {
    throw UnusablePrime("leading coefficient vanishes modulo " + std::to_string(q));
  }
  return factor_shape(reduce(p, q));
}

std::string to_string(const FactorShape& s) {
  if (!s.squarefree) return "not squarefree";
  std::string out = "{";
  bool first = true;
  for (auto [d, n] : s.degrees) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(d) + ":" + std::to_string(n);
  }
  return out + "}";
}

}  // namespace fekete
