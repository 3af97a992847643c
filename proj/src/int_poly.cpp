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

#include "fekete/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace fekete {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t n) {
  std::vector<Integer> v(n + 1);
  v[0] = -1;
  v[n] += 1;
  return IntPoly(std::move(v));
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(IntPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

IntPoly add(const IntPoly& p, const IntPoly& q) { return p + q; }
IntPoly sub(const IntPoly& p, const IntPoly& q) { return p - q; }
IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }
IntPoly scale(const IntPoly& p, const Integer& c) { return p * c; }

std::optional<IntPoly> exact_div(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw InvalidInput("exact_div: division by the zero polynomial");
  if (p.is_zero()) return IntPoly{};
  if (p.degree() < q.degree()) return std::nullopt;
  const auto& qc = q.coeffs();
  const std::size_t dq = qc.size() - 1;
  const Integer& lc = qc.back();
  const bool unit_lc = lc == 1;
  std::vector<Integer> rem = p.coeffs();
  std::vector<Integer> quot(rem.size() - dq);
  for (std::size_t i = quot.size(); i-- > 0;) {
    Integer& top = rem[i + dq];
    if (top == 0) continue;
    if (unit_lc) {
      quot[i] = top;
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
      mpz_divexact(quot[i].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    }
    for (std::size_t j = 0; j < dq; ++j) {
      mpz_submul(rem[i + j].get_mpz_t(), quot[i].get_mpz_t(), qc[j].get_mpz_t());
    }
    top = 0;
  }
  for (std::size_t j = 0; j < dq; ++j) {
    if (rem[j] != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

Integer eval(const IntPoly& p, const Integer& x0) {
  Integer acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x0;
    acc += c[i];
  }
  return acc;
}

IntPoly derivative(const IntPoly& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Integer> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(out));
}

IntPoly substitute_power(const IntPoly& p, std::size_t k) {
  if (k == 0) throw InvalidInput("substitute_power: k must be positive");
  if (p.is_zero()) return {};
  std::vector<Integer> out((p.coeffs().size() - 1) * k + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i * k] = p.coeffs()[i];
  return IntPoly(std::move(out));
}

IntPoly substitute_negate(const IntPoly& p) {
  std::vector<Integer> out = p.coeffs();
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return IntPoly(std::move(out));
}

std::size_t strip_x_power(IntPoly& p) {
  const auto& c = p.coeffs();
  std::size_t v = 0;
  while (v < c.size() && c[v] == 0) ++v;
  if (v == 0 || p.is_zero()) return 0;
  p = IntPoly(std::vector<Integer>(c.begin() + static_cast<long>(v), c.end()));
  return v;
}

bool is_reciprocal(const IntPoly& p) {
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<long>(c.size() / 2), c.rbegin());
}

IntPoly trace_polynomial(const IntPoly& f) {
  if (f.is_zero()) throw InvalidInput("trace_polynomial: zero polynomial");
  if (f.degree() % 2 != 0) throw InvalidInput("trace_polynomial: degree must be even");
  if (!is_reciprocal(f)) throw InvalidInput("trace_polynomial: polynomial is not reciprocal");
  const std::size_t n = static_cast<std::size_t>(f.degree() / 2);
  // x^k + x^-k = v_k(t), with v_0 = 2, v_1 = t, v_k = t v_{k-1} - v_{k-2}.
  const IntPoly t{0, 1};
  IntPoly g = IntPoly::constant(f.coeff(n));
  IntPoly prev{2};
  IntPoly cur = t;
  for (std::size_t k = 1; k <= n; ++k) {
    g += cur * f.coeff(n + k);
    IntPoly next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return g;
}

IntPoly reciprocal_from_trace(const IntPoly& g) {
  if (g.is_zero()) return {};
  const std::size_t n = static_cast<std::size_t>(g.degree());
  // sum_k g_k (x^2 + 1)^k x^(n-k)
  const IntPoly x2p1{1, 0, 1};
  IntPoly power{1};
  IntPoly f;
  for (std::size_t k = 0; k <= n; ++k) {
    if (g.coeff(k) != 0) f += IntPoly::monomial(g.coeff(k), n - k) * power;
    power *= x2p1;
  }
  return f;
}

namespace {

Integer content(const IntPoly& p) {
  Integer c = 0;
  for (const auto& x : p.coeffs()) {
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    if (c == 1) break;
  }
  return c;
}

IntPoly divide_coefficients(const IntPoly& p, const Integer& d) {
  std::vector<Integer> out = p.coeffs();
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(out));
}

Integer power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// lc(b)^(deg a - deg b + 1) a mod b, deg a >= deg b >= 0.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Integer& lb = bc.back();
  long e = a.degree() - b.degree() + 1;
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    const Integer lr = r.back();
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(r[shift + j].get_mpz_t(), lr.get_mpz_t(), bc[j].get_mpz_t());
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    --e;
  }
  IntPoly out(std::move(r));
  if (e > 0) out *= power(lb, static_cast<unsigned long>(e));
  return out;
}

}  // namespace

Integer resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  IntPoly a = p;
  IntPoly b = q;
  const Integer ca = content(a);
  const Integer cb = content(b);
  a = divide_coefficients(a, ca);
  b = divide_coefficients(b, cb);
  Integer t = power(ca, static_cast<unsigned long>(b.degree())) *
              power(cb, static_cast<unsigned long>(a.degree()));
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
  }
  Integer g = 1;
  Integer h = 1;
  while (b.degree() > 0) {
    const long delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = std::move(b);
    b = divide_coefficients(r, g * power(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    if (delta == 0) continue;
    Integer num = power(g, static_cast<unsigned long>(delta));
    Integer den = power(h, static_cast<unsigned long>(delta - 1));
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  // b is a nonzero constant here.
  const long da = a.degree();
  if (da >= 1) {
    Integer num = power(b.leading(), static_cast<unsigned long>(da));
    Integer den = power(h, static_cast<unsigned long>(da - 1));
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return s * t * h;
}

Integer discriminant(const IntPoly& p) {
  if (p.degree() < 1) throw InvalidInput("discriminant: degree must be at least 1");
  const long n = p.degree();
  Integer r = resultant(p, derivative(p));
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

Integer disc_sign_factor(const IntPoly& f) {
  if (f.is_zero() || f.degree() % 2 != 0 || !is_reciprocal(f)) {
    throw InvalidInput("disc_sign_factor: expected a reciprocal polynomial of even degree");
  }
  Integer s = eval(f, 1) * eval(f, -1);
  if ((f.degree() / 2) % 2 == 1) s = -s;
  return s;
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Integer mag = abs(c[i]);
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly parse_poly(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw InvalidInput("parse_poly: empty input");
  std::map<std::size_t, Integer> terms;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InvalidInput("parse_poly: " + why + " at offset " + std::to_string(pos) + " in '" +
                       std::string(text) + "'");
  };
  auto digits = [&]() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };
  bool first = true;
  while (pos < s.size()) {
    int term_sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      term_sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Integer coef = 1;
    const std::string num = digits();
    if (!num.empty()) {
      coef = Integer(num);
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    std::size_t exponent = 0;
    if (pos < s.size() && (s[pos] == 'x' || s[pos] == 't')) {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::string e = digits();
        if (e.empty()) fail("missing exponent");
        exponent = std::stoul(e);
      }
    } else if (num.empty()) {
      fail("expected a coefficient or variable");
    }
    terms[exponent] += term_sign * coef;
  }
  std::vector<Integer> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1);
  for (auto& [e, c] : terms) coeffs[e] = c;
  return IntPoly(std::move(coeffs));
}

}  // namespace fekete
