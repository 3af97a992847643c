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

#include "fekete/table.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <ctime>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>

#include "fekete/cache.hpp"

namespace fekete {

namespace {

// Runs task(i) for i in [0, n) on up to jobs threads.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F task) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

template <class T>
std::optional<T> parse_number(std::string_view s) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::size_t slot_count(Mode m) { return mode_patterns(m).size(); }

std::string join(const std::vector<std::uint32_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::Quadruple: return "quadruple";
    case Mode::Triple: return "triple";
    case Mode::TwoCycle: return "2cycle";
    case Mode::TwoPlusFourCycle: return "kernel";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  if (name == "quadruple") return Mode::Quadruple;
  if (name == "triple") return Mode::Triple;
  if (name == "2cycle" || name == "two-cycle") return Mode::TwoCycle;
  if (name == "kernel" || name == "2+4cycle") return Mode::TwoPlusFourCycle;
  throw InvalidInput("unknown mode: " + std::string(name) + " (expected quadruple, triple, 2cycle or kernel)");
}

std::vector<ShapePattern> mode_patterns(Mode m) {
  switch (m) {
    case Mode::Quadruple: {
      auto s = quadruple_patterns();
      return {s.begin(), s.end()};
    }
    case Mode::Triple: {
      auto s = triple_patterns();
      return {s.begin(), s.end()};
    }
    case Mode::TwoCycle: return {ShapePattern::QuadTimesDistinctOdd};
    case Mode::TwoPlusFourCycle: return {ShapePattern::QuadPlusQuartPlusDistinctOdd};
  }
  return {};
}

bool mode_uses_trace(Mode m) { return m == Mode::Triple; }

std::optional<GaloisCertificate> certify(const FeketeBundle& b, Mode m, std::uint64_t bound) {
  switch (m) {
    case Mode::Quadruple: return certify_full_quadruple(b.f, bound);
    case Mode::Triple: return certify_trace_symmetric(b.g, bound);
    case Mode::TwoCycle:
    case Mode::TwoPlusFourCycle: {
      auto g_cert = certify_trace_symmetric(b.g, bound);
      if (!g_cert) return std::nullopt;
      return m == Mode::TwoCycle ? certify_full_2cycle(b.f, *g_cert, bound) : certify_kernel(b.f, *g_cert, bound);
    }
  }
  return std::nullopt;
}

std::optional<GaloisCertificate> certify_cached(const FeketeBundle& b, Mode m, std::uint64_t bound,
                                                const std::optional<std::filesystem::path>& cache_dir) {
  if (!cache_dir) return certify(b, m, bound);
  const CacheKey key{b.disc.delta(), std::string(mode_name(m)), bound};
  if (auto hit = cache_load(*cache_dir, key)) {
    const IntPoly& poly = mode_uses_trace(m) ? b.g : b.f;
    if (revalidate(*hit, poly)) return hit;
  }
  auto cert = certify(b, m, bound);
  if (cert) cache_store(*cache_dir, key, *cert);
  return cert;
}

std::vector<std::uint32_t> slot_primes(const GaloisCertificate& c) {
  std::vector<std::uint32_t> out;
  for (const Witness& w : c.witnesses) out.push_back(w.q);
  return out;
}

std::int64_t family_delta(Family f, std::int64_t p) {
  switch (f) {
    case Family::FourP: return 4 * p;
    case Family::MinusFourP: return -4 * p;
    case Family::ThreeP: return 3 * p;
    case Family::MinusThreeP: return -3 * p;
    case Family::OddPrime:
    case Family::Generic: break;
  }
  throw InvalidInput("tables exist only for the 4p, -4p, 3p and -3p families");
}

bool family_admits(Family f, Mode m, std::int64_t p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) return false;
  if (m == Mode::TwoPlusFourCycle && f != Family::MinusThreeP) return false;
  switch (f) {
    case Family::FourP: return p % 4 == 3;
    case Family::MinusFourP: return p % 4 == 1;
    case Family::ThreeP: return p > 3 && p % 4 == 3;
    case Family::MinusThreeP:
      if (p <= 3 || p % 4 != 1) return false;
      if (m == Mode::Quadruple || m == Mode::TwoCycle) return p % 8 == 1;
      if (m == Mode::TwoPlusFourCycle) return p % 8 == 5;
      return true;
    case Family::OddPrime:
    case Family::Generic: return false;
  }
  return false;
}

std::vector<TableRow> run_table(const TableSpec& spec) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = std::max<std::int64_t>(spec.p_lo, 2); p <= spec.p_hi; ++p) {
    if (family_admits(spec.family, spec.mode, p)) ps.push_back(p);
  }
  std::vector<std::optional<TableRow>> slots(ps.size());
  parallel_for(ps.size(), spec.jobs, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    TableRow row;
    row.p = ps[i];
    row.delta = family_delta(spec.family, row.p);
    const FeketeBundle b = fekete_compact(QuadDisc::from_discriminant(row.delta));
    if (b.g.degree() < 2) return;
    row.cert = certify_cached(b, spec.mode, spec.bound, spec.cache_dir);
    row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    slots[i] = std::move(row);
  });
  std::vector<TableRow> rows;
  for (auto& r : slots) {
    if (r) rows.push_back(std::move(*r));
  }
  return rows;
}

void write_table_csv(std::ostream& out, const TableSpec& spec, const std::vector<TableRow>& rows, bool timings) {
  const std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  out << "# generated " << stamp << " family=" << family_name(spec.family) << " mode=" << mode_name(spec.mode)
      << " bound=" << spec.bound << '\n';
  out << "p,delta,q1,q2,q3,q4,group,ms\n";
  for (const TableRow& r : rows) {
    out << r.p << ',' << r.delta;
    std::vector<std::string> q(4);
    if (r.cert) {
      const auto primes = slot_primes(*r.cert);
      for (std::size_t i = 0; i < primes.size() && i < 4; ++i) q[i] = std::to_string(primes[i]);
    } else {
      q[0] = "NONE";
    }
    for (const auto& s : q) out << ',' << s;
    out << ',' << (r.cert ? r.cert->group : "") << ',';
    if (timings) out << static_cast<long long>(r.ms + 0.5);
    out << '\n';
  }
}

Json table_to_json(const TableSpec& spec, const std::vector<TableRow>& rows) {
  Json j;
  j["family"] = std::string(family_name(spec.family));
  j["mode"] = std::string(mode_name(spec.mode));
  j["bound"] = spec.bound;
  Json arr = Json::array();
  for (const TableRow& r : rows) {
    Json row{{"p", r.p}, {"delta", r.delta}};
    if (r.cert) {
      row["result"] = slot_primes(*r.cert);
      row["certificate"] = certificate_to_json(*r.cert);
    } else {
      row["result"] = "NONE";
    }
    arr.push_back(row);
  }
  j["rows"] = arr;
  return j;
}

ParsedTable parse_published_table(std::istream& in) {
  ParsedTable t;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    auto fields = split_csv(view);
    if (!header_seen) {
      header_seen = true;
      if (fields.size() < 7 || fields[0] != "p" || fields[1] != "delta" || fields[2] != "mode") {
        t.errors.push_back({lineno, "expected header p,delta,mode,q1,q2,q3,q4[,bound]"});
        return t;
      }
      continue;
    }
    auto fail = [&](std::string msg) { t.errors.push_back({lineno, std::move(msg)}); };
    if (fields.size() != 7 && fields.size() != 8) {
      fail("expected 7 or 8 fields, got " + std::to_string(fields.size()));
      continue;
    }
    PublishedRow row;
    row.line = lineno;
    auto p = parse_number<std::int64_t>(fields[0]);
    auto delta = parse_number<std::int64_t>(fields[1]);
    if (!p || !delta) {
      fail("p and delta must be integers");
      continue;
    }
    row.p = *p;
    row.delta = *delta;
    try {
      row.mode = parse_mode(fields[2]);
    } catch (const InvalidInput& e) {
      fail(e.what());
      continue;
    }
    if (fields.size() == 8 && !fields[7].empty()) {
      auto b = parse_number<std::uint64_t>(fields[7]);
      if (!b) {
        fail("bound must be a nonnegative integer");
        continue;
      }
      row.bound = *b;
    }
    const std::size_t slots = slot_count(row.mode);
    bool bad = false;
    if (fields[3] == "NONE") {
      row.none = true;
      for (std::size_t i = 4; i < 7; ++i) bad |= !fields[i].empty();
      if (bad) fail("NONE row must leave q2..q4 empty");
    } else {
      for (std::size_t i = 0; i < 4 && !bad; ++i) {
        const std::string_view f = fields[3 + i];
        if (i >= slots) {
          if (!f.empty()) {
            fail("mode " + std::string(mode_name(row.mode)) + " uses " + std::to_string(slots) + " slot(s)");
            bad = true;
          }
          continue;
        }
        auto q = parse_number<std::uint32_t>(f);
        if (!q) {
          fail("q" + std::to_string(i + 1) + " must be a positive integer");
          bad = true;
          continue;
        }
        row.primes.push_back(*q);
      }
    }
    if (!bad) t.rows.push_back(std::move(row));
  }
  if (!header_seen) t.errors.push_back({lineno, "missing header"});
  return t;
}

RowCheck verify_row(const PublishedRow& row, bool check_minimal) {
  RowCheck c;
  c.row = row;
  std::optional<FeketeBundle> b;
  try {
    const QuadDisc d = QuadDisc::from_discriminant(row.delta);
    if (d.family() == Family::Generic || d.family() == Family::OddPrime || d.prime() != row.p) {
      c.problems.push_back("delta " + std::to_string(row.delta) + " is not a family discriminant at p=" +
                           std::to_string(row.p));
      return c;
    }
    b = fekete_compact(d);
  } catch (const InvalidInput& e) {
    c.problems.push_back(e.what());
    return c;
  }
  const IntPoly& poly = mode_uses_trace(row.mode) ? b->g : b->f;
  const auto patterns = mode_patterns(row.mode);
  const int n = static_cast<int>(poly.degree());

  if (row.none) {
    if (auto cert = certify(*b, row.mode, row.bound)) {
      c.problems.push_back("NONE claimed, but search finds " + join(slot_primes(*cert)) + " below " +
                           std::to_string(row.bound));
    }
  } else {
    for (std::size_t i = 0; i < row.primes.size(); ++i) {
      const std::uint32_t q = row.primes[i];
      const std::string slot = "q" + std::to_string(i + 1) + "=" + std::to_string(q);
      if (!is_prime(q)) {
        c.problems.push_back(slot + " is not prime");
        continue;
      }
      if (mpz_fdiv_ui(poly.leading().get_mpz_t(), q) == 0) {
        c.problems.push_back(slot + " divides the leading coefficient");
        continue;
      }
      const FactorShape s = factor_shape(poly, q);
      if (!match_pattern(s, n, patterns[i])) {
        c.problems.push_back(slot + " has shape " + to_string(s) + ", not " + std::string(pattern_name(patterns[i])));
      }
    }
  }
  c.ok = c.problems.empty();

  if (check_minimal && !row.none) {
    auto found = find_witnesses_per_slot(poly, patterns, row.bound);
    bool all = true;
    for (auto& w : found) {
      if (w) {
        c.searched.push_back(w->q);
      } else {
        all = false;
      }
    }
    c.reproduced = all && c.searched == row.primes;
  }
  return c;
}

std::vector<RowCheck> verify_rows(const std::vector<PublishedRow>& rows, bool check_minimal, unsigned jobs) {
  std::vector<RowCheck> out(rows.size());
  parallel_for(rows.size(), jobs, [&](std::size_t i) { out[i] = verify_row(rows[i], check_minimal); });
  return out;
}

}  // namespace fekete
