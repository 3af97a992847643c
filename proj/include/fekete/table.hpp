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

#ifndef FEKETE_TABLE_HPP
#define FEKETE_TABLE_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fekete/fekete.hpp"
#include "fekete/galois.hpp"
#include "fekete/serialize.hpp"

namespace fekete {

inline constexpr std::uint64_t kDefaultBound = 100000;

enum class Mode { Quadruple, Triple, TwoCycle, TwoPlusFourCycle };

/// "quadruple", "triple", "2cycle", "kernel".
std::string_view mode_name(Mode m);
Mode parse_mode(std::string_view name);

/// Slot patterns checked for the mode, in table column order.
std::vector<ShapePattern> mode_patterns(Mode m);
/// Triple mode tests g; every other mode tests f.
bool mode_uses_trace(Mode m);

/// Runs the certification chain of the mode. The 2-cycle and kernel modes
/// first need an S_n certificate for g and return nullopt without one.
std::optional<GaloisCertificate> certify(const FeketeBundle& b, Mode m, std::uint64_t bound);

/// Same as certify, consulting and filling a cache directory when given.
std::optional<GaloisCertificate> certify_cached(const FeketeBundle& b, Mode m, std::uint64_t bound,
                                                const std::optional<std::filesystem::path>& cache_dir);

/// Primes of certificate slots in column order (the trace certificate of
/// the 2-cycle and kernel routes is not listed).
std::vector<std::uint32_t> slot_primes(const GaloisCertificate& c);

/// Delta of the family at p: 4p, -4p, 3p or -3p.
std::int64_t family_delta(Family f, std::int64_t p);
/// p is prime and satisfies the family congruence and the mode restriction
/// (-3p: quadruple and 2-cycle need p = 1 mod 8, kernel needs p = 5 mod 8;
/// kernel mode exists only for -3p).
bool family_admits(Family f, Mode m, std::int64_t p);

struct TableSpec {
  Family family = Family::FourP;
  Mode mode = Mode::Triple;
  std::int64_t p_lo = 2;
  std::int64_t p_hi = 100;
  std::uint64_t bound = kDefaultBound;
  unsigned jobs = 1;
  std::optional<std::filesystem::path> cache_dir;
};

struct TableRow {
  std::int64_t p = 0;
  std::int64_t delta = 0;
  /// nullopt means no certificate below the bound.
  std::optional<GaloisCertificate> cert;
  double ms = 0;
};

/// One row per admitted p whose trace polynomial has degree >= 2, sorted
/// by p. Rows are computed on spec.jobs threads.
std::vector<TableRow> run_table(const TableSpec& spec);

/// "# generated ..." line, then "p,delta,q1,q2,q3,q4,group,ms". Unused slots
/// are empty, a missing certificate is "NONE" in q1, and ms is empty unless
/// timings is set, so the body is byte-identical across runs.
void write_table_csv(std::ostream& out, const TableSpec& spec, const std::vector<TableRow>& rows,
                     bool timings = false);
Json table_to_json(const TableSpec& spec, const std::vector<TableRow>& rows);

/// A published row: p,delta,mode,q1,q2,q3,q4[,bound]. "NONE" in q1 claims
/// that no certificate exists below bound (default 100000).
struct PublishedRow {
  std::size_t line = 0;
  std::int64_t p = 0;
  std::int64_t delta = 0;
  Mode mode = Mode::Triple;
  std::vector<std::uint32_t> primes;
  bool none = false;
  std::uint64_t bound = kDefaultBound;
};

struct ParseError {
  std::size_t line = 0;
  std::string message;
};

struct ParsedTable {
  std::vector<PublishedRow> rows;
  std::vector<ParseError> errors;
};

/// Blank lines and lines starting with '#' are skipped; the first other
/// line must be the header.
ParsedTable parse_published_table(std::istream& in);

struct RowCheck {
  PublishedRow row;
  bool ok = false;
  std::vector<std::string> problems;
  /// Set when minimality was requested: whether the per-slot search
  /// reproduces the printed primes exactly.
  std::optional<bool> reproduced;
  std::vector<std::uint32_t> searched;
};

/// Every printed prime must be prime, usable, squarefree and satisfy its
/// slot pattern on the right polynomial; a NONE row is checked by running
/// the full search to its bound. With check_minimal the per-slot search is
/// also run and compared (reported, not part of ok).
RowCheck verify_row(const PublishedRow& row, bool check_minimal = false);
std::vector<RowCheck> verify_rows(const std::vector<PublishedRow>& rows, bool check_minimal, unsigned jobs);

}  // namespace fekete

#endif  // FEKETE_TABLE_HPP
