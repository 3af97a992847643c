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

#include "fekete/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "fekete/cache.hpp"
#include "fekete/table.hpp"

namespace fekete {

namespace {

struct Options {
  std::int64_t delta = 0;
  std::optional<std::uint64_t> cyclo_bound;
  std::uint64_t bound = kDefaultBound;
  unsigned jobs = 1;
  std::string out_path;
  std::string cache_dir;
  std::string format = "json";
  std::string mode = "triple";
  std::string family = "4p";
  std::int64_t p_from = 2;
  std::int64_t p_to = 100;
  bool timings = false;
  bool check_minimal = false;
  std::string poly_text;
  std::string which = "f";
  std::uint32_t q = 0;
  bool show_factors = false;
  std::string table_file;
};

// Output sink: --out file when given, otherwise the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw InvalidInput("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

FeketeBundle bundle_for(const Options& o) {
  return fekete_compact(QuadDisc::from_discriminant(o.delta), o.cyclo_bound);
}

std::optional<std::filesystem::path> cache_dir(const Options& o) {
  if (o.cache_dir.empty()) return std::nullopt;
  return std::filesystem::path(o.cache_dir);
}

void check_format(const Options& o) {
  if (o.format != "json" && o.format != "csv") throw InvalidInput("--format must be json or csv");
}

int cmd_construct(const Options& o, std::ostream& out) {
  Sink sink(o.out_path, out);
  sink.get() << bundle_to_json(bundle_for(o)).dump(2) << '\n';
  return kExitOk;
}

int cmd_poly(const Options& o, std::ostream& out, bool trace) {
  const FeketeBundle b = bundle_for(o);
  const IntPoly& p = trace ? b.g : b.f;
  Sink sink(o.out_path, out);
  if (o.format == "json") {
    Json j{{"delta", b.disc.delta()},
           {"family", std::string(family_name(b.disc.family()))},
           {trace ? "g" : "f", poly_to_json(p)},
           {"degree", p.degree()},
           {"text", to_string(p)},
           {"conjectural", b.conjectural}};
    if (!trace) j["sign"] = b.sign;
    sink.get() << j.dump(2) << '\n';
  } else {
    sink.get() << to_string(p) << '\n';
  }
  return kExitOk;
}

int cmd_mults(const Options& o, std::ostream& out) {
  const QuadDisc d = QuadDisc::from_discriminant(o.delta);
  const IntPoly F = fekete_raw(d);
  const std::uint64_t bound = o.cyclo_bound.value_or(3 * static_cast<std::uint64_t>(d.conductor()));
  const MultiplicityReport found = strip_cyclotomic(F, bound);
  Json predicted = Json::array();
  bool agree = true;
  for (auto [n, r] : predicted_multiplicities(d)) {
    const int actual = found.multiplicity_of(n);
    agree &= actual == r;
    predicted.push_back({{"n", n}, {"predicted", r}, {"found", actual}});
  }
  Json j{{"delta", d.delta()},
         {"family", std::string(family_name(d.family()))},
         {"bound", bound},
         {"report", report_to_json(found)},
         {"predicted", predicted},
         {"agree", agree}};
  Sink sink(o.out_path, out);
  sink.get() << j.dump(2) << '\n';
  return agree ? kExitOk : kExitVerificationFailure;
}

int cmd_factor_mod(const Options& o, std::ostream& out) {
  IntPoly p;
  if (!o.poly_text.empty()) {
    p = parse_poly(o.poly_text);
  } else {
    const FeketeBundle b = bundle_for(o);
    if (o.which == "f") {
      p = b.f;
    } else if (o.which == "g") {
      p = b.g;
    } else if (o.which == "F") {
      p = b.F;
    } else {
      throw InvalidInput("--which must be f, g or F");
    }
  }
  if (!is_prime(o.q)) throw InvalidInput("q = " + std::to_string(o.q) + " is not prime");
  const FactorShape shape = factor_shape(p, o.q);
  Json j{{"q", o.q}, {"poly", to_string(p)}, {"shape", shape_to_json(shape)}, {"text", to_string(shape)}};
  if (shape.squarefree && o.show_factors) {
    Json factors = Json::array();
    for (const DegreePart& part : distinct_degree_factorization(monic(reduce(p, o.q)))) {
      for (const ModPoly& f : equal_degree_factorization(part.product, part.degree)) {
        factors.push_back(to_string(f));
      }
    }
    j["factors"] = factors;
  }
  Sink sink(o.out_path, out);
  sink.get() << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  const FeketeBundle b = bundle_for(o);
  const Mode m = parse_mode(o.mode);
  if (b.g.degree() < 1) throw InvalidInput("trace polynomial is constant; nothing to certify");
  auto cert = certify_cached(b, m, o.bound, cache_dir(o));
  if (!cert) {
    err << "no " << mode_name(m) << " certificate for Delta=" << b.disc.delta() << " below " << o.bound << '\n';
    Sink sink(o.out_path, out);
    sink.get() << Json{{"delta", b.disc.delta()}, {"mode", std::string(mode_name(m))}, {"bound", o.bound},
                       {"certificate", nullptr}}
                      .dump(2)
               << '\n';
    return kExitNotFound;
  }
  Json j = certificate_to_json(*cert);
  j["delta"] = b.disc.delta();
  j["mode"] = std::string(mode_name(m));
  Sink sink(o.out_path, out);
  sink.get() << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  check_format(o);
  TableSpec spec;
  spec.family = parse_family(o.family);
  spec.mode = parse_mode(o.mode);
  spec.p_lo = o.p_from;
  spec.p_hi = o.p_to;
  spec.bound = o.bound;
  spec.jobs = std::max(1u, o.jobs);
  spec.cache_dir = cache_dir(o);
  family_delta(spec.family, 3);  // rejects non-table families
  const auto rows = run_table(spec);
  Sink sink(o.out_path, out);
  if (o.format == "csv") {
    write_table_csv(sink.get(), spec, rows, o.timings);
  } else {
    sink.get() << table_to_json(spec, rows).dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_verify_table(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.table_file);
  if (!in) throw InvalidInput("cannot read " + o.table_file);
  const ParsedTable parsed = parse_published_table(in);
  for (const ParseError& e : parsed.errors) err << o.table_file << ":" << e.line << ": " << e.message << '\n';
  if (!parsed.errors.empty()) return kExitInvalidInput;

  const auto checks = verify_rows(parsed.rows, o.check_minimal, std::max(1u, o.jobs));
  Sink sink(o.out_path, out);
  std::size_t failed = 0;
  for (const RowCheck& c : checks) {
    std::ostream& s = sink.get();
    s << (c.ok ? "ok   " : "FAIL ") << "line " << c.row.line << " p=" << c.row.p << " delta=" << c.row.delta
      << " mode=" << mode_name(c.row.mode);
    if (c.row.none) {
      s << " NONE<" << c.row.bound;
    } else {
      s << " q=";
      for (std::size_t i = 0; i < c.row.primes.size(); ++i) s << (i ? "," : "") << c.row.primes[i];
    }
    if (c.reproduced) {
      s << (*c.reproduced ? " search=same" : " search=");
      if (!*c.reproduced) {
        for (std::size_t i = 0; i < c.searched.size(); ++i) s << (i ? "," : "") << c.searched[i];
      }
    }
    for (const auto& problem : c.problems) s << "\n     " << problem;
    s << '\n';
    if (!c.ok) ++failed;
  }
  sink.get() << checks.size() - failed << "/" << checks.size() << " rows verified\n";
  return failed == 0 ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Generalized Fekete polynomials: construction, cyclotomic content and Galois certificates",
               "fekete"};
  app.require_subcommand(1);

  auto add_delta = [&](CLI::App* sub) {
    sub->add_option("delta", o.delta, "fundamental discriminant")->required()->allow_extra_args(false);
    sub->add_option("--cyclo-bound", o.cyclo_bound, "largest n tried when stripping cyclotomic factors");
    sub->add_option("--out", o.out_path, "write output to this file");
  };

  auto* construct = app.add_subcommand("construct", "F, Ftilde, f and g as JSON");
  add_delta(construct);
  auto* compact = app.add_subcommand("compact", "the compact polynomial f");
  add_delta(compact);
  compact->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  auto* trace = app.add_subcommand("trace", "the trace polynomial g");
  add_delta(trace);
  trace->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  auto* mults = app.add_subcommand("mults", "cyclotomic multiplicities of F against the closed forms");
  add_delta(mults);

  auto* factor = app.add_subcommand("factor-mod", "factorisation shape modulo a prime");
  factor->add_option("q", o.q, "prime modulus")->required();
  factor->add_option("--delta", o.delta, "discriminant whose polynomial is factored");
  factor->add_option("--which", o.which, "f, g or F (with --delta)");
  factor->add_option("--poly", o.poly_text, "explicit polynomial, e.g. \"x^4 - x^3 - 2*x^2 + 3*x + 1\"");
  factor->add_option("--cyclo-bound", o.cyclo_bound, "largest n tried when stripping cyclotomic factors");
  factor->add_flag("--factors", o.show_factors, "also list the irreducible factors");
  factor->add_option("--out", o.out_path, "write output to this file");

  auto* cert = app.add_subcommand("certify", "search for a Galois certificate");
  add_delta(cert);
  cert->add_option("--mode", o.mode, "quadruple, triple, 2cycle or kernel")->capture_default_str();
  cert->add_option("--bound", o.bound, "largest prime searched")->capture_default_str();
  cert->add_option("--cache-dir", o.cache_dir, "certificate cache directory");

  auto* table = app.add_subcommand("table", "certificates for a range of primes in one family");
  table->add_option("--family", o.family, "4p, -4p, 3p or -3p")->capture_default_str();
  table->add_option("--mode", o.mode, "quadruple, triple, 2cycle or kernel")->capture_default_str();
  table->add_option("--from", o.p_from, "smallest p")->capture_default_str();
  table->add_option("--to", o.p_to, "largest p")->capture_default_str();
  table->add_option("--bound", o.bound, "largest prime searched")->capture_default_str();
  table->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  table->add_option("--format", o.format, "json or csv")->capture_default_str();
  table->add_option("--out", o.out_path, "write output to this file");
  table->add_option("--cache-dir", o.cache_dir, "certificate cache directory");
  table->add_flag("--timings", o.timings, "fill the ms column (makes the CSV nondeterministic)");

  auto* verify = app.add_subcommand("verify-table", "check published primes against their patterns");
  verify->add_option("file", o.table_file, "CSV with header p,delta,mode,q1,q2,q3,q4[,bound]")->required();
  verify->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  verify->add_option("--out", o.out_path, "write the report to this file");
  verify->add_flag("--check-minimal", o.check_minimal, "also report whether a per-slot search finds the same primes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int rc = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return rc == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*construct) return cmd_construct(o, out);
    if (*compact) return cmd_poly(o, out, false);
    if (*trace) return cmd_poly(o, out, true);
    if (*mults) return cmd_mults(o, out);
    if (*factor) {
      if (o.poly_text.empty() && factor->count("--delta") == 0) throw InvalidInput("factor-mod needs --delta or --poly");
      return cmd_factor_mod(o, out);
    }
    if (*cert) return cmd_certify(o, out, err);
    if (*table) return cmd_table(o, out);
    if (*verify) return cmd_verify_table(o, out, err);
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
  return kExitInvalidInput;
}

}  // namespace fekete
