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

#include "fekete/serialize.hpp"

#include <string>

namespace fekete {

Json poly_to_json(const IntPoly& p) {
  Json a = Json::array();
  for (const Integer& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

IntPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial must be a JSON array");
  std::vector<Integer> c;
  for (const auto& e : j) {
    if (e.is_string()) {
      c.push_back(parse_integer(e.get<std::string>()));
    } else if (e.is_number_integer()) {
      c.push_back(make_integer(e.get<std::int64_t>()));
    } else {
      throw InvalidInput("polynomial coefficient must be a string or integer");
    }
  }
  return IntPoly(std::move(c));
}

Json report_to_json(const MultiplicityReport& r) {
  Json factors = Json::array();
  for (auto [n, m] : r.entries) factors.push_back({{"n", n}, {"r", m}});
  return {{"v", r.vanishing_order_at_zero}, {"factors", factors}, {"residual", poly_to_json(r.residual)}};
}

Json bundle_to_json(const FeketeBundle& b) {
  Json j;
  j["delta"] = b.disc.delta();
  j["D"] = b.disc.conductor();
  j["family"] = std::string(family_name(b.disc.family()));
  if (b.disc.family() != Family::Generic) j["p"] = b.disc.prime();
  j["F"] = poly_to_json(b.F);
  j["F_tilde"] = b.F_tilde ? poly_to_json(*b.F_tilde) : Json(nullptr);
  j["f"] = poly_to_json(b.f);
  j["g"] = poly_to_json(b.g);
  j["f_text"] = to_string(b.f);
  j["g_text"] = to_string(b.g);
  j["removed"] = report_to_json(b.removed);
  j["sign"] = b.sign;
  j["conjectural"] = b.conjectural;
  return j;
}

Json shape_to_json(const FactorShape& s) {
  Json degrees = Json::object();
  for (auto [d, c] : s.degrees) degrees[std::to_string(d)] = c;
  return {{"q", s.q}, {"squarefree", s.squarefree}, {"degrees", degrees}};
}

FactorShape shape_from_json(const Json& j) {
  try {
    FactorShape s;
    s.q = j.at("q").get<std::uint32_t>();
    s.squarefree = j.at("squarefree").get<bool>();
    for (const auto& [k, v] : j.at("degrees").items()) s.degrees[std::stoi(k)] = v.get<int>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed shape: ") + e.what());
  } catch (const std::logic_error& e) {
    throw InvalidInput(std::string("malformed shape: ") + e.what());
  }
}

Json certificate_to_json(const GaloisCertificate& c) {
  Json j;
  j["target"] = std::string(target_name(c.target));
  j["degree"] = c.degree;
  Json ws = Json::array();
  for (const Witness& w : c.witnesses) {
    ws.push_back({{"q", w.q},
                  {"pattern", std::string(pattern_name(w.pattern))},
                  {"degrees", shape_to_json(w.shape)["degrees"]},
                  {"shape", to_string(w.shape)}});
  }
  j["witnesses"] = ws;
  if (c.disc) {
    Json d;
    d["square"] = c.disc->square;
    d["s"] = to_string(c.disc->s);
    if (c.disc->s_root) d["s_root"] = to_string(*c.disc->s_root);
    if (c.disc->discriminant) d["discriminant"] = to_string(*c.disc->discriminant);
    d["via"] = std::string(route_name(c.disc->via));
    j["disc"] = d;
  } else {
    j["disc"] = nullptr;
  }
  j["bound"] = c.bound;
  j["group"] = c.group;
  if (c.trace) j["trace"] = certificate_to_json(*c.trace);
  return j;
}

GaloisCertificate certificate_from_json(const Json& j) {
  try {
    GaloisCertificate c;
    c.target = parse_target(j.at("target").get<std::string>());
    c.degree = j.at("degree").get<int>();
    for (const auto& w : j.at("witnesses")) {
      Witness x;
      x.q = w.at("q").get<std::uint32_t>();
      x.pattern = parse_pattern(w.at("pattern").get<std::string>());
      x.shape = shape_from_json({{"q", x.q}, {"squarefree", true}, {"degrees", w.at("degrees")}});
      c.witnesses.push_back(std::move(x));
    }
    const Json& d = j.at("disc");
    if (!d.is_null()) {
      DiscVerdict v;
      v.square = d.at("square").get<bool>();
      v.s = parse_integer(d.at("s").get<std::string>());
      if (d.contains("s_root")) v.s_root = parse_integer(d.at("s_root").get<std::string>());
      if (d.contains("discriminant")) v.discriminant = parse_integer(d.at("discriminant").get<std::string>());
      const auto via = d.at("via").get<std::string>();
      if (via == "SFactor") {
        v.via = DiscRoute::SFactor;
      } else if (via == "FullResultant") {
        v.via = DiscRoute::FullResultant;
      } else if (via == "Both") {
        v.via = DiscRoute::Both;
      } else {
        throw InvalidInput("unknown discriminant route: " + via);
      }
      c.disc = std::move(v);
    }
    c.bound = j.at("bound").get<std::uint64_t>();
    c.group = j.at("group").get<std::string>();
    if (j.contains("trace")) c.trace = std::make_shared<const GaloisCertificate>(certificate_from_json(j["trace"]));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace fekete
