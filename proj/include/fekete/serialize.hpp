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

#ifndef FEKETE_SERIALIZE_HPP
#define FEKETE_SERIALIZE_HPP

#include <json.hpp>

#include "fekete/cyclotomic.hpp"
#include "fekete/fekete.hpp"
#include "fekete/galois.hpp"
#include "fekete/mod_poly.hpp"

namespace fekete {

using Json = nlohmann::ordered_json;

// Polynomials are arrays of decimal strings, lowest degree first.
Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

Json bundle_to_json(const FeketeBundle& b);
Json report_to_json(const MultiplicityReport& r);

Json shape_to_json(const FactorShape& s);
FactorShape shape_from_json(const Json& j);

Json certificate_to_json(const GaloisCertificate& c);
/// Throws InvalidInput on malformed input.
GaloisCertificate certificate_from_json(const Json& j);

}  // namespace fekete

#endif  // FEKETE_SERIALIZE_HPP
