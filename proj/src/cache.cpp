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

#include "fekete/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "fekete/serialize.hpp"

namespace fekete {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

std::string cache_key_text(const CacheKey& key) {
  return "v" + std::to_string(key.version) + "|" + std::to_string(key.delta) + "|" + key.mode + "|" +
         std::to_string(key.bound);
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const CacheKey& key) {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(cache_key_text(key))));
  return dir / name;
}

void cache_store(const std::filesystem::path& dir, const CacheKey& key, const GaloisCertificate& cert) {
  std::filesystem::create_directories(dir);
  const auto path = cache_path(dir, key);
  std::ostringstream tid;
  tid << std::this_thread::get_id();
  auto tmp = path;
  tmp += ".tmp" + tid.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    Json j{{"key", cache_key_text(key)}, {"certificate", certificate_to_json(cert)}};
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::optional<GaloisCertificate> cache_load(const std::filesystem::path& dir, const CacheKey& key) {
  std::ifstream in(cache_path(dir, key), std::ios::binary);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.at("key").get<std::string>() != cache_key_text(key)) return std::nullopt;
    return certificate_from_json(j.at("certificate"));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace fekete
