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

#ifndef FEKETE_CACHE_HPP
#define FEKETE_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "fekete/galois.hpp"

namespace fekete {

/// Bumped whenever certificate contents or search semantics change; old
/// entries then simply miss.
inline constexpr int kCacheVersion = 1;

struct CacheKey {
  std::int64_t delta = 0;
  std::string mode;
  std::uint64_t bound = 0;
  int version = kCacheVersion;
};

/// "v<version>|<delta>|<mode>|<bound>".
std::string cache_key_text(const CacheKey& key);
/// <dir>/<16 hex digits of FNV-1a(key text)>.json
std::filesystem::path cache_path(const std::filesystem::path& dir, const CacheKey& key);

/// Writes atomically (temp file + rename); creates dir when missing.
void cache_store(const std::filesystem::path& dir, const CacheKey& key, const GaloisCertificate& cert);
/// nullopt on a miss, on a key mismatch, or on a corrupt entry.
std::optional<GaloisCertificate> cache_load(const std::filesystem::path& dir, const CacheKey& key);

}  // namespace fekete

#endif  // FEKETE_CACHE_HPP
