#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "koorn/koornwinder.hpp"

namespace koorn {

inline constexpr int kCacheFormatVersion = 1;

// Canonical cache identity of a polynomial: rank, weight and the canonical
// parameter serialization.
std::string cache_key(const DominantWeight& lam, const ParamSet& p);

// Content-hashed filename (64-bit FNV-1a of the key, hex) with a .json
// extension; one file per entry.
std::string cache_filename(const std::string& key);

// Persists a polynomial under dir, creating the directory when needed.
// Writes to a temporary sibling and renames, so concurrent readers never
// observe a partial file.
void cache_store(const std::filesystem::path& dir, const KoornwinderPoly& P);

// Loads and fully re-validates a cached polynomial: version and key must
// match, and the deserialized polynomial must satisfy its eigen-equation
// exactly.  Any failure (missing file aside) yields std::nullopt with an
// explanation in *warning so the caller can recompute; a corrupted cache
// never crashes and is never trusted.
std::optional<KoornwinderPoly> cache_load(const std::filesystem::path& dir,
                                          const DominantWeight& lam, const ParamSet& p,
                                          std::string* warning = nullptr);

}  // namespace koorn
