#include "koorn/cache.hpp"

#include <fstream>
#include <sstream>

#include "koorn/serialize.hpp"

namespace koorn {

std::string cache_key(const DominantWeight& lam, const ParamSet& p) {
    std::ostringstream os;
    os << "v" << kCacheFormatVersion << "|l=" << lam.length() << "|lambda=" << lam.str() << "|"
       << p.canonical_key();
    return os.str();
}

std::string cache_filename(const std::string& key) {
    // FNV-1a, 64-bit.
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : key) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xF);
    return os.str() + ".json";
}

void cache_store(const std::filesystem::path& dir, const KoornwinderPoly& P) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const std::string key = cache_key(P.lam, P.params);
    const fs::path target = dir / cache_filename(key);
    const fs::path tmp = target.string() + ".tmp";

    nlohmann::json doc{{"version", kCacheFormatVersion}, {"key", key}, {"poly", to_json(P)}};
    {
        std::ofstream out(tmp);
        if (!out) throw DomainError("cannot write cache file " + tmp.string());
        out << doc.dump(2) << "\n";
    }
    fs::rename(tmp, target);
}

std::optional<KoornwinderPoly> cache_load(const std::filesystem::path& dir,
                                          const DominantWeight& lam, const ParamSet& p,
                                          std::string* warning) {
    namespace fs = std::filesystem;
    if (warning) warning->clear();
    const std::string key = cache_key(lam, p);
    const fs::path target = dir / cache_filename(key);
    if (!fs::exists(target)) return std::nullopt;

    auto reject = [&](const std::string& why) -> std::optional<KoornwinderPoly> {
        if (warning) *warning = "ignoring cache file " + target.string() + ": " + why;
        return std::nullopt;
    };
    try {
        std::ifstream in(target);
        if (!in) return reject("unreadable");
        nlohmann::json doc = nlohmann::json::parse(in);
        if (!doc.is_object() || !doc.contains("version") || !doc.contains("key") ||
            !doc.contains("poly"))
            return reject("missing fields");
        if (doc.at("version") != kCacheFormatVersion) return reject("format version mismatch");
        if (doc.at("key") != key) return reject("key mismatch (hash collision or tampering)");
        KoornwinderPoly P = poly_from_json(doc.at("poly"));
        if (P.lam != lam || !(P.params == p)) return reject("content does not match the request");
        if (!verify_eigen(P).is_zero()) return reject("stored polynomial fails verification");
        return P;
    } catch (const std::exception& e) {
        return reject(std::string("parse failure: ") + e.what());
    }
}

}  // namespace koorn
