#include "hk/cache.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hk {

namespace {

std::shared_ptr<GbCache> g_cache;

std::string canonical_description(const PolyRing& ring, const std::vector<Polynomial>& gens) {
    std::vector<std::string> texts;
    texts.reserve(gens.size());
    for (const auto& g : gens)
        if (!g.is_zero()) texts.push_back(poly_to_string(ring, g));
    std::sort(texts.begin(), texts.end());
    texts.erase(std::unique(texts.begin(), texts.end()), texts.end());

    std::ostringstream out;
    out << "p=" << ring.p();
    out << ";ord=" << (ring.order == OrderKind::degrevlex ? "degrevlex" : "lex");
    out << ";vars=";
    for (size_t i = 0; i < ring.vars.size(); ++i) {
        if (i) out << ",";
        out << ring.vars[i];
    }
    out << ";gens=[";
    for (size_t i = 0; i < texts.size(); ++i) {
        if (i) out << ";";
        out << texts[i];
    }
    out << "]";
    return out.str();
}

std::string fnv1a_hex(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

GbCache::GbCache(std::string dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw InputError("cannot create cache directory '" + dir_ + "': " + ec.message());
}

std::string GbCache::cache_key(const PolyRing& ring, const std::vector<Polynomial>& gens) {
    return fnv1a_hex(canonical_description(ring, gens));
}

bool GbCache::load(const PolyRing& ring, const std::vector<Polynomial>& gens,
                   std::vector<Polynomial>& gb) const {
    std::string path = dir_ + "/" + cache_key(ring, gens) + ".gb";
    std::ifstream in(path);
    if (!in) return false;

    std::string line;
    std::vector<Polynomial> parsed;
    bool header_ok = false;
    try {
        if (!std::getline(in, line)) return false;
        header_ok = line == canonical_description(ring, gens);
        if (!header_ok) return false;  // hash collision or stale format
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            parsed.push_back(parse_polynomial(ring, line));
        }
    } catch (const Error&) {
        std::cerr << "warning: unreadable cache entry " << path << ", recomputing\n";
        return false;
    }
    gb = std::move(parsed);
    return true;
}

void GbCache::store(const PolyRing& ring, const std::vector<Polynomial>& gens,
                    const std::vector<Polynomial>& gb) const {
    std::string key = cache_key(ring, gens);
    std::string path = dir_ + "/" + key + ".gb";
    std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return;  // cache is best-effort
        out << canonical_description(ring, gens) << "\n";
        for (const auto& g : gb) out << poly_to_string(ring, g) << "\n";
        if (!out.good()) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            return;
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

GbCache* active_gb_cache() { return g_cache.get(); }

void set_gb_cache(std::shared_ptr<GbCache> cache) { g_cache = std::move(cache); }

}  // namespace hk
