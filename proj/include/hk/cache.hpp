#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hk/polynomial.hpp"

namespace hk {

// Disk cache for reduced Groebner bases, keyed by characteristic, order,
// variable list, and the canonicalized generator set. Files are written with a
// temp-file rename so interrupted runs never leave partial entries; unreadable
// entries are recomputed and overwritten.
class GbCache {
  public:
    explicit GbCache(std::string dir);

    const std::string& dir() const { return dir_; }

    // true on a usable hit; gb receives the stored basis
    bool load(const PolyRing& ring, const std::vector<Polynomial>& gens,
              std::vector<Polynomial>& gb) const;
    void store(const PolyRing& ring, const std::vector<Polynomial>& gens,
               const std::vector<Polynomial>& gb) const;

    static std::string cache_key(const PolyRing& ring, const std::vector<Polynomial>& gens);

  private:
    std::string dir_;
};

// process-wide cache used by IdealHandle; null disables caching
GbCache* active_gb_cache();
void set_gb_cache(std::shared_ptr<GbCache> cache);

}  // namespace hk
