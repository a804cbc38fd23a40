#pragma once

#include <cstdint>
#include <string_view>

namespace geomcrystal {

// SplitMix64 stream. Child streams are derived from the parent seed and a label,
// so each check owns a substream that does not depend on evaluation order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi], by rejection so results are platform independent.
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  Rng split(std::string_view label) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : label) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    Rng child(state_ ^ h);
    child.next();
    return Rng(child.next());
  }

  Rng split(std::uint64_t index) const {
    Rng child(state_ ^ (index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
    child.next();
    return Rng(child.next());
  }

 private:
  std::uint64_t state_;
};

}  // namespace geomcrystal
