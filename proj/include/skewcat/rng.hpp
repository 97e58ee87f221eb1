#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace skewcat {

/// Seeded random source. The standard distributions are implementation
/// defined, so bounded draws are done here by rejection on the raw engine
/// output; a given seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [lo, hi].
  int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin(std::uint64_t num = 1, std::uint64_t den = 2) { return below(den) < num; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  // Independent child stream, for per-task seeding.
  Rng split() { return Rng(engine_() ^ 0x2545f4914f6cdd1dULL); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace skewcat
