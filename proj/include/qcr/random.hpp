#pragma once

#include <cstdint>
#include <random>

namespace qcr {

/// Seeded generator with platform-independent draws (the standard
/// distributions are implementation-defined, so only raw engine output is
/// used).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }
  bool coin() { return (engine_() & 1U) != 0; }
  /// Independent child stream.
  Rng fork() { return Rng(engine_() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qcr
