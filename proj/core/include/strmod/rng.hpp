#ifndef STRMOD_RNG_HPP
#define STRMOD_RNG_HPP
//
// strmod / rng
// Seeded generator used by every randomized routine. splitmix64 keeps the
// stream identical across platforms; std:: distributions are avoided for
// that reason. split() derives an independent child stream, so concurrent
// branches stay reproducible regardless of scheduling.
//

#include <cstdint>

namespace strmod {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, n), n >= 1. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t v = next();
    while (v >= limit)
      v = next();
    return v % n;
  }

  bool coin() { return (next() & 1u) != 0; }

  /// Child stream keyed by `tag`; independent of further draws from *this.
  Rng split(std::uint64_t tag) const {
    Rng child(state_ ^ (0xd1342543de82ef95ULL * (tag + 1)));
    child.next();
    return child;
  }

private:
  std::uint64_t state_;
};

} // namespace strmod

#endif
