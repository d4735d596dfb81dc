#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qz/errors.hpp"

namespace qz {

/* Deterministic RNG.  mt19937_64 output is specified by the standard and the
 * reductions below avoid std distributions, whose streams differ between
 * library implementations.  Identical seeds give identical streams on every
 * platform, which the CLI's byte-determinism contract relies on. */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /* uniform on [0, n), rejection sampling from the top */
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) fail("ZeroInput", "rng range must be nonempty");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  /* uniform on [lo, hi] inclusive; long interfaces cleanly with gmp */
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /* nonzero uniform on [-h, h] \ {0} */
  long nonzero(long h) {
    long v = range(1, 2 * h);
    return v <= h ? v : h - v;  // 1..h, then -1..-h
  }

  bool coin() { return next() & 1u; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(below(v.size()))];
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace qz
