#ifndef FAIRPART_RNG_HPP
#define FAIRPART_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "fairpart/rational.hpp"

namespace fairpart {

// Stateless 64-bit mixer, used to derive independent sub-seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic random source.  std::mt19937_64 has a standard-mandated
// output sequence, and all derived draws below avoid std::*_distribution
// (whose algorithms are implementation-defined), so the same seed produces
// the same stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform integer in [lo, hi], unbiased via rejection.
  long long uniform(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<long long>(next_u64());  // full 64-bit range
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return lo + static_cast<long long>(x % range);
  }

  bool chance(int num, int den) { return uniform(0, den - 1) < num; }

  // Value on the grid {0, 1/2^16, ..., 1}.
  Rational grid_value(long long lo_numer = 0, long long hi_numer = 1 << 16) {
    return Rational(uniform(lo_numer, hi_numer), 1 << 16);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<long long>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::vector<int> permutation(int count) {
    std::vector<int> p(count);
    for (int i = 0; i < count; ++i) p[i] = i;
    shuffle(p);
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace fairpart

#endif  // FAIRPART_RNG_HPP
