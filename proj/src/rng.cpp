#include "latmod/rng.hpp"

namespace latmod {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection; exact uniformity.
  while (true) {
    std::uint64_t x = next();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    std::uint64_t lo = static_cast<std::uint64_t>(m);
    if (lo >= bound) return static_cast<std::uint64_t>(m >> 64);
    std::uint64_t threshold = -bound % bound;
    if (lo >= threshold) return static_cast<std::uint64_t>(m >> 64);
  }
}

long long Rng::int_in(long long lo, long long hi) {
  return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  Rng r(seed ^ (0x5851f42d4c957f2dULL * (stream + 1)));
  r.next();
  return r.next();
}

Vector random_int_vector(Rng& rng, std::size_t n, long long box) {
  while (true) {
    Vector v(n);
    bool zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      long long e = rng.int_in(-box, box);
      if (e != 0) zero = false;
      v[i] = Scalar(static_cast<long>(e));
    }
    if (!zero) return v;
  }
}

}  // namespace latmod
