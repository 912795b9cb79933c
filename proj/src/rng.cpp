#include "edgesamp/rng.hpp"

namespace edgesamp {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

Rng Rng::split(std::uint64_t stream) const {
  // Child streams are keyed by a hash of (own seed, own stream, child id) so
  // that nested splits do not collide with siblings.
  return Rng(splitmix64(seed_ ^ splitmix64(stream_)), stream);
}

}  // namespace edgesamp
