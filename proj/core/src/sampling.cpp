#include "qbsm/sampling.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

#include "qbsm/errors.hpp"

namespace qbsm {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 output function. Statistically strong 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// SplitMix64 evaluated at an arbitrary stream position. Pure function of
// (seed, k): this is what makes the generator counter based.
constexpr std::uint64_t splitmix_at(std::uint64_t seed, std::uint64_t k) {
  return mix64(seed + (k + 1) * kGolden);
}

constexpr double u64_to_unit(std::uint64_t z) {
  // Top 53 bits; result lies in [0, 1), never reaching 1.
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

constexpr unsigned kSobolBits = 32;

// Primitive-polynomial initialization data for Sobol' dimensions 2..32
// (dimension 1 uses the unit direction numbers). `s` is the polynomial
// degree, `a` encodes its inner coefficients, `m` holds the first s odd
// initial direction values.
struct SobolInit {
  unsigned s;
  std::uint32_t a;
  std::array<std::uint32_t, 7> m;
};

constexpr std::array<SobolInit, 31> kSobolInit = {{
    {1, 0, {1}},
    {2, 1, {1, 3}},
    {3, 1, {1, 3, 1}},
    {3, 2, {1, 1, 1}},
    {4, 1, {1, 1, 3, 3}},
    {4, 4, {1, 3, 5, 13}},
    {5, 2, {1, 1, 5, 5, 17}},
    {5, 4, {1, 1, 5, 5, 5}},
    {5, 7, {1, 1, 7, 11, 19}},
    {5, 11, {1, 1, 5, 1, 1}},
    {5, 13, {1, 1, 1, 3, 11}},
    {5, 14, {1, 3, 5, 5, 31}},
    {6, 1, {1, 3, 3, 9, 7, 49}},
    {6, 13, {1, 1, 1, 15, 21, 21}},
    {6, 16, {1, 3, 1, 13, 27, 49}},
    {6, 19, {1, 1, 1, 15, 7, 5}},
    {6, 22, {1, 3, 1, 15, 13, 25}},
    {6, 25, {1, 1, 5, 5, 19, 61}},
    {7, 1, {1, 3, 7, 11, 23, 15, 103}},
    {7, 4, {1, 3, 7, 13, 13, 15, 69}},
    {7, 7, {1, 1, 3, 13, 7, 35, 63}},
    {7, 8, {1, 3, 5, 9, 1, 25, 53}},
    {7, 14, {1, 3, 1, 13, 9, 35, 107}},
    {7, 19, {1, 3, 1, 5, 27, 61, 131}},
    {7, 21, {1, 1, 5, 11, 19, 41, 61}},
    {7, 28, {1, 3, 5, 3, 3, 13, 69}},
    {7, 31, {1, 1, 7, 13, 1, 19, 1}},
    {7, 32, {1, 3, 7, 5, 13, 19, 59}},
    {7, 37, {1, 1, 3, 9, 25, 29, 41}},
    {7, 41, {1, 3, 5, 13, 23, 1, 55}},
    {7, 42, {1, 3, 7, 3, 13, 59, 17}},
}};

// Expands direction numbers for one dimension (0-based). Values carry their
// leading bit at position 31-k, so the 32-bit state maps to [0,1) by a
// single multiply.
std::array<std::uint32_t, kSobolBits> direction_numbers(std::size_t dim) {
  std::array<std::uint32_t, kSobolBits> v{};
  if (dim == 0) {
    for (unsigned k = 0; k < kSobolBits; ++k) v[k] = 1u << (31 - k);
    return v;
  }
  const SobolInit& init = kSobolInit[dim - 1];
  const unsigned s = init.s;
  for (unsigned k = 0; k < s; ++k) v[k] = init.m[k] << (31 - k);
  for (unsigned k = s; k < kSobolBits; ++k) {
    v[k] = v[k - s] ^ (v[k - s] >> s);
    for (unsigned j = 1; j < s; ++j) {
      v[k] ^= ((init.a >> (s - 1 - j)) & 1u) * v[k - j];
    }
  }
  return v;
}

// Sequence state at position p: XOR of the direction numbers selected by the
// bits of gray(p). Lets generation start at an arbitrary skip without
// iterating from the origin.
std::uint32_t state_at(const std::array<std::uint32_t, kSobolBits>& v, std::uint64_t p) {
  std::uint64_t g = p ^ (p >> 1);
  std::uint32_t x = 0;
  for (unsigned k = 0; g != 0; ++k, g >>= 1) {
    if (g & 1) x ^= v[k];
  }
  return x;
}

void check_shape(std::size_t n, std::size_t d) {
  if (n == 0) throw ConfigError("point set requires n >= 1");
  if (d == 0) throw ConfigError("point set requires d >= 1");
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_tag) {
  return mix64(seed ^ splitmix_at(stream_tag, 0));
}

PointSet random_points(std::size_t n, std::size_t d, std::uint64_t seed) {
  check_shape(n, d);
  PointSet points(n, d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      points(i, j) = u64_to_unit(splitmix_at(seed, i * d + j));
    }
  }
  return points;
}

PointSet sobol_points(std::size_t n, std::size_t d, std::uint64_t skip) {
  check_shape(n, d);
  if (d > kSobolMaxDimension) {
    throw ConfigError("sobol_points supports at most " +
                      std::to_string(kSobolMaxDimension) + " dimensions, got " +
                      std::to_string(d));
  }
  if (skip > std::numeric_limits<std::uint32_t>::max() - n) {
    throw ConfigError("sobol_points: skip + n exceeds the 2^32 - 1 sequence length");
  }

  PointSet points(n, d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto v = direction_numbers(j);
    std::uint32_t state = state_at(v, skip);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t pos = skip + 1 + i;
      state ^= v[std::countr_zero(pos)];
      points(i, j) = static_cast<double>(state) * 0x1.0p-32;
    }
  }
  return points;
}

PointSet generate_points(std::size_t n, std::size_t d, const SamplerConfig& cfg) {
  switch (cfg.kind) {
    case SamplerKind::pseudorandom:
      return random_points(n, d, cfg.seed);
    case SamplerKind::sobol_sequence:
      return sobol_points(n, d, cfg.skip);
  }
  throw ConfigError("unknown sampler kind");
}

}  // namespace qbsm
