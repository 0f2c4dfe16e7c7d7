#pragma once

#include <cstdint>
#include <cstddef>

#include "qbsm/matrix.hpp"

namespace qbsm {

// A batch of points in the half-open unit hypercube [0,1)^d. Every entry is
// strictly below 1, so downstream inverse-CDF transforms never see u = 1;
// generators additionally never emit an exact 0.
class PointSet {
 public:
  PointSet(std::size_t n, std::size_t d) : values_(n, d) {}

  std::size_t n() const { return values_.rows(); }
  std::size_t d() const { return values_.cols(); }

  double& operator()(std::size_t i, std::size_t j) { return values_(i, j); }
  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }
  std::span<const double> row(std::size_t i) const { return values_.row(i); }

  const Matrix& values() const { return values_; }
  Matrix& values() { return values_; }

  friend bool operator==(const PointSet& a, const PointSet& b) = default;

 private:
  Matrix values_;
};

enum class SamplerKind { pseudorandom, sobol_sequence };

// `seed` is ignored (but permitted) for the Sobol' sequence, which is a
// fixed deterministic object; `skip` is ignored for the pseudorandom
// generator, whose stream position is controlled by the seed alone.
struct SamplerConfig {
  SamplerKind kind = SamplerKind::pseudorandom;
  std::uint64_t seed = 0;
  std::uint64_t skip = 0;

  friend bool operator==(const SamplerConfig&, const SamplerConfig&) = default;
};

// Highest dimension covered by the embedded Sobol' direction-number table.
inline constexpr std::size_t kSobolMaxDimension = 32;

// n x d points, i.i.d. uniform on [0,1). Counter based: entry (i, j) is a
// pure function of (seed, i, j), so any evaluation order or chunking yields
// the identical point set, on every platform.
PointSet random_points(std::size_t n, std::size_t d, std::uint64_t seed);

// Points skip+1 ... skip+n of the Sobol' low-discrepancy sequence (Gray-code
// order). Sequence index 0 is the all-zeros point and is never emitted.
PointSet sobol_points(std::size_t n, std::size_t d, std::uint64_t skip = 0);

// Dispatch on cfg.kind.
PointSet generate_points(std::size_t n, std::size_t d, const SamplerConfig& cfg);

// Deterministically derives an independent child seed, for splitting one
// user-facing seed into the separate streams an estimator needs.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_tag);

}  // namespace qbsm
