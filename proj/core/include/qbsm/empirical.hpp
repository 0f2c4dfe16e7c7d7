#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qbsm {

// Output sample with validated, finite entries.
class SampleVector {
 public:
  // Takes ownership; rejects empty input and non-finite entries.
  explicit SampleVector(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

// Smallest 1-based rank k with k/n >= alpha; the order-statistic index
// realizing inf{y | F_n(y) >= alpha} on an n-point empirical CDF.
std::size_t quantile_rank(std::size_t n, double alpha);

// Empirical alpha-quantile: the k-th order statistic, k = quantile_rank.
// Runs in O(n) expected time (selection, no full sort). alpha in (0, 1];
// alpha = 1 gives the sample maximum.
double empirical_quantile(const SampleVector& v, double alpha);

// Fraction of sample values strictly less than y.
double ecdf(const SampleVector& v, double y);

struct MeanVariance {
  double mean = 0.0;
  double variance = 0.0;  // population convention (denominator n)
};

// Two-pass mean and population variance; requires n >= 2.
MeanVariance mean_variance(const SampleVector& v);

// Sorted copy of a sample, for reading many quantiles off one sort.
// Construction does not re-validate entries; estimators use it on slices of
// an already validated output vector.
class SortedSample {
 public:
  explicit SortedSample(std::vector<double> values);

  double quantile(double alpha) const;
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

}  // namespace qbsm
