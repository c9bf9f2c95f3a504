/*
Copyright 2026 The expsig Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace expsig {

struct SimConfig {
  double x0 = 0.0;
  double y0 = 0.0;
  double h = 1e-4;           // time step
  int level = 2;             // signature truncation N
  long paths = 100000;
  std::uint64_t seed = 1;
  bool bridge_correction = true;
};

// Throws Error(kInvalidArgument) unless |start| < 1, h > 0, N >= 1, paths >= 1.
void validate(const SimConfig& c);

using Increment = std::array<double, 2>;

struct StoppedPath {
  std::vector<Increment> increments;
  double exit_time = 0.0;
};

// Gaussian walk with step variance h per coordinate, stopped at the first step
// that leaves the open disk (or, with bridge correction, at the first step whose
// Brownian bridge crosses the local tangent line of the circle). The final
// point is projected radially onto the circle. Path i depends only on
// (seed, i).
StoppedPath simulate_stopped_path(const SimConfig& c, std::uint64_t path_index);

// Truncated signature stored flat: level k occupies the 2^k slots starting at
// 2^k - 1, with words indexed as in TensorPoly (first letter most significant).
class Signature {
 public:
  explicit Signature(int depth = 0);
  int depth() const { return depth_; }
  std::span<double> level(int k) { return {data_.data() + offset(k), std::size_t{1} << k}; }
  std::span<const double> level(int k) const { return {data_.data() + offset(k), std::size_t{1} << k}; }
  double at(int k, std::size_t word) const { return data_[offset(k) + word]; }
  const std::vector<double>& flat() const { return data_; }
  // *this <- *this (x) exp_N(d)
  void append_increment(const Increment& d);
  // Back to the trivial signature (1, 0, 0, ...).
  void reset();

 private:
  static std::size_t offset(int k) { return (std::size_t{1} << k) - 1; }

  int depth_ = 0;
  std::vector<double> data_;
  std::vector<double> powers_;  // scratch for append_increment, same layout
};

Signature segment_signature(const Increment& d, int depth);
// Truncated tensor product, Chen's identity for concatenated paths.
Signature chen_product(const Signature& a, const Signature& b);
// Signature of the piecewise-linear path through the increments.
Signature signature_of_path(const std::vector<Increment>& increments, int depth);

// Welford accumulator over every signature component plus the exit time.
class SigAccumulator {
 public:
  explicit SigAccumulator(int depth = 1);

  void add(const Signature& s, double exit_time);
  // Chan et al. pairwise merge.
  void merge(const SigAccumulator& o);

  long count() const { return count_; }
  int depth() const { return depth_; }
  double mean(int level, std::size_t word) const;
  double stderr_of(int level, std::size_t word) const;
  double exit_time_mean() const { return mean_.back(); }
  double exit_time_stderr() const;

 private:
  std::size_t slot(int level, std::size_t word) const;
  double stderr_at(std::size_t i) const;

  int depth_;
  long count_ = 0;
  std::vector<double> mean_;
  std::vector<double> m2_;
};

// Paths are processed in fixed chunks whose accumulators merge in chunk order,
// so the result is bit-identical for any thread count. threads = 0 picks the
// hardware concurrency.
SigAccumulator estimate_expected_sig(const SimConfig& c, unsigned threads = 0);

}  // namespace expsig
