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

#include "montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "error.hpp"

namespace expsig {

void validate(const SimConfig& c) {
  if (!(c.x0 * c.x0 + c.y0 * c.y0 < 1.0)) fail(ErrorCode::kInvalidArgument, "start point must lie in the open unit disk");
  if (!(c.h > 0.0) || !std::isfinite(c.h)) fail(ErrorCode::kInvalidArgument, "step h must be positive");
  if (c.level < 1 || c.level > 12) fail(ErrorCode::kInvalidArgument, "level must be in [1, 12]");
  if (c.paths < 1) fail(ErrorCode::kInvalidArgument, "paths must be >= 1");
}

namespace {

// Per-path generator keyed by (seed, index). std::seed_seq and mt19937_64 are
// fully specified by the standard, so streams are portable.
class PathRng {
 public:
  PathRng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x5eedu};
    engine_.seed(seq);
  }

  // Uniform in (0, 1).
  double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53; }

  // Two independent standard normals (Marsaglia polar method).
  std::array<double, 2> normal_pair() {
    for (;;) {
      const double u = 2.0 * uniform() - 1.0, v = 2.0 * uniform() - 1.0;
      const double s = u * u + v * v;
      if (s >= 1.0 || s == 0.0) continue;
      const double f = std::sqrt(-2.0 * std::log(s) / s);
      return {u * f, v * f};
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Streams increments of one stopped path into `sink`; returns the exit time.
template <class Sink>
double walk(const SimConfig& c, std::uint64_t index, Sink&& sink) {
  PathRng rng(c.seed, index);
  const double sd = std::sqrt(c.h);
  double x = c.x0, y = c.y0, t = 0.0;
  for (;;) {
    const auto g = rng.normal_pair();
    const double nx = x + sd * g[0], ny = y + sd * g[1];
    t += c.h;
    const double r2 = nx * nx + ny * ny;
    bool exited = r2 >= 1.0;
    if (!exited && c.bridge_correction) {
      // Crossing probability of a Brownian bridge against the tangent line at
      // distances d0, d1 from the circle.
      const double d0 = 1.0 - std::sqrt(x * x + y * y), d1 = 1.0 - std::sqrt(r2);
      const double expo = 2.0 * d0 * d1 / c.h;
      if (expo < 40.0) exited = rng.uniform() < std::exp(-expo);
    }
    if (exited) {
      const double r = std::sqrt(r2);
      sink(Increment{nx / r - x, ny / r - y});
      return t;
    }
    sink(Increment{nx - x, ny - y});
    x = nx;
    y = ny;
  }
}

constexpr long kChunk = 2048;

}  // namespace

StoppedPath simulate_stopped_path(const SimConfig& c, std::uint64_t path_index) {
  validate(c);
  StoppedPath p;
  p.exit_time = walk(c, path_index, [&](const Increment& d) { p.increments.push_back(d); });
  return p;
}

Signature::Signature(int depth) : depth_(depth) {
  if (depth < 0) fail(ErrorCode::kInvalidArgument, "negative signature depth");
  data_.assign((std::size_t{2} << depth) - 1, 0.0);
  data_[0] = 1.0;
}

void Signature::append_increment(const Increment& d) {
  // powers at level m = d^{(x) m} / m!
  if (powers_.size() != data_.size()) {
    powers_.assign(data_.size(), 0.0);
    powers_[0] = 1.0;
  }
  double* pw = powers_.data();
  for (int m = 1; m <= depth_; ++m) {
    const double* prev = pw + offset(m - 1);
    double* cur = pw + offset(m);
    const double d0 = d[0] / m, d1 = d[1] / m;
    const std::size_t len = std::size_t{1} << (m - 1);
    for (std::size_t a = 0; a < len; ++a) {
      cur[2 * a] = prev[a] * d0;
      cur[2 * a + 1] = prev[a] * d1;
    }
  }
  // Top level first so lower levels are still the old values.
  double* sig = data_.data();
  for (int n = depth_; n >= 1; --n) {
    double* out = sig + offset(n);
    for (int k = 0; k < n; ++k) {
      const double* s = sig + offset(k);
      const double* e = pw + offset(n - k);
      const int shift = n - k;
      const std::size_t ls = std::size_t{1} << k, le = std::size_t{1} << shift;
      for (std::size_t a = 0; a < ls; ++a) {
        const double sa = s[a];
        double* o = out + (a << shift);
        for (std::size_t b = 0; b < le; ++b) o[b] += sa * e[b];
      }
    }
  }
}

void Signature::reset() {
  std::fill(data_.begin(), data_.end(), 0.0);
  data_[0] = 1.0;
}

Signature segment_signature(const Increment& d, int depth) {
  Signature s(depth);
  s.append_increment(d);
  return s;
}

Signature chen_product(const Signature& a, const Signature& b) {
  if (a.depth() != b.depth()) fail(ErrorCode::kInvalidArgument, "signature depths differ");
  const int n_max = a.depth();
  Signature r(n_max);
  for (int n = 1; n <= n_max; ++n) {
    auto out = r.level(n);
    for (int k = 0; k <= n; ++k) {
      const auto s = a.level(k);
      const auto e = b.level(n - k);
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j) out[(i << (n - k)) | j] += s[i] * e[j];
    }
  }
  return r;
}

Signature signature_of_path(const std::vector<Increment>& increments, int depth) {
  if (depth < 1) fail(ErrorCode::kInvalidArgument, "signature depth must be >= 1");
  Signature s(depth);
  for (const auto& d : increments) s.append_increment(d);
  return s;
}

SigAccumulator::SigAccumulator(int depth) : depth_(depth) {
  const std::size_t n = (std::size_t{1} << (depth + 1)) - 1 + 1;  // all levels + exit time
  mean_.assign(n, 0.0);
  m2_.assign(n, 0.0);
}

std::size_t SigAccumulator::slot(int level, std::size_t word) const {
  if (level < 0 || level > depth_ || word >= (std::size_t{1} << level))
    fail(ErrorCode::kInvalidArgument, "signature component out of range");
  return ((std::size_t{1} << level) - 1) + word;
}

void SigAccumulator::add(const Signature& s, double exit_time) {
  ++count_;
  const double inv = 1.0 / static_cast<double>(count_);
  auto update = [&](std::size_t i, double v) {
    const double delta = v - mean_[i];
    mean_[i] += delta * inv;
    m2_[i] += delta * (v - mean_[i]);
  };
  const auto& v = s.flat();
  for (std::size_t i = 0; i < v.size(); ++i) update(i, v[i]);
  update(v.size(), exit_time);
}

void SigAccumulator::merge(const SigAccumulator& o) {
  if (o.depth_ != depth_) fail(ErrorCode::kInvalidArgument, "accumulator depths differ");
  if (o.count_ == 0) return;
  if (count_ == 0) {
    *this = o;
    return;
  }
  const double na = static_cast<double>(count_), nb = static_cast<double>(o.count_), n = na + nb;
  for (std::size_t i = 0; i < mean_.size(); ++i) {
    const double delta = o.mean_[i] - mean_[i];
    mean_[i] += delta * nb / n;
    m2_[i] += o.m2_[i] + delta * delta * na * nb / n;
  }
  count_ += o.count_;
}

double SigAccumulator::stderr_at(std::size_t i) const {
  if (count_ < 2) return 0.0;
  const double n = static_cast<double>(count_);
  return std::sqrt(m2_[i] / (n - 1) / n);
}

double SigAccumulator::mean(int level, std::size_t word) const { return mean_[slot(level, word)]; }
double SigAccumulator::stderr_of(int level, std::size_t word) const { return stderr_at(slot(level, word)); }
double SigAccumulator::exit_time_stderr() const { return stderr_at(mean_.size() - 1); }

SigAccumulator estimate_expected_sig(const SimConfig& c, unsigned threads) {
  validate(c);
  const long chunks = (c.paths + kChunk - 1) / kChunk;
  std::vector<SigAccumulator> parts(static_cast<std::size_t>(chunks), SigAccumulator(c.level));
  std::atomic<long> next{0};
  auto worker = [&]() {
    Signature s(c.level);
    for (long ch = next++; ch < chunks; ch = next++) {
      SigAccumulator& acc = parts[static_cast<std::size_t>(ch)];
      const long end = std::min(c.paths, (ch + 1) * kChunk);
      for (long p = ch * kChunk; p < end; ++p) {
        s.reset();
        const double tau = walk(c, static_cast<std::uint64_t>(p), [&](const Increment& d) { s.append_increment(d); });
        acc.add(s, tau);
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<long>(threads, chunks));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  SigAccumulator total(c.level);
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace expsig
