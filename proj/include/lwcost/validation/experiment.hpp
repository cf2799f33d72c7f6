#pragma once
#include <cstdio>
#include "../ciphers/make_aead.hpp"
#include "../schedule/schedule.hpp"
#include <algorithm>
#include <chrono>
#include <cmath>

namespace lwcost {

enum class ExperimentMode
{
  Counts,
  Time,
};

struct ExperimentConfig
{
  AlgorithmId algorithm;
  std::vector<uint64_t> grid_A;
  std::vector<uint64_t> grid_M;
  int repetitions = 1;
  ExperimentMode mode = ExperimentMode::Counts;
};

struct ExperimentError : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

inline void
validate(const ExperimentConfig& cfg)
{
  if (cfg.grid_A.empty() || cfg.grid_M.empty())
    throw ExperimentError("experiment grids must be non-empty");
  if (cfg.repetitions < 1)
    throw ExperimentError("repetitions must be at least 1");
}

struct Sample
{
  uint64_t len_A = 0;
  uint64_t len_M = 0;
  uint64_t blocks_A = 0;
  uint64_t blocks_M = 0;
  OpCounters measured;
  double seconds = 0; // median over repetitions, time mode only
  PhasePlan predicted;

  bool exact() const { return same_counts(measured, predicted); }

  friend bool operator==(const Sample& a, const Sample& b)
  {
    return a.len_A == b.len_A && a.len_M == b.len_M && a.blocks_A == b.blocks_A &&
           a.blocks_M == b.blocks_M && a.measured == b.measured &&
           a.predicted.primitives == b.predicted.primitives;
  }
};

// {0, 1, r-1, r, r+1, 2r, 2r+1, 8r, 64r}. Entries may repeat for r <= 2.
inline std::vector<uint64_t>
default_grid(uint64_t r)
{
  return { 0, 1, r - 1, r, r + 1, 2 * r, 2 * r + 1, 8 * r, 64 * r };
}

// Multiples of the rate only, so ceilings and padding steps vanish.
inline std::vector<uint64_t>
aligned_grid(uint64_t r)
{
  return { r, 2 * r, 3 * r, 4 * r, 8 * r };
}

inline ExperimentConfig
default_count_config(const AlgorithmId& alg)
{
  const auto s = schedule_params(alg);
  return { alg, default_grid(s.rate_ad), default_grid(s.rate_msg), 1, ExperimentMode::Counts };
}

inline ExperimentConfig
aligned_count_config(const AlgorithmId& alg)
{
  const auto s = schedule_params(alg);
  return { alg, aligned_grid(s.rate_ad), aligned_grid(s.rate_msg), 1, ExperimentMode::Counts };
}

namespace detail {

inline Bytes
pattern(size_t n, uint8_t seed)
{
  Bytes b(n);
  for (size_t i = 0; i < n; i++)
    b[i] = uint8_t(i * 131 + seed);
  return b;
}

inline Sample
blank_sample(const ScheduleParams& s, uint64_t a, uint64_t m)
{
  Sample out;
  out.len_A = a;
  out.len_M = m;
  out.blocks_A = block_count(a, s.rate_ad);
  out.blocks_M = block_count(m, s.rate_msg);
  out.predicted = plan(s.algorithm, a, m);
  return out;
}

}

// One seal per grid point on fixed inputs; |A| varies fastest.
inline std::vector<Sample>
run_count_experiment(const ExperimentConfig& cfg)
{
  validate(cfg);
  if (cfg.mode != ExperimentMode::Counts)
    throw ExperimentError("run_count_experiment needs mode = counts");
  const auto s = schedule_params(cfg.algorithm);
  auto aead = make_aead(cfg.algorithm);
  const auto& p = aead->params();
  const Bytes key = detail::pattern(p.key_len, 1), nonce = detail::pattern(p.nonce_len, 2);
  std::vector<Sample> out;
  for (uint64_t m : cfg.grid_M)
    for (uint64_t a : cfg.grid_A) {
      Sample smp = detail::blank_sample(s, a, m);
      smp.measured = aead->seal(key, nonce, detail::pattern(a, 3), detail::pattern(m, 4)).counters;
      out.push_back(std::move(smp));
    }
  return out;
}

struct TimeExperiment
{
  std::vector<Sample> samples;
  std::vector<std::string> warnings;
  double timer_resolution = 0; // seconds
};

// Smallest observable step of the steady clock.
inline double
timer_resolution()
{
  using clk = std::chrono::steady_clock;
  double best = 1;
  for (int i = 0; i < 64; i++) {
    const auto t0 = clk::now();
    auto t1 = clk::now();
    while (t1 == t0)
      t1 = clk::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

// Median-of-repetitions wall time of one seal per grid point. Run serially.
// Each repetition sweeps the whole grid once, after one untimed warm-up
// sweep, so clock-frequency drift spreads over all points instead of
// skewing the ones measured last.
inline TimeExperiment
run_time_experiment(const ExperimentConfig& cfg)
{
  validate(cfg);
  if (cfg.mode != ExperimentMode::Time)
    throw ExperimentError("run_time_experiment needs mode = time");
  using clk = std::chrono::steady_clock;
  const auto s = schedule_params(cfg.algorithm);
  auto aead = make_aead(cfg.algorithm);
  const auto& p = aead->params();
  const Bytes key = detail::pattern(p.key_len, 1), nonce = detail::pattern(p.nonce_len, 2);
  TimeExperiment out;
  out.timer_resolution = timer_resolution();

  struct Point
  {
    Sample smp;
    Bytes ad, pt;
    std::vector<double> t;
  };
  std::vector<Point> points;
  for (uint64_t m : cfg.grid_M)
    for (uint64_t a : cfg.grid_A)
      points.push_back({ detail::blank_sample(s, a, m), detail::pattern(a, 3), detail::pattern(m, 4), {} });

  for (int rep = -1; rep < cfg.repetitions; rep++)
    for (auto& pt : points) {
      const auto t0 = clk::now();
      auto r = aead->seal(key, nonce, pt.ad, pt.pt);
      const auto t1 = clk::now();
      if (rep < 0)
        continue;
      pt.smp.measured = std::move(r.counters);
      pt.t.push_back(std::chrono::duration<double>(t1 - t0).count());
    }

  for (auto& pt : points) {
    std::nth_element(pt.t.begin(), pt.t.begin() + pt.t.size() / 2, pt.t.end());
    pt.smp.seconds = pt.t[pt.t.size() / 2];
    if (pt.smp.seconds < 100 * out.timer_resolution)
    {
      char res[32];
      std::snprintf(res, sizeof res, "%.3g", out.timer_resolution);
      out.warnings.push_back(std::string("timer resolution ") + res +
                             " s is coarse for grid point (|A|=" + std::to_string(pt.smp.len_A) +
                             ", |M|=" + std::to_string(pt.smp.len_M) + ")");
    }
    out.samples.push_back(std::move(pt.smp));
  }
  return out;
}

// Message-only grid up to 64 KiB for the wall-clock fit.
inline ExperimentConfig
default_time_config(const AlgorithmId& alg, int repetitions = 31)
{
  return { alg, { 0 }, { 0, 1024, 4096, 8192, 16384, 32768, 49152, 65536 }, repetitions,
           ExperimentMode::Time };
}

}
