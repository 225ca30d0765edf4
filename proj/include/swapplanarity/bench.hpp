#pragma once

// Point-generation experiments: cost against the restart threshold, and how
// many points end up strictly inside the convex hull.

#include <cstdint>
#include <string>
#include <vector>

#include "swapplanarity/geom.hpp"

namespace swapplanarity {

// Run `rep` of cell `cell` uses seed base_seed + cell * stride + rep.
struct SeedSchedule {
  std::uint64_t base_seed = 1;
  std::uint64_t stride = 1u << 20;
  std::uint64_t seed(std::size_t cell, std::size_t rep) const noexcept {
    return base_seed + cell * stride + rep;
  }
};

struct ThresholdSweepConfig {
  std::vector<int> n_values;
  std::int64_t delta = 1966;
  std::vector<std::int64_t> thresholds;
  int seeds_per_cell = 100;
  int max_restarts = 1000;
  std::int64_t grid_size = kDefaultGridSize;
  SeedSchedule seeds;
};

struct ThresholdRow {
  int n = 0;
  std::int64_t delta = 0;
  std::int64_t threshold = 0;
  std::uint64_t seed = 0;
  std::int64_t total_attempts = 0;
  int restarts = 0;
  bool success = false;  // false rows are censored: attempts is a lower bound
};

/// One row per (n, threshold, seed), cells ordered n-major. Throws
/// std::invalid_argument for an empty threshold list.
std::vector<ThresholdRow> threshold_sweep(const ThresholdSweepConfig& config);

struct ThresholdSummary {
  int n = 0;
  std::int64_t threshold = 0;
  double mean_attempts = 0;    // over every run, censored ones included
  double median_attempts = 0;
  double mean_restarts = 0;
  double median_restarts = 0;
  int failures = 0;
};

std::vector<ThresholdSummary> summarize(const std::vector<ThresholdRow>& rows);

struct HullStatisticsConfig {
  std::vector<int> n_values;
  std::vector<std::int64_t> delta_values;
  int instances_per_cell = 100;
  std::int64_t threshold = 500;
  int max_restarts = 1000;
  std::int64_t grid_size = kDefaultGridSize;
  SeedSchedule seeds;
};

struct HullRow {
  int n = 0;
  std::int64_t delta = 0;
  double mean_interior = 0;  // over successful runs; 0 if none succeeded
  double sd_interior = 0;    // sample standard deviation
  int failures = 0;
};

/// instances_per_cell generation runs per (n, delta), cells ordered n-major.
std::vector<HullRow> hull_statistics(const HullStatisticsConfig& config);

std::string to_csv(const std::vector<ThresholdRow>& rows);
std::string to_csv(const std::vector<HullRow>& rows);

}  // namespace swapplanarity
