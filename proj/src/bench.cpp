#include "swapplanarity/bench.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "swapplanarity/pointgen.hpp"

namespace swapplanarity {
namespace {

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0;
  double sum = 0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double median(std::vector<double> xs) {
  if (xs.empty()) return 0;
  std::sort(xs.begin(), xs.end());
  const std::size_t h = xs.size() / 2;
  return xs.size() % 2 ? xs[h] : (xs[h - 1] + xs[h]) / 2;
}

double sample_sd(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0;
  const double mu = mean(xs);
  double ss = 0;
  for (double x : xs) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

std::vector<ThresholdRow> threshold_sweep(const ThresholdSweepConfig& config) {
  if (config.thresholds.empty()) throw std::invalid_argument("threshold_sweep: no thresholds");
  std::vector<ThresholdRow> rows;
  std::size_t cell = 0;
  for (int n : config.n_values) {
    for (std::int64_t threshold : config.thresholds) {
      for (int rep = 0; rep < config.seeds_per_cell; ++rep) {
        PointGenParams p;
        p.n = n;
        p.delta = config.delta;
        p.grid_size = config.grid_size;
        p.threshold = threshold;
        p.max_restarts = config.max_restarts;
        p.seed = config.seeds.seed(cell, static_cast<std::size_t>(rep));
        const auto result = generate_points(p);
        rows.push_back({n, config.delta, threshold, p.seed, result.stats.total_attempts,
                        result.stats.restarts, result.ok()});
      }
      ++cell;
    }
  }
  return rows;
}

std::vector<ThresholdSummary> summarize(const std::vector<ThresholdRow>& rows) {
  struct Acc {
    std::vector<double> attempts, restarts;
    int failures = 0;
  };
  std::vector<std::pair<int, std::int64_t>> order;
  std::map<std::pair<int, std::int64_t>, Acc> cells;
  for (const auto& r : rows) {
    const auto key = std::pair{r.n, r.threshold};
    if (!cells.contains(key)) order.push_back(key);
    auto& acc = cells[key];
    acc.attempts.push_back(static_cast<double>(r.total_attempts));
    acc.restarts.push_back(r.restarts);
    if (!r.success) ++acc.failures;
  }
  std::vector<ThresholdSummary> out;
  for (const auto& key : order) {
    const auto& acc = cells[key];
    out.push_back({key.first, key.second, mean(acc.attempts), median(acc.attempts),
                   mean(acc.restarts), median(acc.restarts), acc.failures});
  }
  return out;
}

std::vector<HullRow> hull_statistics(const HullStatisticsConfig& config) {
  std::vector<HullRow> rows;
  std::size_t cell = 0;
  for (int n : config.n_values) {
    for (std::int64_t delta : config.delta_values) {
      std::vector<double> interior;
      int failures = 0;
      for (int rep = 0; rep < config.instances_per_cell; ++rep) {
        PointGenParams p;
        p.n = n;
        p.delta = delta;
        p.grid_size = config.grid_size;
        p.threshold = config.threshold;
        p.max_restarts = config.max_restarts;
        p.seed = config.seeds.seed(cell, static_cast<std::size_t>(rep));
        const auto result = generate_points(p);
        if (result.ok())
          interior.push_back(result.stats.interior_count);
        else
          ++failures;
      }
      rows.push_back({n, delta, mean(interior), sample_sd(interior), failures});
      ++cell;
    }
  }
  return rows;
}

std::string to_csv(const std::vector<ThresholdRow>& rows) {
  std::ostringstream os;
  os << "n,delta,threshold,seed,total_attempts,restarts,success\n";
  for (const auto& r : rows)
    os << r.n << ',' << r.delta << ',' << r.threshold << ',' << r.seed << ',' << r.total_attempts
       << ',' << r.restarts << ',' << (r.success ? 1 : 0) << '\n';
  return os.str();
}

std::string to_csv(const std::vector<HullRow>& rows) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed;
  os << "n,delta,mean_interior,sd_interior,failures\n";
  for (const auto& r : rows)
    os << r.n << ',' << r.delta << ',' << r.mean_interior << ',' << r.sd_interior << ','
       << r.failures << '\n';
  return os.str();
}

}  // namespace swapplanarity
