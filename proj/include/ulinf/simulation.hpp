#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ulinf/inflated_mixture.hpp"

namespace ulinf {

/// Monte Carlo design for the estimator-quality study. Stratified sampling
/// fixes the endpoint count per replication (making alpha-hat deterministic)
/// and is the default; Mixture is the i.i.d. alternative.
struct SimDesign {
  UlinfParams truth;
  std::vector<std::size_t> sample_sizes = {50, 100, 200, 500, 1000};
  std::size_t replications = 10000;
  SampleMode mode = SampleMode::Stratified;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Tracked estimands: the three parameter MLEs plus the plug-in mean and
/// variance of the fitted model.
enum class Estimand { Alpha, Theta, P, Mean, Variance };
inline constexpr std::array<Estimand, 5> kEstimands = {
    Estimand::Alpha, Estimand::Theta, Estimand::P, Estimand::Mean,
    Estimand::Variance};

std::string estimand_name(Estimand estimand);

struct SimCell {
  double mean_estimate = 0.0;
  double bias = 0.0;           // mean_estimate - truth
  double relative_bias = 0.0;  // bias / truth (NaN if the truth is 0)
  double mse = 0.0;
};

struct SimSizeResult {
  std::size_t sample_size = 0;
  std::size_t used_replications = 0;
  std::size_t dropped_replications = 0;  // no interior points: theta undefined
  std::array<SimCell, 5> cells;
};

struct SimulationReport {
  SimDesign design;
  std::array<double, 5> truth_values;  // alpha, theta, p, mean, variance
  std::vector<SimSizeResult> results;
};

/// Run the full study. Replication r at sample size n draws from the stream
/// keyed by (seed, n, r), so parallel and serial execution produce identical
/// reports; aggregation is a deterministic reduction in replication order.
/// Replications whose sample has no interior values are dropped and counted.
SimulationReport run_simulation(const SimDesign& design);

/// 15-row CSV: Bias/MSE/estimate rows for the three parameters, then
/// estimate/bias/mse rows for the plug-in mean and variance.
std::string report_to_csv(const SimulationReport& report);

/// Aligned text table; also carries the relative-bias rows and run metadata.
std::string report_to_text(const SimulationReport& report);

}  // namespace ulinf
