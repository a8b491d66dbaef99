#include "ulinf/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <thread>

#include "ulinf/inference.hpp"

namespace ulinf {

std::string estimand_name(Estimand estimand) {
  switch (estimand) {
    case Estimand::Alpha: return "alpha";
    case Estimand::Theta: return "theta";
    case Estimand::P: return "p";
    case Estimand::Mean: return "E";
    case Estimand::Variance: return "V";
  }
  return "?";
}

namespace {

struct RepResult {
  std::array<double, 5> estimates;
  bool valid = false;
};

RepResult one_replication(const SimDesign& design, std::size_t n,
                          std::size_t rep) {
  Rng rng = Rng::substream(design.seed, static_cast<std::uint64_t>(n),
                           static_cast<std::uint64_t>(rep));
  const UlinfDistribution dist(design.truth);
  const std::vector<double> sample = dist.sample(n, rng, design.mode);
  const PartitionedSample parts = partition(sample);
  const MleEstimates est = mle(parts);
  RepResult result;
  if (!est.theta) return result;  // dropped
  const UlinfParams fitted(est.alpha, est.p, *est.theta);
  const auto [mean, variance] = UlinfDistribution(fitted).mean_variance();
  result.estimates = {est.alpha, *est.theta, est.p, mean, variance};
  result.valid = true;
  return result;
}

}  // namespace

SimulationReport run_simulation(const SimDesign& design) {
  if (design.replications < 1) {
    throw std::domain_error("run_simulation: replications must be >= 1");
  }
  for (const std::size_t n : design.sample_sizes) {
    if (n < 2) throw std::domain_error("run_simulation: sample sizes must be >= 2");
  }

  const auto [true_mean, true_variance] =
      UlinfDistribution(design.truth).mean_variance();
  SimulationReport report{design,
                          {design.truth.alpha, design.truth.theta,
                           design.truth.p, true_mean, true_variance},
                          {}};

  unsigned threads = design.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads,
                               static_cast<unsigned>(design.replications));

  for (const std::size_t n : design.sample_sizes) {
    std::vector<RepResult> reps(design.replications);
    if (threads <= 1) {
      for (std::size_t r = 0; r < design.replications; ++r) {
        reps[r] = one_replication(design, n, r);
      }
    } else {
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          for (std::size_t r = t; r < design.replications; r += threads) {
            reps[r] = one_replication(design, n, r);
          }
        });
      }
      for (auto& worker : pool) worker.join();
    }

    SimSizeResult size_result;
    size_result.sample_size = n;
    std::array<double, 5> sum{}, sum_dev{}, sum_sq{};
    for (const RepResult& rep : reps) {
      if (!rep.valid) {
        ++size_result.dropped_replications;
        continue;
      }
      ++size_result.used_replications;
      for (std::size_t k = 0; k < 5; ++k) {
        const double dev = rep.estimates[k] - report.truth_values[k];
        sum[k] += rep.estimates[k];
        sum_dev[k] += dev;
        sum_sq[k] += dev * dev;
      }
    }
    const double used = static_cast<double>(size_result.used_replications);
    for (std::size_t k = 0; k < 5; ++k) {
      SimCell& cell = size_result.cells[k];
      if (used > 0) {
        cell.mean_estimate = sum[k] / used;
        cell.bias = sum_dev[k] / used;
        cell.mse = sum_sq[k] / used;
      } else {
        cell.mean_estimate = cell.bias = cell.mse =
            std::numeric_limits<double>::quiet_NaN();
      }
      cell.relative_bias = (report.truth_values[k] != 0.0)
                               ? cell.bias / report.truth_values[k]
                               : std::numeric_limits<double>::quiet_NaN();
    }
    report.results.push_back(std::move(size_result));
  }
  return report;
}

namespace {

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

// Rows of the CSV table; each entry picks one statistic of one estimand.
// Index: estimand slot (alpha=0, theta=1, p=2, E=3, V=4).
struct RowSpec {
  const char* name;
  std::size_t estimand;
  double SimCell::*field;
};

constexpr std::size_t kRowCount = 15;

const RowSpec kRows[kRowCount] = {
    {"Bias.alpha", 0, &SimCell::bias},  {"Bias.theta", 1, &SimCell::bias},
    {"Bias.p", 2, &SimCell::bias},      {"MSE.alpha", 0, &SimCell::mse},
    {"MSE.theta", 1, &SimCell::mse},    {"MSE.p", 2, &SimCell::mse},
    {"alpha.est", 0, &SimCell::mean_estimate},
    {"theta.est", 1, &SimCell::mean_estimate},
    {"p.est", 2, &SimCell::mean_estimate},
    {"E_y", 3, &SimCell::mean_estimate}, {"bias.E", 3, &SimCell::bias},
    {"mse.E", 3, &SimCell::mse},         {"V_y", 4, &SimCell::mean_estimate},
    {"bias.V", 4, &SimCell::bias},       {"mse.V", 4, &SimCell::mse},
};

}  // namespace

std::string report_to_csv(const SimulationReport& report) {
  std::string out;
  for (const auto& size_result : report.results) {
    out += "," + std::to_string(size_result.sample_size);
  }
  out += "\n";
  for (const RowSpec& row : kRows) {
    out += row.name;
    for (const auto& size_result : report.results) {
      out += "," + format_number(size_result.cells[row.estimand].*row.field);
    }
    out += "\n";
  }
  return out;
}

std::string report_to_text(const SimulationReport& report) {
  std::ostringstream out;
  out << "Monte Carlo study: truth alpha=" << format_number(report.design.truth.alpha)
      << " p=" << format_number(report.design.truth.p)
      << " theta=" << format_number(report.design.truth.theta) << "\n";
  out << "mode="
      << (report.design.mode == SampleMode::Stratified ? "stratified" : "mixture")
      << " replications=" << report.design.replications
      << " seed=" << report.design.seed << "\n";
  out << "true mean=" << format_number(report.truth_values[3])
      << " true variance=" << format_number(report.truth_values[4]) << "\n\n";

  const std::size_t name_width = 14;
  const std::size_t col_width = 16;
  const auto pad_left = [](const std::string& text, std::size_t width) {
    return (text.size() >= width) ? text
                                  : std::string(width - text.size(), ' ') + text;
  };
  out << std::string(name_width, ' ');
  for (const auto& size_result : report.results) {
    out << pad_left("n=" + std::to_string(size_result.sample_size), col_width);
  }
  out << "\n";
  const auto emit_row = [&](const std::string& name, auto getter) {
    out << name;
    if (name.size() < name_width) out << std::string(name_width - name.size(), ' ');
    for (const auto& size_result : report.results) {
      out << pad_left(format_number(getter(size_result)), col_width);
    }
    out << "\n";
  };
  for (const RowSpec& row : kRows) {
    emit_row(row.name, [&](const SimSizeResult& r) { return r.cells[row.estimand].*row.field; });
  }
  out << "\n";
  for (std::size_t k = 0; k < kEstimands.size(); ++k) {
    emit_row("RelBias." + estimand_name(kEstimands[k]),
             [&](const SimSizeResult& r) { return r.cells[k].relative_bias; });
  }
  emit_row("dropped", [&](const SimSizeResult& r) {
    return static_cast<double>(r.dropped_replications);
  });
  return out.str();
}

}  // namespace ulinf
