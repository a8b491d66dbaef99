#include <doctest.h>

#include <cmath>
#include <cstring>

#include "ulinf/simulation.hpp"

using namespace ulinf;

TEST_CASE("seeded runs are bit-identical, serial or parallel") {
  SimDesign design{UlinfParams(0.25, 0.4, 1.5)};
  design.sample_sizes = {50, 100};
  design.replications = 64;
  design.seed = 7;

  design.threads = 1;
  const SimulationReport serial = run_simulation(design);
  const SimulationReport serial2 = run_simulation(design);
  design.threads = 4;
  const SimulationReport parallel = run_simulation(design);

  CHECK(report_to_csv(serial) == report_to_csv(serial2));
  CHECK(report_to_csv(serial) == report_to_csv(parallel));
  for (std::size_t s = 0; s < serial.results.size(); ++s) {
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(serial.results[s].cells[k].mean_estimate ==
            parallel.results[s].cells[k].mean_estimate);
      CHECK(serial.results[s].cells[k].mse == parallel.results[s].cells[k].mse);
    }
  }
}

TEST_CASE("single-replication run is deterministic") {
  SimDesign design{UlinfParams(0.3, 0.5, 2.0)};
  design.sample_sizes = {50};
  design.replications = 1;
  design.seed = 12345;
  const std::string a = report_to_csv(run_simulation(design));
  const std::string b = report_to_csv(run_simulation(design));
  CHECK(a == b);
}

TEST_CASE("MSE shrinks with the sample size at both reference settings") {
  for (const double alpha : {0.25, 0.5}) {
    // stratified mode: alpha-hat = round(alpha*n)/n is deterministic, so its
    // MSE can be identically zero; the random estimands must shrink strictly
    SimDesign design{UlinfParams(alpha, 0.4, 1.5)};
    design.sample_sizes = {50, 1000};
    design.replications = 2000;
    design.seed = 99;
    const SimulationReport report = run_simulation(design);
    CHECK(report.results[1].cells[0].mse <= report.results[0].cells[0].mse);
    for (std::size_t k = 1; k < 5; ++k) {
      CHECK(report.results[1].cells[k].mse < report.results[0].cells[k].mse);
    }

    SimDesign mixture{UlinfParams(alpha, 0.4, 1.5)};
    mixture.sample_sizes = {50, 1000};
    mixture.replications = 2000;
    mixture.mode = SampleMode::Mixture;
    mixture.seed = 99;
    const SimulationReport mixed = run_simulation(mixture);
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(mixed.results[1].cells[k].mse < mixed.results[0].cells[k].mse);
    }
  }
}

TEST_CASE("alpha-hat bias stays inside the binomial band (mixture mode)") {
  SimDesign design{UlinfParams(0.25, 0.4, 1.5)};
  design.sample_sizes = {50, 200};
  design.replications = 4000;
  design.mode = SampleMode::Mixture;
  design.seed = 31;
  const SimulationReport report = run_simulation(design);
  for (const auto& size_result : report.results) {
    const double band =
        3.0 * std::sqrt(0.25 * 0.75 /
                        (static_cast<double>(size_result.sample_size) *
                         static_cast<double>(size_result.used_replications)));
    CHECK(std::abs(size_result.cells[0].bias) <= band);
  }
}

TEST_CASE("relative bias is bias over truth") {
  SimDesign design{UlinfParams(0.25, 0.4, 1.5)};
  design.sample_sizes = {100};
  design.replications = 500;
  design.seed = 5;
  const SimulationReport report = run_simulation(design);
  const auto& cells = report.results[0].cells;
  CHECK(cells[1].relative_bias ==
        doctest::Approx(cells[1].bias / 1.5).epsilon(1e-14));
  CHECK(cells[2].relative_bias ==
        doctest::Approx(cells[2].bias / 0.4).epsilon(1e-14));
}

TEST_CASE("mse is at least bias squared") {
  SimDesign design{UlinfParams(0.25, 0.4, 1.5)};
  design.sample_sizes = {50, 100};
  design.replications = 1000;
  design.seed = 62;
  const SimulationReport report = run_simulation(design);
  for (const auto& size_result : report.results) {
    for (const auto& cell : size_result.cells) {
      CHECK(cell.mse >= cell.bias * cell.bias - 1e-12);
    }
  }
}

TEST_CASE("replications without interior observations are dropped") {
  // alpha = 1: every stratified sample is all endpoints, so every
  // replication lacks interior points and theta is never estimable
  SimDesign design{UlinfParams(1.0, 0.4, 1.5)};
  design.sample_sizes = {10};
  design.replications = 25;
  design.seed = 3;
  const SimulationReport report = run_simulation(design);
  CHECK(report.results[0].dropped_replications == 25);
  CHECK(report.results[0].used_replications == 0);
  CHECK(std::isnan(report.results[0].cells[1].mean_estimate));

  // mixture mode with small n drops only occasionally
  SimDesign mixture{UlinfParams(0.9, 0.4, 1.5)};
  mixture.sample_sizes = {2};
  mixture.replications = 400;
  mixture.mode = SampleMode::Mixture;
  mixture.seed = 4;
  const SimulationReport mixed = run_simulation(mixture);
  CHECK(mixed.results[0].dropped_replications > 0);
  CHECK(mixed.results[0].used_replications > 0);
  CHECK((mixed.results[0].used_replications +
         mixed.results[0].dropped_replications) == 400);
}

TEST_CASE("csv layout matches the reference table shape") {
  SimDesign design{UlinfParams(0.25, 0.4, 1.5)};
  design.sample_sizes = {50, 100, 200, 500, 1000};
  design.replications = 5;
  design.seed = 8;
  const std::string csv = report_to_csv(run_simulation(design));
  CHECK(csv.rfind(",50,100,200,500,1000\n", 0) == 0);
  CHECK(csv.find("Bias.alpha,") != std::string::npos);
  CHECK(csv.find("MSE.theta,") != std::string::npos);
  CHECK(csv.find("p.est,") != std::string::npos);
  CHECK(csv.find("mse.V,") != std::string::npos);
  // 1 header + 15 rows
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 16);
}

TEST_CASE("empty size list produces a header-only table") {
  SimDesign design{UlinfParams(0.25, 0.4, 1.5)};
  design.sample_sizes = {};
  design.replications = 10;
  design.seed = 1;
  const std::string csv = report_to_csv(run_simulation(design));
  CHECK(csv.substr(0, 1) == "\n");  // empty header row, no size columns
  CHECK(csv.find("Bias.alpha\n") != std::string::npos);
  CHECK(csv.find("mse.V\n") != std::string::npos);
}

TEST_CASE("text rendering carries metadata and relative bias") {
  SimDesign design{UlinfParams(0.25, 0.4, 1.5)};
  design.sample_sizes = {50};
  design.replications = 10;
  design.seed = 21;
  const std::string text = report_to_text(run_simulation(design));
  CHECK(text.find("mode=stratified") != std::string::npos);
  CHECK(text.find("RelBias.theta") != std::string::npos);
  CHECK(text.find("dropped") != std::string::npos);
  CHECK(text.find("n=50") != std::string::npos);
}

TEST_CASE("design validation") {
  SimDesign design{UlinfParams(0.25, 0.4, 1.5)};
  design.replications = 0;
  CHECK_THROWS_AS(static_cast<void>(run_simulation(design)), std::domain_error);
  SimDesign tiny{UlinfParams(0.25, 0.4, 1.5)};
  tiny.sample_sizes = {1};
  CHECK_THROWS_AS(static_cast<void>(run_simulation(tiny)), std::domain_error);
}
