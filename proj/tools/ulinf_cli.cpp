// Command line front end: fit, compare, simulate, sample and gen-data
// subcommands over the inflated unit-Lindley library. Exit codes: 0 success,
// 1 runtime or fit failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ulinf/data_io.hpp"
#include "ulinf/model_selection.hpp"
#include "ulinf/simulation.hpp"

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

std::string format10(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::runtime_error("cannot open output file: " + output_path);
  out << text;
}

std::string render_fit_text(const ulinf::FitResult& fit) {
  std::ostringstream out;
  out << "model: " << ulinf::model_name(fit.model) << "  (n=" << fit.n
      << ", k=" << fit.param_count << ")\n";
  out << "parameter      estimate        std.error       " << format10(fit.level * 100)
      << "% interval\n";
  for (const auto& [name, value] : fit.estimates) {
    out << "  " << name << std::string(name.size() < 11 ? 11 - name.size() : 1, ' ')
        << format10(value);
    if (fit.std_errors.count(name)) {
      const std::string se = format10(fit.std_errors.at(name));
      out << std::string(16 - std::min<std::size_t>(se.size(), 15), ' ') << se;
    } else {
      out << "               -";
    }
    if (fit.conf_intervals.count(name)) {
      const auto& iv = fit.conf_intervals.at(name);
      out << "   [" << format10(iv.lo) << ", " << format10(iv.hi) << "]";
    }
    out << "\n";
  }
  for (const auto& [name, value] : fit.derived) {
    out << "  " << name << " = " << format10(value) << "\n";
  }
  out << "loglik = " << format10(fit.loglik) << "\nAIC = " << format10(fit.aic)
      << "\nBIC = " << format10(fit.bic) << "\n";
  return out.str();
}

std::string render_fit_csv(const ulinf::FitResult& fit) {
  std::string out = "parameter,estimate,std_error,ci_lo,ci_hi\n";
  for (const auto& [name, value] : fit.estimates) {
    out += name + "," + format10(value);
    out += fit.std_errors.count(name) ? "," + format10(fit.std_errors.at(name)) : ",";
    if (fit.conf_intervals.count(name)) {
      const auto& iv = fit.conf_intervals.at(name);
      out += "," + format10(iv.lo) + "," + format10(iv.hi);
    } else {
      out += ",,";
    }
    out += "\n";
  }
  out += "loglik," + format10(fit.loglik) + ",,,\n";
  out += "aic," + format10(fit.aic) + ",,,\n";
  out += "bic," + format10(fit.bic) + ",,,\n";
  return out;
}

std::string render_compare_csv(const ulinf::ComparisonReport& report) {
  std::string out = "model,status,loglik,aic,bic,estimates\n";
  for (const auto& slot : report.fits) {
    out += ulinf::model_name(slot.model);
    if (slot.ok()) {
      const auto& fit = *slot.fit;
      out += ",ok," + format10(fit.loglik) + "," + format10(fit.aic) + "," +
             format10(fit.bic) + ",";
      bool first = true;
      for (const auto& [name, value] : fit.estimates) {
        out += (first ? "" : " ") + name + "=" + format10(value);
        first = false;
      }
    } else {
      out += ",failed,,,,";
    }
    out += "\n";
  }
  return out;
}

std::string render_compare_text(const ulinf::ComparisonReport& report) {
  std::ostringstream out;
  for (const auto& slot : report.fits) {
    if (slot.ok()) {
      out << render_fit_text(*slot.fit) << "\n";
    } else {
      out << "model: " << ulinf::model_name(slot.model)
          << "  fit failed: " << slot.failure << "\n\n";
    }
  }
  const auto list = [&](const std::vector<ulinf::Model>& ranking) {
    std::string names;
    for (const auto model : ranking) {
      if (!names.empty()) names += " < ";
      names += ulinf::model_name(model);
    }
    return names;
  };
  out << "ranking by AIC: " << list(report.ranking_aic) << "\n";
  out << "ranking by BIC: " << list(report.ranking_bic) << "\n";
  return out.str();
}

ulinf::SampleMode parse_mode(const std::string& mode) {
  if (mode == "mixture") return ulinf::SampleMode::Mixture;
  if (mode == "stratified") return ulinf::SampleMode::Stratified;
  throw CLI::ValidationError("--mode", "must be 'mixture' or 'stratified'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inflated unit-Lindley modeling of fractional data with point "
               "masses at 0 and 1"};
  app.require_subcommand(1);

  std::string output_path;
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  double level = 0.95;
  app.add_option("--output", output_path, "Write the report here instead of stdout");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", seed, "Random seed (all random subcommands are "
                                 "bit-reproducible under a fixed seed)");
  app.add_option("--level", level, "Confidence level for intervals")
      ->check(CLI::Range(1e-6, 1.0 - 1e-6));

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "Fit one model to a dataset");
  fit_cmd->fallthrough();
  std::string fit_data;
  std::string fit_model = "ulinf";
  fit_cmd->add_option("--data", fit_data, "Dataset path or embedded name")
      ->required();
  fit_cmd->add_option("--model", fit_model, "Model to fit")
      ->check(CLI::IsMember({"ulinf", "beinf", "zoik"}));

  // compare
  auto* compare_cmd =
      app.add_subcommand("compare", "Fit all three models and rank by AIC/BIC");
  compare_cmd->fallthrough();
  std::string compare_data;
  std::size_t cdf_grid = 0;
  std::string cdf_output = "cdf_grid.csv";
  compare_cmd->add_option("--data", compare_data, "Dataset path or embedded name")
      ->required();
  compare_cmd->add_option("--cdf-grid", cdf_grid,
                          "Also write an ECDF/fitted-CDF table with this many "
                          "grid points (0 = skip)");
  compare_cmd->add_option("--cdf-output", cdf_output,
                          "Where to write the CDF grid table");

  // simulate
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Monte Carlo bias/MSE study of the estimators");
  sim_cmd->fallthrough();
  double sim_alpha = 0.25, sim_p = 0.4, sim_theta = 1.5;
  std::vector<std::size_t> sim_sizes{50, 100, 200, 500, 1000};
  std::size_t sim_reps = 10000;
  std::string sim_mode = "stratified";
  unsigned sim_threads = 0;
  sim_cmd->add_option("--alpha", sim_alpha, "True mixing weight")->check(CLI::Range(0.0, 1.0));
  sim_cmd->add_option("--p", sim_p, "True Bernoulli one-probability")->check(CLI::Range(0.0, 1.0));
  sim_cmd->add_option("--theta", sim_theta, "True unit-Lindley parameter")
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--sizes", sim_sizes, "Sample sizes");
  sim_cmd->add_option("--reps", sim_reps, "Replications per sample size");
  sim_cmd->add_option("--mode", sim_mode, "Sampling mode")
      ->check(CLI::IsMember({"mixture", "stratified"}));
  sim_cmd->add_option("--threads", sim_threads, "Worker threads (0 = auto)");

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "Draw from the model");
  sample_cmd->fallthrough();
  double smp_alpha = 0.25, smp_p = 0.4, smp_theta = 1.5;
  std::size_t smp_n = 100;
  std::string smp_mode = "mixture";
  sample_cmd->add_option("--alpha", smp_alpha, "Mixing weight")->check(CLI::Range(0.0, 1.0));
  sample_cmd->add_option("--p", smp_p, "Bernoulli one-probability")->check(CLI::Range(0.0, 1.0));
  sample_cmd->add_option("--theta", smp_theta, "Unit-Lindley parameter")
      ->check(CLI::PositiveNumber);
  sample_cmd->add_option("--n", smp_n, "Number of draws");
  sample_cmd->add_option("--mode", smp_mode, "Sampling mode")
      ->check(CLI::IsMember({"mixture", "stratified"}));

  // gen-data
  auto* gen_cmd = app.add_subcommand("gen-data", "Write a pseudo dataset");
  gen_cmd->fallthrough();
  std::size_t gen_zeros = 30, gen_ones = 50, gen_interior = 220;
  double gen_theta = 1.444589;
  bool appendix_b = false;
  gen_cmd->add_option("--zeros", gen_zeros, "Number of zeros");
  gen_cmd->add_option("--ones", gen_ones, "Number of ones");
  gen_cmd->add_option("--interior", gen_interior, "Number of interior draws");
  gen_cmd->add_option("--theta", gen_theta, "Unit-Lindley parameter")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_flag("--appendix-b", appendix_b,
                    "Use the 20/190/60 layout instead of the default 30/220/50");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  try {
    if (*fit_cmd) {
      const ulinf::Dataset dataset = ulinf::load(fit_data);
      const ulinf::PartitionedSample parts = ulinf::partition(dataset.values);
      ulinf::FitResult fit;
      if (fit_model == "ulinf") {
        fit = ulinf::ulinf_fit(parts, level);
      } else if (fit_model == "beinf") {
        fit = ulinf::beinf_fit(parts, level);
      } else {
        fit = ulinf::zoik_fit(parts, level);
      }
      if (format == "json") {
        emit(ulinf::to_json(fit) + "\n", output_path);
      } else if (format == "csv") {
        emit(render_fit_csv(fit), output_path);
      } else {
        emit(render_fit_text(fit), output_path);
      }
    } else if (*compare_cmd) {
      const ulinf::Dataset dataset = ulinf::load(compare_data);
      const ulinf::ComparisonReport report = ulinf::compare(dataset.values, level);
      if (cdf_grid > 0) {
        const auto grid = ulinf::ecdf_and_fitted_cdfs(dataset.values, report, cdf_grid);
        std::ofstream out(cdf_output);
        if (!out) throw std::runtime_error("cannot open output file: " + cdf_output);
        out << ulinf::cdf_grid_to_csv(grid);
      }
      if (format == "json") {
        emit(ulinf::to_json(report) + "\n", output_path);
      } else if (format == "csv") {
        emit(render_compare_csv(report), output_path);
      } else {
        emit(render_compare_text(report), output_path);
      }
    } else if (*sim_cmd) {
      ulinf::SimDesign design{ulinf::UlinfParams(sim_alpha, sim_p, sim_theta)};
      design.sample_sizes = sim_sizes;
      design.replications = sim_reps;
      design.mode = parse_mode(sim_mode);
      design.seed = seed;
      design.threads = sim_threads;
      const ulinf::SimulationReport report = ulinf::run_simulation(design);
      if (format == "json") {
        json doc;
        doc["truth"] = {{"alpha", sim_alpha}, {"p", sim_p}, {"theta", sim_theta},
                        {"mean", report.truth_values[3]},
                        {"variance", report.truth_values[4]}};
        doc["mode"] = sim_mode;
        doc["replications"] = sim_reps;
        doc["seed"] = seed;
        doc["results"] = json::array();
        for (const auto& size_result : report.results) {
          json cells = json::object();
          for (std::size_t k = 0; k < ulinf::kEstimands.size(); ++k) {
            const auto& cell = size_result.cells[k];
            cells[ulinf::estimand_name(ulinf::kEstimands[k])] = {
                {"mean_estimate", cell.mean_estimate},
                {"bias", cell.bias},
                {"relative_bias", cell.relative_bias},
                {"mse", cell.mse}};
          }
          doc["results"].push_back({{"n", size_result.sample_size},
                                    {"used", size_result.used_replications},
                                    {"dropped", size_result.dropped_replications},
                                    {"cells", cells}});
        }
        emit(doc.dump(2) + "\n", output_path);
      } else if (format == "csv") {
        emit(ulinf::report_to_csv(report), output_path);
      } else {
        emit(ulinf::report_to_text(report), output_path);
      }
    } else if (*sample_cmd) {
      const ulinf::UlinfDistribution dist(
          ulinf::UlinfParams(smp_alpha, smp_p, smp_theta));
      ulinf::Rng rng(seed);
      const auto draws = dist.sample(smp_n, rng, parse_mode(smp_mode));
      std::string out;
      char buffer[40];
      for (const double y : draws) {
        std::snprintf(buffer, sizeof(buffer), "%.17g\n", y);
        out += buffer;
      }
      emit(out, output_path);
    } else if (*gen_cmd) {
      if (appendix_b) {
        gen_zeros = 20;
        gen_interior = 190;
        gen_ones = 60;
      }
      const ulinf::Dataset dataset =
          ulinf::generate_pseudo(seed, gen_zeros, gen_ones, gen_interior, gen_theta);
      if (output_path.empty()) {
        ulinf::write_csv(dataset, std::cout);
      } else {
        ulinf::write_csv(dataset, output_path);
      }
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
