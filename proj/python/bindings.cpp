// Python bindings for the inflated unit-Lindley library. Everything random
// takes an explicit seed; fit and comparison results come back as plain
// dicts mirroring the JSON schema of the CLI.

#include <optional>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ulinf/competitors.hpp"
#include "ulinf/data_io.hpp"
#include "ulinf/inference.hpp"
#include "ulinf/model_selection.hpp"
#include "ulinf/simulation.hpp"
#include "ulinf/special_fn.hpp"

namespace py = pybind11;
using namespace ulinf;

namespace {

SampleMode mode_from_string(const std::string& mode) {
  if (mode == "mixture") return SampleMode::Mixture;
  if (mode == "stratified") return SampleMode::Stratified;
  throw std::domain_error("mode must be 'mixture' or 'stratified'");
}

py::dict fit_to_dict(const FitResult& fit) {
  py::dict estimates, std_errors, conf_intervals, derived;
  for (const auto& [name, value] : fit.estimates) estimates[name.c_str()] = value;
  for (const auto& [name, value] : fit.std_errors) std_errors[name.c_str()] = value;
  for (const auto& [name, iv] : fit.conf_intervals) {
    conf_intervals[name.c_str()] = py::make_tuple(iv.lo, iv.hi);
  }
  for (const auto& [name, value] : fit.derived) derived[name.c_str()] = value;
  py::dict out;
  out["model"] = model_name(fit.model);
  out["estimates"] = estimates;
  out["std_errors"] = std_errors;
  out["conf_intervals"] = conf_intervals;
  out["derived"] = derived;
  out["loglik"] = fit.loglik;
  out["aic"] = fit.aic;
  out["bic"] = fit.bic;
  out["n"] = fit.n;
  out["param_count"] = fit.param_count;
  out["level"] = fit.level;
  return out;
}

py::dict report_to_dict(const ComparisonReport& report) {
  py::list fits;
  for (const auto& slot : report.fits) {
    if (slot.ok()) {
      fits.append(fit_to_dict(*slot.fit));
    } else {
      py::dict failed;
      failed["model"] = model_name(slot.model);
      failed["error"] = slot.failure;
      fits.append(failed);
    }
  }
  const auto names = [](const std::vector<Model>& models) {
    py::list out;
    for (const Model m : models) out.append(model_name(m));
    return out;
  };
  py::dict out;
  out["fits"] = fits;
  out["ranking_aic"] = names(report.ranking_aic);
  out["ranking_bic"] = names(report.ranking_bic);
  out["best_aic"] = report.best_aic ? py::object(py::str(model_name(*report.best_aic)))
                                    : py::object(py::none());
  out["best_bic"] = report.best_bic ? py::object(py::str(model_name(*report.best_bic)))
                                    : py::object(py::none());
  return out;
}

}  // namespace

PYBIND11_MODULE(_ulinf, m) {
  m.doc() = "Inflated unit-Lindley modeling of fractional data on [0,1]";

  py::class_<UnitLindley>(m, "UnitLindley")
      .def(py::init<double>(), py::arg("theta"))
      .def_property_readonly("theta", &UnitLindley::theta)
      .def("pdf", &UnitLindley::pdf, py::arg("y"))
      .def("log_pdf", &UnitLindley::log_pdf, py::arg("y"))
      .def("cdf", &UnitLindley::cdf, py::arg("y"))
      .def("quantile", &UnitLindley::quantile, py::arg("u"))
      .def("moment",
           [](const UnitLindley& self, unsigned r) { return self.moment(r); },
           py::arg("r"))
      .def("mean", &UnitLindley::mean)
      .def("variance", &UnitLindley::variance)
      .def(
          "sample",
          [](const UnitLindley& self, std::size_t n, std::uint64_t seed) {
            Rng rng(seed);
            return self.sample(n, rng);
          },
          py::arg("n"), py::arg("seed"));

  py::class_<UlinfDistribution>(m, "UlinfDistribution")
      .def(py::init([](double alpha, double p, double theta) {
             return UlinfDistribution(UlinfParams(alpha, p, theta));
           }),
           py::arg("alpha"), py::arg("p"), py::arg("theta"))
      .def_property_readonly("alpha",
                             [](const UlinfDistribution& d) { return d.params().alpha; })
      .def_property_readonly("p",
                             [](const UlinfDistribution& d) { return d.params().p; })
      .def_property_readonly("theta",
                             [](const UlinfDistribution& d) { return d.params().theta; })
      .def("density",
           [](const UlinfDistribution& d, double value) { return d.density(value); },
           py::arg("value"))
      .def("cdf", &UlinfDistribution::cdf, py::arg("y"))
      .def("moment", &UlinfDistribution::moment, py::arg("r"))
      .def("mean_variance", &UlinfDistribution::mean_variance)
      .def(
          "sample",
          [](const UlinfDistribution& d, std::size_t n, std::uint64_t seed,
             const std::string& mode) {
            Rng rng(seed);
            return d.sample(n, rng, mode_from_string(mode));
          },
          py::arg("n"), py::arg("seed"), py::arg("mode") = "mixture");

  py::class_<PartitionedSample>(m, "PartitionedSample")
      .def_readonly("n", &PartitionedSample::n)
      .def_readonly("t1", &PartitionedSample::t1)
      .def_readonly("t2", &PartitionedSample::t2)
      .def_readonly("t_y", &PartitionedSample::t_y)
      .def_readonly("interior", &PartitionedSample::interior);

  m.def("partition",
        [](const std::vector<double>& values) { return partition(values); },
        py::arg("values"));

  m.def(
      "mle",
      [](const std::vector<double>& values) {
        const MleEstimates est = mle(partition(values));
        py::dict out;
        out["alpha"] = est.alpha;
        out["p"] = est.p;
        out["theta"] = est.theta ? py::object(py::float_(*est.theta))
                                 : py::object(py::none());
        return out;
      },
      py::arg("values"));

  m.def(
      "loglik",
      [](double alpha, double p, double theta, const std::vector<double>& values) {
        return loglik(UlinfParams(alpha, p, theta), partition(values));
      },
      py::arg("alpha"), py::arg("p"), py::arg("theta"), py::arg("values"));

  m.def(
      "fisher_information",
      [](double alpha, double p, double theta, std::size_t n, std::size_t nc) {
        const FisherInfo info = fisher_information(UlinfParams(alpha, p, theta), n, nc);
        py::dict out;
        out["alpha"] = info.k_alpha;
        out["p"] = info.k_p;
        out["theta"] = info.k_theta;
        return out;
      },
      py::arg("alpha"), py::arg("p"), py::arg("theta"), py::arg("n"), py::arg("nc"));

  m.def(
      "wald_intervals",
      [](double alpha, double p, double theta, std::size_t n, std::size_t nc,
         double level) {
        const UlinfParams params(alpha, p, theta);
        const auto intervals =
            wald_intervals(params, fisher_information(params, n, nc), level);
        py::dict out;
        for (const auto& [name, iv] : intervals) {
          out[name.c_str()] = py::make_tuple(iv.lo, iv.hi);
        }
        return out;
      },
      py::arg("alpha"), py::arg("p"), py::arg("theta"), py::arg("n"),
      py::arg("nc"), py::arg("level") = 0.95);

  m.def(
      "fit",
      [](const std::vector<double>& values, const std::string& model, double level) {
        const PartitionedSample parts = partition(values);
        if (model == "ulinf") return fit_to_dict(ulinf_fit(parts, level));
        if (model == "beinf") return fit_to_dict(beinf_fit(parts, level));
        if (model == "zoik") return fit_to_dict(zoik_fit(parts, level));
        throw std::domain_error("model must be 'ulinf', 'beinf' or 'zoik'");
      },
      py::arg("values"), py::arg("model") = "ulinf", py::arg("level") = 0.95);

  m.def(
      "compare",
      [](const std::vector<double>& values, double level) {
        return report_to_dict(compare(values, level));
      },
      py::arg("values"), py::arg("level") = 0.95);

  m.def(
      "run_simulation",
      [](double alpha, double p, double theta, const std::vector<std::size_t>& sizes,
         std::size_t replications, const std::string& mode, std::uint64_t seed,
         unsigned threads) {
        SimDesign design{UlinfParams(alpha, p, theta)};
        design.sample_sizes = sizes;
        design.replications = replications;
        design.mode = mode_from_string(mode);
        design.seed = seed;
        design.threads = threads;
        const SimulationReport report = run_simulation(design);
        py::list results;
        for (const auto& size_result : report.results) {
          py::dict cells;
          for (std::size_t k = 0; k < kEstimands.size(); ++k) {
            const SimCell& cell = size_result.cells[k];
            py::dict entry;
            entry["mean_estimate"] = cell.mean_estimate;
            entry["bias"] = cell.bias;
            entry["relative_bias"] = cell.relative_bias;
            entry["mse"] = cell.mse;
            cells[estimand_name(kEstimands[k]).c_str()] = entry;
          }
          py::dict row;
          row["n"] = size_result.sample_size;
          row["used"] = size_result.used_replications;
          row["dropped"] = size_result.dropped_replications;
          row["cells"] = cells;
          results.append(row);
        }
        py::dict out;
        out["truth"] =
            py::make_tuple(report.truth_values[0], report.truth_values[1],
                           report.truth_values[2]);
        out["true_mean"] = report.truth_values[3];
        out["true_variance"] = report.truth_values[4];
        out["results"] = results;
        out["csv"] = report_to_csv(report);
        out["text"] = report_to_text(report);
        return out;
      },
      py::arg("alpha"), py::arg("p"), py::arg("theta"),
      py::arg("sizes") = std::vector<std::size_t>{50, 100, 200, 500, 1000},
      py::arg("replications") = 10000, py::arg("mode") = "stratified",
      py::arg("seed") = 1, py::arg("threads") = 0);

  m.def("elephants", [] { return elephants(); });
  m.def(
      "load", [](const std::string& path) { return load(path).values; },
      py::arg("path"));
  m.def(
      "generate_pseudo",
      [](std::uint64_t seed, std::size_t zeros, std::size_t ones,
         std::size_t interior, double theta) {
        return generate_pseudo(seed, zeros, ones, interior, theta).values;
      },
      py::arg("seed") = 99, py::arg("zeros") = 30, py::arg("ones") = 50,
      py::arg("interior") = 220, py::arg("theta") = 1.444589);

  m.def("exp_integral_e1", &exp_integral_e1, py::arg("x"));
  m.def("norm_quantile", &norm_quantile, py::arg("p"));

  m.attr("__version__") = "0.1.0";
}
