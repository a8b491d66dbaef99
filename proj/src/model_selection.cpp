#include "ulinf/model_selection.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <nlohmann/json.hpp>

namespace ulinf {

namespace {

using nlohmann::json;

json fit_to_json(const FitResult& fit) {
  json estimates = json::object();
  for (const auto& [name, value] : fit.estimates) estimates[name] = value;
  json std_errors = json::object();
  for (const auto& [name, value] : fit.std_errors) std_errors[name] = value;
  json intervals = json::object();
  for (const auto& [name, iv] : fit.conf_intervals) {
    intervals[name] = json::array({iv.lo, iv.hi});
  }
  json derived = json::object();
  for (const auto& [name, value] : fit.derived) derived[name] = value;
  return json{{"model", model_name(fit.model)},
              {"estimates", estimates},
              {"std_errors", std_errors},
              {"conf_intervals", intervals},
              {"derived", derived},
              {"loglik", fit.loglik},
              {"aic", fit.aic},
              {"bic", fit.bic},
              {"n", fit.n},
              {"param_count", fit.param_count},
              {"level", fit.level}};
}

}  // namespace

const FitOutcome& ComparisonReport::outcome(Model model) const {
  for (const auto& slot : fits) {
    if (slot.model == model) return slot;
  }
  throw std::logic_error("ComparisonReport: unknown model slot");
}

ComparisonReport compare(std::span<const double> sample, double level) {
  if (sample.empty()) throw std::domain_error("compare: empty sample");
  const PartitionedSample parts = partition(sample);

  ComparisonReport report;
  const auto attempt = [&](Model model, auto&& fitter) {
    FitOutcome slot;
    slot.model = model;
    try {
      slot.fit = fitter();
    } catch (const std::exception& err) {
      slot.failure = err.what();
    }
    report.fits.push_back(std::move(slot));
  };
  attempt(Model::ULINF, [&] { return ulinf_fit(parts, level); });
  attempt(Model::BEINF, [&] { return beinf_fit(parts, level); });
  attempt(Model::ZOIK, [&] { return zoik_fit(parts, level); });

  const auto rank_by = [&](auto criterion) {
    std::vector<const FitOutcome*> ok;
    for (const auto& slot : report.fits) {
      if (slot.ok()) ok.push_back(&slot);
    }
    std::sort(ok.begin(), ok.end(), [&](const FitOutcome* l, const FitOutcome* r) {
      const double cl = criterion(*l->fit), cr = criterion(*r->fit);
      if (cl != cr) return cl < cr;
      if (l->fit->param_count != r->fit->param_count) {
        return l->fit->param_count < r->fit->param_count;
      }
      return model_name(l->model) < model_name(r->model);
    });
    std::vector<Model> order;
    for (const auto* slot : ok) order.push_back(slot->model);
    return order;
  };
  report.ranking_aic = rank_by([](const FitResult& f) { return f.aic; });
  report.ranking_bic = rank_by([](const FitResult& f) { return f.bic; });
  if (!report.ranking_aic.empty()) report.best_aic = report.ranking_aic.front();
  if (!report.ranking_bic.empty()) report.best_bic = report.ranking_bic.front();
  return report;
}

std::vector<CdfGridRow> ecdf_and_fitted_cdfs(std::span<const double> sample,
                                             const ComparisonReport& report,
                                             std::size_t grid_size) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());

  const auto ecdf = [&](double y) {
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), y);
    return static_cast<double>(it - sorted.begin()) / n;
  };

  std::optional<UlinfDistribution> ulinf_dist;
  std::optional<BeinfParams> beinf_params;
  std::optional<ZoikParams> zoik_params;
  if (const auto& slot = report.outcome(Model::ULINF); slot.ok()) {
    const auto& e = slot.fit->estimates;
    ulinf_dist.emplace(UlinfParams(e.at("alpha"), e.at("p"), e.at("theta")));
  }
  if (const auto& slot = report.outcome(Model::BEINF); slot.ok()) {
    const auto& e = slot.fit->estimates;
    beinf_params.emplace(e.at("alpha"), e.at("gamma"), e.at("a"), e.at("b"));
  }
  if (const auto& slot = report.outcome(Model::ZOIK); slot.ok()) {
    const auto& e = slot.fit->estimates;
    zoik_params.emplace(e.at("lambda"), e.at("p"), e.at("a"), e.at("b"));
  }

  std::vector<CdfGridRow> grid;
  if (grid_size == 0) return grid;
  grid.reserve(grid_size);
  const std::size_t segments = std::max<std::size_t>(grid_size - 1, 1);
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double y = (grid_size == 1)
                         ? 0.0
                         : static_cast<double>(i) / static_cast<double>(segments);
    CdfGridRow row{y, ecdf(y), nan, nan, nan};
    if (ulinf_dist) row.cdf_ulinf = ulinf_dist->cdf(y);
    if (beinf_params) row.cdf_beinf = beinf_cdf(y, *beinf_params);
    if (zoik_params) row.cdf_zoik = zoik_cdf(y, *zoik_params);
    grid.push_back(row);
  }
  return grid;
}

std::string cdf_grid_to_csv(const std::vector<CdfGridRow>& grid) {
  std::string out = "y,ecdf,cdf_ulinf,cdf_beinf,cdf_zoik\n";
  char buffer[160];
  for (const auto& row : grid) {
    std::snprintf(buffer, sizeof(buffer), "%.10g,%.10g,%.10g,%.10g,%.10g\n",
                  row.y, row.ecdf, row.cdf_ulinf, row.cdf_beinf, row.cdf_zoik);
    out += buffer;
  }
  return out;
}

std::string to_json(const FitResult& fit) { return fit_to_json(fit).dump(2); }

std::string to_json(const ComparisonReport& report) {
  json fits = json::array();
  for (const auto& slot : report.fits) {
    if (slot.ok()) {
      fits.push_back(fit_to_json(*slot.fit));
    } else {
      fits.push_back(json{{"model", model_name(slot.model)},
                          {"error", slot.failure}});
    }
  }
  const auto names = [](const std::vector<Model>& models) {
    json arr = json::array();
    for (const Model m : models) arr.push_back(model_name(m));
    return arr;
  };
  json doc{{"fits", fits},
           {"ranking_aic", names(report.ranking_aic)},
           {"ranking_bic", names(report.ranking_bic)}};
  doc["best_aic"] = report.best_aic ? json(model_name(*report.best_aic)) : json();
  doc["best_bic"] = report.best_bic ? json(model_name(*report.best_bic)) : json();
  return doc.dump(2);
}

}  // namespace ulinf
