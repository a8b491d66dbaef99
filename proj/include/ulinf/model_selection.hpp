#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ulinf/competitors.hpp"
#include "ulinf/inference.hpp"

namespace ulinf {

/// One comparison slot: either a successful fit or the failure message.
struct FitOutcome {
  Model model;
  std::optional<FitResult> fit;
  std::string failure;  // nonempty when fit is absent

  bool ok() const { return fit.has_value(); }
};

struct ComparisonReport {
  std::vector<FitOutcome> fits;          // ULINF, BEINF, ZOIK order
  std::vector<Model> ranking_aic;        // successful fits, ascending AIC
  std::vector<Model> ranking_bic;
  std::optional<Model> best_aic;
  std::optional<Model> best_bic;

  const FitOutcome& outcome(Model model) const;
};

/// Partition once, fit all three models, rank by AIC and BIC (ties broken by
/// fewer parameters, then by model name). A failed competitor fit degrades
/// gracefully: its slot carries the message and the rankings cover the rest.
ComparisonReport compare(std::span<const double> sample, double level = 0.95);

struct CdfGridRow {
  double y;
  double ecdf;
  double cdf_ulinf;   // NaN when the fit failed
  double cdf_beinf;
  double cdf_zoik;
};

/// Empirical CDF and the fitted mixed CDFs on a uniform grid over [0,1]
/// including both endpoints, so the jumps at 0 and 1 are visible.
std::vector<CdfGridRow> ecdf_and_fitted_cdfs(std::span<const double> sample,
                                             const ComparisonReport& report,
                                             std::size_t grid_size);

/// CSV with header y,ecdf,cdf_ulinf,cdf_beinf,cdf_zoik.
std::string cdf_grid_to_csv(const std::vector<CdfGridRow>& grid);

/// JSON rendering (fits with estimates/std_errors/conf_intervals/loglik/
/// aic/bic plus ranking arrays).
std::string to_json(const FitResult& fit);
std::string to_json(const ComparisonReport& report);

}  // namespace ulinf
