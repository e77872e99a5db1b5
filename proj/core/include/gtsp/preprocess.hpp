#pragma once

#include <utility>
#include <vector>

#include "gtsp/types.hpp"

namespace gtsp {

/// A window after mean removal and endpoint-line detrending.
///
/// `times` are window-relative (first epoch = 0); `origin` is the absolute
/// series epoch that maps to 0. The residual is exactly zero at both ends.
struct DetrendedWindow {
  std::vector<double> times;
  std::vector<double> residuals;
  std::vector<double> weights;
  double origin = 0.0;
  double mean = 0.0;
  double trend_a = 0.0;
  double trend_b = 0.0;

  std::size_t size() const noexcept { return residuals.size(); }
};

/// Subtracts the arithmetic mean. Returns the centered window and the mean.
std::pair<Window, double> remove_mean(const Window& window);

/// Shifts time so the first epoch is 0 and removes the line through the first
/// and last samples. The returned `mean` is 0; see detrend() for both steps.
DetrendedWindow remove_endpoint_trend(const Window& centered);

/// remove_mean followed by remove_endpoint_trend.
DetrendedWindow detrend(const Window& window);

/// Inverse of detrend at window-relative time t: core + a + b t + M.
double restore(double prediction_core, double t, const DetrendedWindow& detrended) noexcept;

}  // namespace gtsp
