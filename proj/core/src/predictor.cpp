#include "gtsp/predictor.hpp"

#include <limits>
#include <string>

#include "gtsp/error.hpp"
#include "gtsp/wavelet.hpp"

namespace gtsp {

double TrainedModel::reconstruct(double epoch) const {
  const double t = epoch - origin;
  return evaluate_band(low, grid, t) + evaluate_band(high, grid, t) + trend_a + trend_b * t +
         mean;
}

namespace {

struct PreparedWindow {
  DetrendedWindow detrended;
  BandPair bands;
};

PreparedWindow prepare(const Window& window, const PipelineConfig& config) {
  config.validate(window.size());
  PreparedWindow out{detrend(window), {}};
  out.bands = decompose(out.detrended.residuals, config.wavelet);
  return out;
}

TrainedModel fit_model(const Window& window, const PreparedWindow& prep, const Eigen::MatrixXd& design,
                       const FrequencyGrid& grid, double rank_tolerance) {
  const WeightedHarmonicSolver solver(design, prep.detrended.weights, grid, rank_tolerance);
  TrainedModel model;
  model.mean = prep.detrended.mean;
  model.trend_a = prep.detrended.trend_a;
  model.trend_b = prep.detrended.trend_b;
  model.grid = grid;
  model.low = solver.solve(prep.bands.low).coeffs;
  model.high = solver.solve(prep.bands.high).coeffs;
  model.m_used = grid.m();
  model.origin = prep.detrended.origin;
  model.last_epoch = window.times.back();
  model.window_length = window.size();
  model.rank_deficient = solver.rank_deficient();
  model.training_mse = training_mse(model, window);
  return model;
}

}  // namespace

TrainedModel train_fixed(const Window& window, const PipelineConfig& config, std::size_t m) {
  PipelineConfig fixed = config;
  fixed.m_fixed = m;
  const PreparedWindow prep = prepare(window, fixed);
  const FrequencyGrid grid = frequency_grid(config.f0, window.size(), m);
  const Eigen::MatrixXd design = design_matrix(prep.detrended.times, grid);
  TrainedModel model = fit_model(window, prep, design, grid, config.rank_tolerance);
  model.mse_by_m = {model.training_mse};
  return model;
}

TrainedModel train(const Window& window, const PipelineConfig& config) {
  const PreparedWindow prep = prepare(window, config);
  const std::size_t first = config.search_begin();
  const std::size_t last = config.search_end();
  // Grids for smaller m are prefixes of the widest one, so the design is
  // built once and its leading columns reused.
  const FrequencyGrid widest = frequency_grid(config.f0, window.size(), last);
  const Eigen::MatrixXd design = design_matrix(prep.detrended.times, widest);

  std::vector<double> trace;
  TrainedModel best;
  double best_mse = std::numeric_limits<double>::infinity();
  for (std::size_t m = first; m <= last; ++m) {
    TrainedModel candidate =
        fit_model(window, prep, design, widest.prefix(m), config.rank_tolerance);
    trace.push_back(candidate.training_mse);
    const bool done = candidate.training_mse < config.mse_threshold;
    if (candidate.training_mse < best_mse || best.m_used == 0) {
      best_mse = candidate.training_mse;
      best = std::move(candidate);
    }
    if (done) break;
  }
  best.mse_by_m = std::move(trace);
  return best;
}

double predict_one(const TrainedModel& model, double t_next) {
  if (!(t_next > model.last_epoch)) {
    throw Error(ErrorCode::NonCausalEpoch,
                std::to_string(t_next) + " is not after " + std::to_string(model.last_epoch));
  }
  return model.reconstruct(t_next);
}

double training_mse(const TrainedModel& model, const Window& window) {
  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    const double err = model.reconstruct(window.times[i]) - window.values[i];
    weighted += window.weights[i] * err * err;
    total += window.weights[i];
  }
  return total > 0.0 ? weighted / total : 0.0;
}

HorizonForecast forecast_window(Window window, const PipelineConfig& config, std::size_t q,
                                double step) {
  if (q == 0) throw Error(ErrorCode::InvalidArgument, "horizon must be at least 1");
  if (!(step > 0.0)) throw Error(ErrorCode::InvalidArgument, "step must be positive");
  HorizonForecast out;
  out.predictions.reserve(q);
  for (std::size_t i = 0; i < q; ++i) {
    if (config.refit_each_step || out.models.empty()) {
      out.models.push_back(train(window, config));
    }
    const double t_next = window.times.back() + step;
    const double y = predict_one(out.models.back(), t_next);
    out.predictions.push_back(Sample{t_next, y, std::nullopt});
    window.push_back(t_next, y, 1.0);
    if (config.window_policy == WindowPolicy::Sliding) window.pop_front();
  }
  return out;
}

HorizonForecast forecast_series(const TimeSeries& series, const PipelineConfig& config,
                                std::size_t q) {
  if (series.size() < config.n) {
    throw Error(ErrorCode::SeriesTooShort, std::to_string(series.size()) + " samples, n = " +
                                               std::to_string(config.n));
  }
  return forecast_window(slice_window(series, series.size() - 1, config.n), config, q,
                         series.sampling_interval);
}

std::vector<Sample> predict_horizon(const TimeSeries& series, const PipelineConfig& config,
                                    std::size_t q) {
  return forecast_series(series, config, q).predictions;
}

}  // namespace gtsp
