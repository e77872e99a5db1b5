#include "gtsp/outlier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "gtsp/error.hpp"
#include "gtsp/parallel.hpp"
#include "gtsp/predictor.hpp"
#include "gtsp/synthetic.hpp"

namespace gtsp {
namespace {

double weight_of(const Sample& s) { return s.sigma ? observation_weight(*s.sigma) : 1.0; }

double predict_from(const Window& window, double t_next, const PipelineConfig& config) {
  return predict_one(train(window, config), t_next);
}

struct SideWindow {
  Window window;
  bool adjacent = true;  // the immediate neighbour of `index` is not flagged
};

// The n nearest samples on one side of `index`, skipping masked ones. The
// backward side comes out reversed with negated times so that it forms an
// ordinary causal window ending just after `index`.
std::optional<SideWindow> side_window(const TimeSeries& series, std::size_t index, std::size_t n,
                                      bool backward, const std::vector<char>* skip,
                                      const std::vector<char>* flagged) {
  SideWindow out;
  Window& w = out.window;
  w.times.reserve(n);
  w.values.reserve(n);
  w.weights.reserve(n);
  const std::size_t len = series.size();
  for (std::size_t step = 1; w.size() < n; ++step) {
    if (backward ? index + step >= len : step > index) return std::nullopt;
    const std::size_t j = backward ? index + step : index - step;
    if (step == 1 && flagged && (*flagged)[j]) out.adjacent = false;
    if (skip && (*skip)[j]) continue;
    const Sample& s = series.samples[j];
    w.push_back(backward ? -s.t : s.t, s.value, weight_of(s));
  }
  if (!backward) {
    std::reverse(w.times.begin(), w.times.end());
    std::reverse(w.values.begin(), w.values.end());
    std::reverse(w.weights.begin(), w.weights.end());
  }
  return out;
}

using PredictionPair = std::pair<std::optional<double>, std::optional<double>>;

// A lone prediction (near either end of the series) does not count when it
// has to reach over a flagged neighbour. That turns it into a longer
// extrapolation whose error grows with every flag, and the flags cascade.
PredictionPair predictions_at(const TimeSeries& series, std::size_t index,
                              const PipelineConfig& config, const std::vector<char>* skip,
                              const std::vector<char>* flagged) {
  const double t = series.samples[index].t;
  const auto fw = side_window(series, index, config.n, false, skip, flagged);
  const auto bw = side_window(series, index, config.n, true, skip, flagged);
  PredictionPair out;
  if (fw && (bw || fw->adjacent)) out.first = predict_from(fw->window, t, config);
  if (bw && (fw || bw->adjacent)) out.second = predict_from(bw->window, -t, config);
  return out;
}

// Smallest deviation from the available predictions; nullopt when there are none.
std::optional<double> deviation(double obs, const PredictionPair& p) {
  std::optional<double> best;
  for (const auto& pred : {p.first, p.second}) {
    if (pred) best = std::min(best.value_or(std::numeric_limits<double>::infinity()),
                              std::abs(obs - *pred));
  }
  return best;
}

double mean_prediction(const PredictionPair& p) {
  if (p.first && p.second) return 0.5 * (*p.first + *p.second);
  return p.first ? *p.first : *p.second;
}

}  // namespace

std::pair<std::optional<double>, std::optional<double>> bidirectional_predictions(
    const TimeSeries& series, std::size_t index, const PipelineConfig& config) {
  return predictions_at(series, index, config, nullptr, nullptr);
}

DetectionResult detect_outliers(const TimeSeries& series, const PipelineConfig& config,
                                double threshold, std::size_t max_iterations, std::size_t workers) {
  config.validate();
  if (series.size() < config.n + 1) {
    throw Error(ErrorCode::SeriesTooShort, std::to_string(series.size()) + " samples, n = " +
                                               std::to_string(config.n));
  }
  if (!(threshold > 0.0)) throw Error(ErrorCode::InvalidArgument, "threshold must be positive");

  DetectionResult result;
  result.cleaned = series;
  if (std::isinf(threshold)) return result;

  const std::size_t len = series.size();
  std::map<std::size_t, OutlierFlag> flagged;
  std::vector<PredictionPair> pred(len);

  for (std::size_t iter = 1; iter <= max_iterations; ++iter) {
    TimeSeries& current = result.cleaned;
    result.iterations = iter;
    // Flagged samples never feed a window; their replacements only matter
    // for the cleaned output.
    std::vector<char> mask(len, 0);
    for (const auto& [i, flag] : flagged) mask[i] = 1;
    if (!flagged.empty()) {
      // Replacements made from gappy windows last pass are redone now that
      // fewer neighbours are suspect.
      std::vector<std::size_t> idx;
      for (const auto& [i, flag] : flagged) idx.push_back(i);
      std::vector<PredictionPair> refresh(idx.size());
      parallel_for(idx.size(), workers, [&](std::size_t k) {
        refresh[k] = predictions_at(current, idx[k], config, &mask, &mask);
      });
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (refresh[k].first || refresh[k].second) {
          current.samples[idx[k]].value = mean_prediction(refresh[k]);
        }
      }
    }
    parallel_for(len, workers, [&](std::size_t i) {
      if (!mask[i]) pred[i] = predictions_at(current, i, config, &mask, &mask);
    });

    std::vector<std::size_t> candidates;
    std::vector<char> is_candidate = mask;
    for (std::size_t i = 0; i < len; ++i) {
      if (mask[i]) continue;
      const auto dev = deviation(current.samples[i].value, pred[i]);
      if (dev && *dev > threshold) {
        candidates.push_back(i);
        is_candidate[i] = 1;
      }
    }
    if (candidates.empty()) break;

    // An outlier near the end of a window drags that window's prediction with
    // it, so its neighbours turn up as candidates too. Each candidate is
    // judged again from windows that also skip all the others, and within any n
    // samples only the largest confirmed deviation is taken this pass.
    std::vector<PredictionPair> confirm(candidates.size());
    parallel_for(candidates.size(), workers, [&](std::size_t k) {
      confirm[k] = predictions_at(current, candidates[k], config, &is_candidate, &mask);
    });
    std::vector<double> dev(candidates.size(), 0.0);
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const auto d = deviation(current.samples[candidates[k]].value, confirm[k]);
      if (d && *d > threshold) dev[k] = *d;
    }

    std::size_t fresh = 0;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (dev[k] == 0.0) continue;
      const std::size_t i = candidates[k];
      bool strongest = true;
      for (std::size_t o = 0; o < candidates.size() && strongest; ++o) {
        const std::size_t j = candidates[o];
        if (o == k || (j > i ? j - i : i - j) > config.n) continue;
        strongest = dev[o] < dev[k] || (dev[o] == dev[k] && j > i);
      }
      if (!strongest) continue;
      const double obs = current.samples[i].value;
      flagged.emplace(i, OutlierFlag{i, current.samples[i].t, obs, confirm[k].first,
                                     confirm[k].second, dev[k], iter});
      current.samples[i].value = mean_prediction(confirm[k]);
      ++fresh;
    }
    if (fresh == 0) break;
  }

  result.flags.reserve(flagged.size());
  for (auto& [i, flag] : flagged) result.flags.push_back(flag);
  return result;
}

Injection inject_outliers(const TimeSeries& series, std::size_t count, double min_mag,
                          double max_mag, std::uint64_t seed) {
  if (count < 2) throw Error(ErrorCode::InvalidArgument, "at least 2 injections per series");
  if (!(min_mag > 0.0 && min_mag < max_mag)) {
    throw Error(ErrorCode::InvalidArgument, "need 0 < min_mag < max_mag");
  }
  if (count > series.size()) {
    throw Error(ErrorCode::TooManyInjections,
                std::to_string(count) + " injections into " + std::to_string(series.size()));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> all(series.size());
  std::iota(all.begin(), all.end(), std::size_t{0});

  Injection out;
  out.corrupted = series;
  out.truth.series_id = series.station_id + ":" + std::string(to_string(series.component));
  std::sample(all.begin(), all.end(), std::back_inserter(out.truth.indices), count, rng);

  std::uniform_real_distribution<double> magnitude(min_mag, max_mag);
  std::bernoulli_distribution negative(0.5);
  for (std::size_t idx : out.truth.indices) {
    double m = magnitude(rng);
    if (negative(rng)) m = -m;
    out.truth.magnitudes.push_back(m);
    out.truth.original_values.push_back(series.samples[idx].value);
    out.corrupted.samples[idx].value += m;
  }
  return out;
}

TimeSeries remove_injections(const TimeSeries& corrupted, const InjectionRecord& truth) {
  TimeSeries out = corrupted;
  // (y + m) - m is not always y in floating point, so the recorded value wins.
  const bool exact = truth.original_values.size() == truth.indices.size();
  for (std::size_t k = 0; k < truth.indices.size(); ++k) {
    double& v = out.samples.at(truth.indices[k]).value;
    v = exact ? truth.original_values[k] : v - truth.magnitudes[k];
  }
  return out;
}

DetectionScore& DetectionScore::operator+=(const DetectionScore& other) {
  injected_count += other.injected_count;
  detected_count += other.detected_count;
  false_positive_count += other.false_positive_count;
  success_rate = injected_count ? 100.0 * static_cast<double>(detected_count) /
                                      static_cast<double>(injected_count)
                                : 0.0;
  return *this;
}

DetectionScore score_detection(const InjectionRecord& truth, const std::vector<OutlierFlag>& flags) {
  DetectionScore s;
  s.injected_count = truth.indices.size();
  for (const auto& f : flags) {
    const bool hit =
        std::find(truth.indices.begin(), truth.indices.end(), f.index) != truth.indices.end();
    if (hit) ++s.detected_count;
    else ++s.false_positive_count;
  }
  s.success_rate = s.injected_count ? 100.0 * static_cast<double>(s.detected_count) /
                                          static_cast<double>(s.injected_count)
                                    : 0.0;
  return s;
}

PipelineConfig CampaignConfig::default_pipeline() {
  PipelineConfig p;
  p.n = 60;
  p.m_min = 1;
  p.m_max = 6;
  p.mse_threshold = 3e-5;
  return p;
}

CampaignConfig CampaignConfig::from_config(const KeyValueConfig& kv, CampaignConfig base) {
  base.series_count = kv.get_size("series_count", base.series_count);
  base.series_length = kv.get_size("series_length", base.series_length);
  base.injections_per_series = kv.get_size("injection_count", base.injections_per_series);
  base.injections_per_series = kv.get_size("injections", base.injections_per_series);
  base.min_magnitude = kv.get_double("min_magnitude", base.min_magnitude);
  base.max_magnitude = kv.get_double("max_magnitude", base.max_magnitude);
  base.threshold = kv.get_double("threshold", base.threshold);
  base.noise_sigma = kv.get_double("noise_sigma", base.noise_sigma);
  base.signal_amplitude = kv.get_double("signal_amplitude", base.signal_amplitude);
  base.sampling_interval = kv.get_double("sampling_interval", base.sampling_interval);
  base.seed = kv.get_size("seed", base.seed);
  base.max_iterations = kv.get_size("max_iterations", base.max_iterations);
  base.workers = kv.get_size("workers", base.workers);
  base.pipeline = apply_pipeline_keys(kv, base.pipeline);
  return base;
}

std::vector<TimeSeries> synthetic_corpus(const CampaignConfig& config) {
  std::vector<TimeSeries> corpus;
  corpus.reserve(config.series_count);
  for (std::size_t s = 0; s < config.series_count; ++s) {
    std::mt19937_64 rng(derive_seed(config.seed, 2 * s));
    SignalSpec spec;
    spec.f0 = config.pipeline.f0;
    spec.grid_n = config.pipeline.n;
    spec.m = 3;
    spec.amplitude = config.signal_amplitude;
    spec.span = static_cast<double>(config.series_length) * config.sampling_interval;
    const HarmonicSignal signal = random_signal(spec, rng);
    corpus.push_back(sample_signal(signal, config.series_length, config.sampling_interval,
                                   config.noise_sigma, rng, "SYN" + std::to_string(s)));
  }
  return corpus;
}

CampaignResult run_campaign(const std::vector<TimeSeries>& corpus, const CampaignConfig& config) {
  if (corpus.empty()) throw Error(ErrorCode::EmptySeries, "empty corpus");
  CampaignResult result;
  result.series.resize(corpus.size());
  parallel_for(corpus.size(), config.workers, [&](std::size_t s) {
    const Injection inj =
        inject_outliers(corpus[s], config.injections_per_series, config.min_magnitude,
                        config.max_magnitude, derive_seed(config.seed, 2 * s + 1));
    auto& slot = result.series[s];
    slot.truth = inj.truth;
    slot.detection = detect_outliers(inj.corrupted, config.pipeline, config.threshold,
                                     config.max_iterations);
    slot.score = score_detection(slot.truth, slot.detection.flags);
  });
  for (const auto& s : result.series) {
    result.total += s.score;
    result.epochs += s.detection.cleaned.size();
  }
  result.false_positive_rate = result.epochs ? static_cast<double>(result.total.false_positive_count) /
                                                   static_cast<double>(result.epochs)
                                             : 0.0;
  return result;
}

}  // namespace gtsp
