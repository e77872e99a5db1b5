#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "gtsp/event.hpp"
#include "gtsp/ingest.hpp"
#include "gtsp/key_value.hpp"
#include "gtsp/metrics.hpp"
#include "gtsp/outlier.hpp"
#include "gtsp/parallel.hpp"
#include "gtsp/predictor.hpp"
#include "gtsp/results.hpp"
#include "gtsp/synthetic.hpp"

namespace gtsp::cli {
namespace fs = std::filesystem;

ExitCode exit_code_for(ErrorCode code) noexcept {
  if (is_numerical(code)) return kNumerical;
  switch (code) {
    case ErrorCode::InvalidConfig:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidSchema:
    case ErrorCode::UnknownWavelet:
    case ErrorCode::NonPositiveF0:
      return kUsage;
    default:
      return kData;
  }
}

namespace {

/// State shared by every subcommand: where the data comes from, where results
/// go, and the key=value overrides collected from flags.
struct Invocation {
  std::string name;
  std::vector<std::string> inputs;
  std::string config_path;
  std::string schema_path;
  std::string input_format = "auto";
  std::string output_format = "csv";
  std::string out_dir = "gtsp_out";
  std::optional<std::uint64_t> seed;
  std::map<std::string, std::string> overrides;
  std::vector<std::string> written;

  KeyValueConfig settings() const {
    KeyValueConfig kv = config_path.empty() ? KeyValueConfig{} : KeyValueConfig::load(config_path);
    for (const auto& [k, v] : overrides) kv.set(k, v);
    if (seed) kv.set("seed", std::to_string(*seed));
    return kv;
  }

  ResultFormat format() const {
    const auto f = parse_result_format(output_format);
    if (!f) throw Error(ErrorCode::InvalidArgument, "unknown output format " + output_format);
    return *f;
  }

  std::vector<TimeSeries> load_inputs() const {
    const auto fmt = parse_series_format(input_format);
    if (!fmt) throw Error(ErrorCode::InvalidArgument, "unknown input format " + input_format);
    std::optional<SeriesFileSchema> schema;
    if (!schema_path.empty()) schema = SeriesFileSchema::from_config(KeyValueConfig::load(schema_path));
    std::vector<TimeSeries> all;
    for (const auto& path : inputs) {
      auto part = parse_series(read_text_file(path), *fmt, schema);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
  }

  void write(const std::string& stem, const std::string& body) {
    fs::create_directories(out_dir);
    const fs::path path = fs::path(out_dir) / stem;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorCode::Io, "cannot write " + path.string());
    os << body;
    written.push_back(stem);
  }

  void write_table(const std::string& stem, const ResultTable& t) {
    const ResultFormat f = format();
    write(stem + (f == ResultFormat::Delimited ? ".csv" : ".json"), write_results(t, f));
  }

  void write_manifest(const KeyValueConfig& kv) {
    std::ostringstream os;
    auto list = [&](const std::vector<std::string>& xs) {
      os << "[";
      for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << json_quote(xs[i]);
      os << "]";
    };
    os << "{\n  \"subcommand\": " << json_quote(name) << ",\n  \"inputs\": ";
    list(inputs);
    os << ",\n  \"config\": " << (config_path.empty() ? "null" : json_quote(config_path));
    os << ",\n  \"schema\": " << (schema_path.empty() ? "null" : json_quote(schema_path));
    os << ",\n  \"seed\": ";
    if (auto s = kv.get("seed")) os << json_quote(*s);
    else os << "null";
    os << ",\n  \"output_directory\": " << json_quote(out_dir);
    os << ",\n  \"tool_version\": " << json_quote(GTSP_VERSION);
    os << ",\n  \"settings\": {";
    bool first = true;
    for (const auto& [k, v] : kv.entries()) {
      os << (first ? "" : ",") << "\n    " << json_quote(k) << ": " << json_quote(v);
      first = false;
    }
    os << (first ? "}" : "\n  }") << ",\n  \"outputs\": ";
    list(written);
    os << "\n}\n";
    write("manifest.json", os.str());
  }
};

PipelineConfig pipeline_for(const KeyValueConfig& kv, const TimeSeries& s, PipelineConfig base = {}) {
  // f0 follows the sampling rate unless set explicitly.
  if (!kv.contains("f0")) base.f0 = 1.0 / s.sampling_interval;
  return apply_pipeline_keys(kv, base);
}

void add_io_options(CLI::App* sub, Invocation& inv, bool needs_input) {
  auto* in = sub->add_option("--input", inv.inputs, "Series file(s)");
  if (needs_input) in->required();
  sub->add_option("--config", inv.config_path, "key=value configuration file");
  sub->add_option("--out", inv.out_dir, "Output directory")->capture_default_str();
  sub->add_option("--output-format", inv.output_format, "csv or json")->capture_default_str();
  if (needs_input) {
    sub->add_option("--input-format", inv.input_format, "auto, ngl, gtsp or delimited")
        ->capture_default_str();
    sub->add_option("--schema", inv.schema_path, "Column layout for delimited input");
  }
}

void add_override(CLI::App* sub, Invocation& inv, const std::string& flag, const std::string& help) {
  std::string key = normalize_key(flag.substr(2));
  sub->add_option_function<std::string>(
      flag, [&inv, key](const std::string& v) { inv.overrides[key] = v; }, help);
}

void add_pipeline_overrides(CLI::App* sub, Invocation& inv) {
  add_override(sub, inv, "--n", "Training window length");
  add_override(sub, inv, "--m", "Fixed number of frequencies (skips the search)");
  add_override(sub, inv, "--m-min", "Smallest m probed");
  add_override(sub, inv, "--m-max", "Largest m probed");
  add_override(sub, inv, "--mse-threshold", "Training MSE that ends the m search (m^2)");
  add_override(sub, inv, "--f0", "Fundamental frequency (Hz); default 1/sampling interval");
  add_override(sub, inv, "--window-policy", "sliding or growing");
  add_override(sub, inv, "--wavelet", "haar, db2 or db4");
  add_override(sub, inv, "--refit-each-step", "true or false");
}

// ---------------------------------------------------------------------------

int cmd_ingest(Invocation& inv, std::ostream& out) {
  const KeyValueConfig kv = inv.settings();
  const auto series = inv.load_inputs();
  ResultTable summary{{"station", "component", "samples", "first_epoch", "last_epoch",
                       "sampling_interval"},
                      {}};
  for (const auto& s : series) {
    summary.add_row({s.station_id, std::string(to_string(s.component)),
                     static_cast<std::int64_t>(s.size()), s.absolute_epoch(0),
                     s.absolute_epoch(s.size() - 1), s.sampling_interval});
  }
  inv.write_table("series", series_table(series));
  inv.write_table("summary", summary);
  inv.write_manifest(kv);
  out << series.size() << " series written to " << inv.out_dir << "\n";
  return kOk;
}

int cmd_predict(Invocation& inv, std::ostream& out) {
  const KeyValueConfig kv = inv.settings();
  const std::size_t q = kv.get_size("horizon", 30);
  if (q == 0) throw Error(ErrorCode::InvalidConfig, "horizon must be positive");
  const auto series = inv.load_inputs();

  std::vector<TimeSeries> predicted;
  ResultTable models{{"station", "component", "step", "m", "training_mse", "mean", "trend_a",
                      "trend_b", "rank_deficient", "window_length", "last_epoch"},
                     {}};
  for (const auto& s : series) {
    const PipelineConfig cfg = pipeline_for(kv, s);
    const HorizonForecast fc = forecast_series(s, cfg, q);
    TimeSeries p;
    p.station_id = s.station_id;
    p.component = s.component;
    p.sampling_interval = s.sampling_interval;
    p.origin = s.origin;
    p.samples = fc.predictions;
    predicted.push_back(std::move(p));
    for (std::size_t k = 0; k < fc.models.size(); ++k) {
      const TrainedModel& m = fc.models[k];
      models.add_row({s.station_id, std::string(to_string(s.component)),
                      static_cast<std::int64_t>(k), static_cast<std::int64_t>(m.m_used),
                      m.training_mse, m.mean, m.trend_a, m.trend_b,
                      static_cast<std::int64_t>(m.rank_deficient),
                      static_cast<std::int64_t>(m.window_length), s.origin + m.last_epoch});
    }
  }
  inv.write_table("predictions", series_table(predicted));
  inv.write_table("models", models);
  inv.write_manifest(kv);
  out << predicted.size() << " series x " << q << " predictions written to " << inv.out_dir << "\n";
  return kOk;
}

int cmd_evaluate(Invocation& inv, const std::string& predictions_path, std::ostream& out) {
  const KeyValueConfig kv = inv.settings();
  const auto truth = inv.load_inputs();
  const auto fmt = parse_series_format(inv.input_format);
  const auto predicted = parse_series(read_text_file(predictions_path), *fmt, std::nullopt);
  const std::size_t n_max = kv.get_size("n", PipelineConfig{}.n);
  const auto denom = kv.get_string("mase_denominator", "full") == "training"
                         ? MaseDenominator::Training
                         : MaseDenominator::FullSeries;

  ResultTable table{{"station", "component", "q", "n", "smape", "mase", "std", "mae"}, {}};
  for (const auto& p : predicted) {
    const auto it = std::find_if(truth.begin(), truth.end(), [&](const TimeSeries& t) {
      return t.station_id == p.station_id && t.component == p.component;
    });
    const std::string label = p.station_id + ":" + std::string(to_string(p.component));
    if (it == truth.end()) throw Error(ErrorCode::EpochMismatch, "no truth series for " + label);

    const double tol = 1e-6 * it->sampling_interval;
    std::vector<double> actual, pred;
    std::optional<std::size_t> first;
    std::size_t j = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      const double epoch = p.absolute_epoch(k);
      while (j < it->size() && it->absolute_epoch(j) < epoch - tol) ++j;
      if (j == it->size() || std::abs(it->absolute_epoch(j) - epoch) > tol) {
        throw Error(ErrorCode::EpochMismatch,
                    label + ": predicted epoch " + format_double(epoch) + " not in truth");
      }
      if (!first) first = j;
      actual.push_back(it->samples[j].value);
      pred.push_back(p.samples[k].value);
    }
    const std::size_t n = std::min(n_max, *first);
    std::vector<double> training;
    for (std::size_t i = *first - n; i < *first; ++i) training.push_back(it->samples[i].value);

    const EvaluationReport r = evaluate(actual, pred, training, denom);
    auto opt = [](const std::optional<double>& v) -> Cell { return v ? Cell{*v} : Cell{}; };
    table.add_row({p.station_id, std::string(to_string(p.component)), static_cast<std::int64_t>(r.q),
                   static_cast<std::int64_t>(r.n), r.smape, opt(r.mase), opt(r.std), r.mae});
  }
  inv.write_table("evaluation", table);
  inv.write_manifest(kv);
  out << table.rows.size() << " series evaluated, written to " << inv.out_dir << "\n";
  return kOk;
}

int cmd_simulate(Invocation& inv, std::ostream& out) {
  const KeyValueConfig kv = inv.settings();
  CampaignConfig campaign = CampaignConfig::from_config(kv, CampaignConfig{});
  std::vector<TimeSeries> corpus;
  if (inv.inputs.empty()) {
    corpus = synthetic_corpus(campaign);
  } else {
    corpus = inv.load_inputs();
    if (!corpus.empty()) campaign.pipeline = pipeline_for(kv, corpus.front(), campaign.pipeline);
  }
  const CampaignResult r = run_campaign(corpus, campaign);

  ResultTable flags{{"series_id", "index", "epoch", "observed", "forward_pred", "backward_pred",
                     "magnitude_estimate", "iteration", "injected"},
                    {}};
  ResultTable injections{{"series_id", "index", "epoch", "magnitude", "detected"}, {}};
  for (std::size_t s = 0; s < r.series.size(); ++s) {
    const auto& sr = r.series[s];
    const TimeSeries& ts = corpus[s];
    auto opt = [](const std::optional<double>& v) -> Cell { return v ? Cell{*v} : Cell{}; };
    auto is_injected = [&](std::size_t i) {
      return std::find(sr.truth.indices.begin(), sr.truth.indices.end(), i) != sr.truth.indices.end();
    };
    for (const auto& f : sr.detection.flags) {
      flags.add_row({sr.truth.series_id, static_cast<std::int64_t>(f.index), ts.origin + f.epoch,
                     f.observed, opt(f.forward_pred), opt(f.backward_pred), f.magnitude_estimate,
                     static_cast<std::int64_t>(f.iteration),
                     static_cast<std::int64_t>(is_injected(f.index))});
    }
    for (std::size_t k = 0; k < sr.truth.indices.size(); ++k) {
      const std::size_t i = sr.truth.indices[k];
      const bool hit = std::any_of(sr.detection.flags.begin(), sr.detection.flags.end(),
                                   [&](const OutlierFlag& f) { return f.index == i; });
      injections.add_row({sr.truth.series_id, static_cast<std::int64_t>(i), ts.absolute_epoch(i),
                          sr.truth.magnitudes[k], static_cast<std::int64_t>(hit)});
    }
  }
  ResultTable summary{{"series_count", "epochs", "injected_count", "detected_count",
                       "success_rate", "false_positive_count", "false_positive_rate"},
                      {}};
  summary.add_row({static_cast<std::int64_t>(r.series.size()), static_cast<std::int64_t>(r.epochs),
                   static_cast<std::int64_t>(r.total.injected_count),
                   static_cast<std::int64_t>(r.total.detected_count), r.total.success_rate,
                   static_cast<std::int64_t>(r.total.false_positive_count), r.false_positive_rate});
  inv.write_table("flags", flags);
  inv.write_table("injections", injections);
  inv.write_table("summary", summary);
  inv.write_manifest(kv);
  out << "detected " << r.total.detected_count << " of " << r.total.injected_count << " ("
      << r.total.success_rate << "%), " << r.total.false_positive_count << " false positives\n";
  return kOk;
}

int cmd_detect_event(Invocation& inv, std::ostream& out, std::ostream& err) {
  const KeyValueConfig kv = inv.settings();
  const EventConfig event = EventConfig::from_config(kv, EventConfig{});
  auto series = inv.load_inputs();

  // E and U show coseismic motion best; other components only when asked for
  // or when the input carries neither.
  std::vector<TimeSeries> chosen;
  if (auto list = kv.get("components")) {
    for (const auto& s : series) {
      if (list->find(to_string(s.component)) != std::string::npos) chosen.push_back(s);
    }
  } else {
    for (const auto& s : series) {
      if (s.component == Component::E || s.component == Component::U) chosen.push_back(s);
    }
    if (chosen.empty()) chosen = series;
  }

  struct Outcome {
    std::optional<EventReport> report;
    std::optional<ErrorCode> failure;
    std::string message;
  };
  std::vector<Outcome> outcomes(chosen.size());
  parallel_for(chosen.size(), kv.get_size("workers", 1), [&](std::size_t i) {
    try {
      outcomes[i].report = predict_event(chosen[i], pipeline_for(kv, chosen[i]), event);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoDeparture && e.code() != ErrorCode::NoEventInHorizon) throw;
      outcomes[i].failure = e.code();
      outcomes[i].message = e.what();
    }
  });

  ResultTable table{{"station", "component", "status", "departure_index", "departure_epoch",
                     "predicted_event_time", "predicted_first_motion", "lead_time",
                     "training_fraction", "n", "m"},
                    {}};
  std::vector<const EventReport*> ok;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const auto& o = outcomes[i];
    const std::string comp(to_string(chosen[i].component));
    if (!o.report) {
      err << chosen[i].station_id << ":" << comp << ": " << o.message << "\n";
      table.add_row({chosen[i].station_id, comp, std::string(to_string(*o.failure)), {}, {}, {}, {},
                     {}, {}, {}, {}});
      continue;
    }
    const EventReport& r = *o.report;
    ok.push_back(&r);
    table.add_row({chosen[i].station_id, comp, std::string("ok"),
                   static_cast<std::int64_t>(r.departure_index), r.departure_epoch,
                   r.predicted_event_time, r.predicted_first_motion,
                   r.lead_time ? Cell{*r.lead_time} : Cell{}, r.training_fraction,
                   static_cast<std::int64_t>(r.n_used), static_cast<std::int64_t>(r.m_used)});
  }
  if (ok.empty()) {
    throw Error(ErrorCode::NoDeparture, "no station produced an event report");
  }

  auto mean = [&](auto field) {
    double s = 0.0;
    for (const auto* r : ok) s += field(*r);
    return s / static_cast<double>(ok.size());
  };
  const bool all_lead = std::all_of(ok.begin(), ok.end(), [](const auto* r) { return r->lead_time.has_value(); });
  table.add_row({std::string("average"), std::string(), std::string("ok"),
                 mean([](const EventReport& r) { return static_cast<double>(r.departure_index); }),
                 mean([](const EventReport& r) { return r.departure_epoch; }),
                 mean([](const EventReport& r) { return r.predicted_event_time; }),
                 mean([](const EventReport& r) { return r.predicted_first_motion; }),
                 all_lead ? Cell{mean([](const EventReport& r) { return *r.lead_time; })} : Cell{},
                 mean([](const EventReport& r) { return r.training_fraction; }),
                 mean([](const EventReport& r) { return static_cast<double>(r.n_used); }),
                 mean([](const EventReport& r) { return static_cast<double>(r.m_used); })});
  inv.write_table("events", table);
  inv.write_manifest(kv);
  out << ok.size() << " of " << chosen.size() << " series produced an event report\n";
  return kOk;
}

// Parses "1024:64,512:32".
std::vector<std::pair<std::size_t, std::size_t>> parse_grid(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::InvalidConfig, "grid entry " + item + " is not n:m");
    try {
      grid.emplace_back(std::stoul(item.substr(0, colon)), std::stoul(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidConfig, "grid entry " + item + " is not n:m");
    }
  }
  return grid;
}

int cmd_bench(Invocation& inv, std::ostream& out) {
  const KeyValueConfig kv = inv.settings();
  const auto grid = parse_grid(kv.get_string("grid", "1024:64"));
  const std::size_t repeats = std::max<std::size_t>(1, kv.get_size("repeats", 5));
  const std::uint64_t seed = kv.get_size("seed", 1);

  ResultTable table{{"n", "m", "repeats", "median_ms", "min_ms", "max_ms", "stddev_ms"}, {}};
  for (const auto& [n, m] : grid) {
    PipelineConfig cfg = apply_pipeline_keys(kv, PipelineConfig{});
    cfg.n = n;
    cfg.m_fixed = m;
    std::mt19937_64 rng(derive_seed(seed, n * 131 + m));
    SignalSpec spec;
    spec.grid_n = n;
    spec.span = static_cast<double>(n + 1) * 86400.0;
    const TimeSeries s = sample_signal(random_signal(spec, rng), n + 1, 86400.0, 0.003, rng);
    const Window w = slice_window(s, n - 1, n);

    std::vector<double> ms;
    for (std::size_t r = 0; r < repeats; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const double y = predict_one(train(w, cfg), s.samples[n].t);
      const auto t1 = std::chrono::steady_clock::now();
      if (!std::isfinite(y)) throw Error(ErrorCode::DegenerateWindow, "non-finite prediction");
      ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::vector<double> sorted = ms;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted.size() % 2 ? sorted[sorted.size() / 2]
                                            : 0.5 * (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]);
    double mean = 0.0;
    for (double v : ms) mean += v;
    mean /= static_cast<double>(ms.size());
    double var = 0.0;
    for (double v : ms) var += (v - mean) * (v - mean);
    const double sd = ms.size() > 1 ? std::sqrt(var / static_cast<double>(ms.size() - 1)) : 0.0;
    table.add_row({static_cast<std::int64_t>(n), static_cast<std::int64_t>(m),
                   static_cast<std::int64_t>(repeats), median, sorted.front(), sorted.back(), sd});
  }
  inv.write_table("bench", table);
  inv.write_manifest(kv);
  out << write_results(table, ResultFormat::Delimited);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"GNSS coordinate time series prediction toolkit", "gtsp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(GTSP_VERSION));

  Invocation inv;
  std::string predictions_path;

  auto* ingest = app.add_subcommand("ingest", "Parse series files into the toolkit's table format");
  add_io_options(ingest, inv, true);

  auto* predict = app.add_subcommand("predict", "Forecast each series past its last epoch");
  add_io_options(predict, inv, true);
  add_pipeline_overrides(predict, inv);
  add_override(predict, inv, "--horizon", "Number of steps to predict (default 30)");

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score predictions against truth");
  add_io_options(evaluate_cmd, inv, true);
  evaluate_cmd->add_option("--predictions", predictions_path, "Predictions table")->required();
  add_override(evaluate_cmd, inv, "--n", "Training values used by MASE (default 256)");

  auto* simulate = app.add_subcommand("simulate-outliers", "Inject, detect and score outliers");
  add_io_options(simulate, inv, false);
  simulate->add_option("--input-format", inv.input_format, "auto, ngl, gtsp or delimited");
  simulate->add_option("--schema", inv.schema_path, "Column layout for delimited input");
  simulate->add_option("--seed", inv.seed, "Campaign seed");
  add_pipeline_overrides(simulate, inv);
  add_override(simulate, inv, "--threshold", "Detection threshold (m), default 0.03");
  add_override(simulate, inv, "--workers", "Worker threads");

  auto* detect = app.add_subcommand("detect-event", "Predict event time and first motion");
  add_io_options(detect, inv, true);
  add_pipeline_overrides(detect, inv);
  add_override(detect, inv, "--step-threshold", "First-difference threshold (m), default 0.03");
  add_override(detect, inv, "--event-threshold", "Deviation threshold (m), default 10 x step");
  add_override(detect, inv, "--horizon", "Forecast length (default: rest of the series)");
  add_override(detect, inv, "--reference-event-time", "Observed event epoch (s) for lead time");
  add_override(detect, inv, "--training-fraction", "Share of the pre-window data used for training");
  add_override(detect, inv, "--workers", "Worker threads");

  auto* bench = app.add_subcommand("bench", "Time train + predict_one over an (n, m) grid");
  add_io_options(bench, inv, false);
  bench->add_option("--seed", inv.seed, "Seed of the synthetic windows");
  add_override(bench, inv, "--grid", "Comma-separated n:m pairs, default 1024:64");
  add_override(bench, inv, "--repeats", "Timed repetitions per grid point");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << GTSP_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  inv.name = sub->get_name();
  try {
    if (sub == ingest) return cmd_ingest(inv, out);
    if (sub == predict) return cmd_predict(inv, out);
    if (sub == evaluate_cmd) return cmd_evaluate(inv, predictions_path, out);
    if (sub == simulate) return cmd_simulate(inv, out);
    if (sub == detect) return cmd_detect_event(inv, out, err);
    return cmd_bench(inv, out);
  } catch (const Error& e) {
    err << "gtsp " << inv.name << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "gtsp " << inv.name << ": " << e.what() << "\n";
    return kData;
  }
}

}  // namespace gtsp::cli
