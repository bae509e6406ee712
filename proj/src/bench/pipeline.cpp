#include "transit/bench/pipeline.hpp"

#include <chrono>
#include <fstream>

#include "json.hpp"
#include "transit/bench/report.hpp"
#include "transit/core/errors.hpp"
#include "transit/core/hash.hpp"
#include "transit/delay/generate.hpp"
#include "transit/query/engines.hpp"
#include "transit/shortcuts/builder.hpp"
#include "transit/shortcuts/stats.hpp"
#include "transit/shortcuts/update.hpp"
#include "transit/timetable/load.hpp"

namespace transit {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

engine_kind parse_engine(const std::string& name) {
  if (name == "csa") return engine_kind::csa;
  if (name == "raptor") return engine_kind::raptor;
  if (name == "raptor-ep") return engine_kind::raptor_ep;
  if (name == "tb") return engine_kind::tb;
  if (name == "td-dijkstra" || name == "td") return engine_kind::td_dijkstra;
  if (name == "oracle") return engine_kind::oracle;
  throw validation_error("unknown engine '" + name + "'");
}

}  // namespace

std::string dataset_hash(const std::filesystem::path& dir) {
  return hash_files({dir / "stops.csv", dir / "routes.csv", dir / "trips.csv",
                     dir / "stop_times.csv", dir / "transfers.csv"});
}

void save_manifest(const run_config& cfg, const std::string& hash,
                   const std::filesystem::path& file) {
  nlohmann::json j;
  j["dataset"] = cfg.dataset;
  j["dataset_hash"] = hash;
  j["delta"] = cfg.delta;
  j["incident_bound"] = cfg.incident_bound;
  j["seeds"] = {{"scenario", cfg.scenario_seed},
                {"queries", cfg.query_seed},
                {"builder", cfg.builder_seed}};
  j["builder_samples"] = cfg.builder_samples;
  j["query_window"] = {cfg.query_window.start, cfg.query_window.end};
  j["delay_window"] = {cfg.delay_window.start, cfg.delay_window.end};
  j["engines"] = cfg.engines;
  j["replacement"] = cfg.replacement;
  j["activation"] = cfg.activation;
  j["query_count"] = cfg.query_count;
  j["affected_count"] = cfg.affected_count;
  j["repetitions"] = cfg.repetitions;
  j["max_rounds"] = cfg.max_rounds;
  j["out_dir"] = cfg.out_dir;
  std::ofstream out(file);
  if (!out) {
    throw io_error("cannot write " + file.string());
  }
  out << j.dump(2) << '\n';
}

run_config load_manifest(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw io_error("cannot open " + file.string());
  }
  nlohmann::json j;
  in >> j;
  run_config cfg;
  cfg.dataset = j.at("dataset").get<std::string>();
  cfg.delta = j.at("delta").get<time_sec>();
  cfg.incident_bound = j.at("incident_bound").get<time_sec>();
  cfg.scenario_seed = j.at("seeds").at("scenario").get<std::uint64_t>();
  cfg.query_seed = j.at("seeds").at("queries").get<std::uint64_t>();
  cfg.builder_seed = j.at("seeds").at("builder").get<std::uint64_t>();
  cfg.builder_samples = j.at("builder_samples").get<std::uint32_t>();
  cfg.query_window = {j.at("query_window").at(0).get<time_sec>(),
                      j.at("query_window").at(1).get<time_sec>()};
  cfg.delay_window = {j.at("delay_window").at(0).get<time_sec>(),
                      j.at("delay_window").at(1).get<time_sec>()};
  cfg.engines = j.at("engines").get<std::vector<std::string>>();
  cfg.replacement = j.at("replacement").get<bool>();
  cfg.activation = j.at("activation").get<std::string>();
  cfg.query_count = j.at("query_count").get<std::uint32_t>();
  cfg.affected_count = j.at("affected_count").get<std::uint32_t>();
  cfg.repetitions = j.at("repetitions").get<int>();
  cfg.max_rounds = j.at("max_rounds").get<int>();
  cfg.out_dir = j.at("out_dir").get<std::string>();
  return cfg;
}

pipeline_result run_bench_pipeline(const run_config& cfg) {
  const auto tt = load_timetable(cfg.dataset);
  const auto hash = dataset_hash(cfg.dataset);
  std::filesystem::create_directories(cfg.out_dir);
  const std::filesystem::path out = cfg.out_dir;

  const auto scenario = generate_incident_scenario(tt, cfg.scenario_seed,
                                                   cfg.incident_bound, cfg.delay_window);

  builder_config bcfg;
  bcfg.seed = cfg.builder_seed;
  bcfg.sample_count = cfg.builder_samples;
  const auto t_build = std::chrono::steady_clock::now();
  auto shortcuts = build_event_shortcuts(tt, cfg.delta, bcfg);
  const auto build_seconds = seconds_since(t_build);

  const auto t_update = std::chrono::steady_clock::now();
  if (cfg.replacement) {
    update_with_replacement(shortcuts, scenario, tt);
  } else {
    update_basic(shortcuts, scenario, tt);
  }
  const auto update_seconds = seconds_since(t_update);

  const auto t_prepare = std::chrono::steady_clock::now();
  const auto t_proj = std::chrono::steady_clock::now();
  const auto projected = project(shortcuts, tt);
  const auto projection_seconds = seconds_since(t_proj);
  auto net = prepare(tt, scenario);
  attach_stop_shortcuts(net, projected);
  attach_event_shortcuts(net, shortcuts);
  const auto prepare_seconds = seconds_since(t_prepare) + build_seconds;

  const auto affected = filter_affected(tt, scenario, cfg.query_seed, cfg.affected_count,
                                        cfg.query_window);

  engine_config base_cfg;
  base_cfg.max_rounds = cfg.max_rounds;
  base_cfg.activation = cfg.activation == "ignore" ? tb_activation::ignore_annotations
                                                   : tb_activation::use_annotations;

  auto make_runner = [&](const std::string& name) {
    auto kind = parse_engine(name);
    engine_config ecfg = base_cfg;
    ecfg.kind = kind;
    ecfg.early_pruning = kind == engine_kind::raptor_ep;
    engine_runner r;
    r.name = name;
    r.single_criterion = engine_single_criterion(kind);
    r.run = [&net, ecfg, kind](const query& q) -> pareto_set {
      switch (kind) {
        case engine_kind::csa: {
          pareto_set ps;
          if (auto j = csa_query(net, q)) {
            ps.insert(std::move(*j));
          }
          return ps;
        }
        case engine_kind::raptor:
        case engine_kind::raptor_ep:
          return raptor_query(net, q, ecfg);
        case engine_kind::tb:
          return tb_query(net, q, ecfg);
        case engine_kind::td_dijkstra: {
          pareto_set ps;
          if (auto j = td_dijkstra_query(net, q)) {
            ps.insert(std::move(*j));
          }
          return ps;
        }
        case engine_kind::oracle:
          return oracle_query(net, q, ecfg);
      }
      return {};
    };
    return r;
  };

  // oracle ground truth for the affected queries, computed once
  engine_config oracle_cfg = base_cfg;
  std::vector<pareto_set> oracle_results;
  oracle_results.reserve(affected.queries.size());
  for (const auto& q : affected.queries) {
    oracle_results.push_back(oracle_query(net, q, oracle_cfg));
  }
  std::size_t journeys_all_total = affected.journeys_sampled_total;

  std::vector<accuracy_report> accuracy;
  for (const auto& name : cfg.engines) {
    auto runner = make_runner(name);
    accuracy.push_back(evaluate_accuracy(runner, oracle_results, affected,
                                         affected.sampled_total, journeys_all_total));
  }

  // timing on the random query set, hypothetical mode
  const auto random_set = gen_queries(tt, cfg.query_seed, cfg.query_count, cfg.query_window);
  std::vector<engine_runner> runners;
  for (const auto& name : cfg.engines) {
    runners.push_back(make_runner(name));
  }
  const auto timing = run_benchmark(runners, random_set.queries, cfg.repetitions);

  pipeline_result res;
  res.manifest = out / "manifest.json";
  res.accuracy_csv = out / "accuracy.csv";
  res.stats_csv = out / "stats.csv";
  res.timing_csv = out / "timing.csv";
  res.report_csv = out / "report.csv";
  res.report_md = out / "report.md";

  save_manifest(cfg, hash, res.manifest);
  write_accuracy_csv(accuracy, res.accuracy_csv);
  const auto stats = compute_compression_stats(shortcuts, projected, projection_seconds);
  write_stats_csv(stats, res.stats_csv, /*include_timing=*/false);
  write_timing_csv(timing, res.timing_csv, update_seconds, prepare_seconds);
  const auto rows = combine_reports(accuracy, timing);
  write_report_csv(rows, res.report_csv);
  write_report_md(rows, res.report_md);
  return res;
}

}  // namespace transit
