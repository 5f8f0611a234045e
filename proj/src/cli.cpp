#include "frim/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "frim/dataset.hpp"
#include "frim/format.hpp"
#include "frim/fuzzifier.hpp"
#include "frim/generator.hpp"
#include "frim/miner.hpp"
#include "frim/oracle.hpp"
#include "frim/result_io.hpp"
#include "frim/running_example.hpp"

namespace frim {

namespace {

struct RunConfig {
  std::string input;
  std::string membership;
  std::string min_rare = "0.25";
  std::string max_freq = "0.5";
  bool absolute = false;
  std::string output;
  std::string format = "text";
  bool demo = false;
  int threads = 1;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::string settings;
  std::size_t synthetic = 0;
  bool inject_fault = false;
};

double parse_threshold(const std::string& text, const char* what) {
  std::string body = text;
  double scale = 1.0;
  if (!body.empty() && body.back() == '%') {
    body.pop_back();
    scale = 0.01;
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(body, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (body.empty() || used != body.size())
    throw ValidationError(std::string("invalid ") + what + " '" + text + "'");
  return v * scale;
}

MiningParams params_of(const RunConfig& cfg) {
  return {parse_threshold(cfg.min_rare, "--min-rare"), parse_threshold(cfg.max_freq, "--max-freq"),
          cfg.absolute ? ThresholdMode::absolute : ThresholdMode::relative};
}

MembershipFunctionConfig membership_of(const RunConfig& cfg) {
  if (cfg.membership.empty()) return MembershipFunctionConfig::default_config();
  return parse_membership_config_file(cfg.membership);
}

std::string dataset_name(const RunConfig& cfg) {
  if (cfg.demo) return "demo";
  if (cfg.synthetic > 0) return "synthetic-" + std::to_string(cfg.synthetic);
  return std::filesystem::path(cfg.input).filename().string();
}

QuantitativeDatabase database_of(const RunConfig& cfg) {
  if (cfg.demo) return running_example();
  if (cfg.synthetic > 0) {
    SyntheticShape shape;
    shape.transactions = cfg.synthetic;
    return synthetic_database(cfg.seed, shape);
  }
  if (cfg.input.empty()) throw ValidationError("no input database (use --input or --demo)");
  return parse_database_file(cfg.input);
}

// Output is rendered fully before the destination is opened, so a failed run
// never leaves a partial file behind.
void emit(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.output.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
  if (!file) throw ValidationError("cannot open '" + cfg.output + "' for writing");
  file << payload;
  if (!file) throw ValidationError("failed writing '" + cfg.output + "'");
}

int cmd_mine(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto format = parse_output_format(cfg.format);
  const auto config = membership_of(cfg);
  const auto params = params_of(cfg);
  const auto db = database_of(cfg);
  MinerOptions options;
  options.threads = cfg.threads;
  const auto result = mine(db, config, params, options);

  std::ostringstream payload;
  write_result(payload, result, format);
  emit(cfg, payload.str(), out);

  const auto& s = result.stats;
  err << "patterns " << result.fris.size() << " candidates " << s.candidates << " lists "
      << s.lists_constructed << " pruned " << s.joins_pruned << " elapsed_ms "
      << format_number(s.elapsed_ms) << " peak_memory_bytes " << s.peak_memory_bytes << '\n';
  return kExitOk;
}

int cmd_fuzzify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto format = parse_output_format(cfg.format);
  const auto config = membership_of(cfg);
  const auto params = params_of(cfg);
  const auto db = database_of(cfg);
  const auto thresholds = resolve_thresholds(params, db.size());
  const auto fz = fuzzify_database(db, config, thresholds.min_rare_abs, cfg.threads);

  std::ostringstream payload;
  write_fuzzification(payload, db, config, fz, format);
  emit(cfg, payload.str(), out);
  if (fz.revised.empty()) err << "no retained terms\n";
  return kExitOk;
}

// Miner versus oracle on one database; returns the diff.
ResultDiff check_one(const QuantitativeDatabase& db, const MembershipFunctionConfig& config,
                     const Thresholds& thresholds, const RunConfig& cfg, std::size_t& compared) {
  const auto fz = fuzzify_database(db, config, thresholds.min_rare_abs);
  const auto oracle = brute_force_mine(fz.revised, thresholds);
  MinerOptions options;
  options.threads = cfg.threads;
  auto mined = mine_revised(fz.revised, thresholds, options);
  if (cfg.inject_fault && !mined.fris.empty()) mined.fris.front().support += 0.1;
  compared += oracle.fris.size();
  return diff_fris(oracle.fris, mined.fris, fz.revised);
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto config = membership_of(cfg);
  std::ostringstream payload;
  std::size_t compared = 0;

  if (cfg.random > 0) {
    for (std::size_t i = 0; i < cfg.random; ++i) {
      const auto seed = cfg.seed + i;
      std::mt19937_64 rng(seed);
      const auto db = random_small_database(rng);
      const auto thresholds = random_band(rng, db.size());
      const auto diff = check_one(db, config, thresholds, cfg, compared);
      if (!diff.equal) {
        payload << "mismatch at seed " << seed << " (band " << format_number(thresholds.min_rare_abs)
                << ".." << format_number(thresholds.max_freq_abs) << ")\n--- oracle\n+++ miner\n";
        for (const auto& l : diff.lines) payload << l << '\n';
        write_database(payload, db);
        emit(cfg, payload.str(), out);
        return kExitMismatch;
      }
    }
    payload << "ok: " << cfg.random << " random databases, " << compared << " itemsets agree\n";
    emit(cfg, payload.str(), out);
    return kExitOk;
  }

  const auto db = database_of(cfg);
  const auto thresholds = resolve_thresholds(params_of(cfg), db.size());
  const auto diff = check_one(db, config, thresholds, cfg, compared);
  if (!diff.equal) {
    payload << "--- oracle\n+++ miner\n";
    for (const auto& l : diff.lines) payload << l << '\n';
    emit(cfg, payload.str(), out);
    err << "miner and oracle disagree\n";
    return kExitMismatch;
  }
  payload << "ok: " << compared << " itemsets agree\n";
  emit(cfg, payload.str(), out);
  return kExitOk;
}

std::vector<std::pair<double, double>> parse_settings(const std::string& text) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ValidationError("bench setting '" + item + "' must be minSup:maxSup");
    out.emplace_back(parse_threshold(item.substr(0, colon), "minSup"),
                     parse_threshold(item.substr(colon + 1), "maxSup"));
  }
  return out;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto config = membership_of(cfg);
  const auto settings = parse_settings(cfg.settings);
  const auto mode = cfg.absolute ? ThresholdMode::absolute : ThresholdMode::relative;

  std::ostringstream payload;
  payload << "dataset,minSup,maxSup,patterns,elapsed_ms,peak_mem_estimate\n";
  if (settings.empty()) {
    emit(cfg, payload.str(), out);
    return kExitOk;
  }
  for (const auto& [lo, hi] : settings) resolve_thresholds({lo, hi, mode}, 1);

  const auto parse_start = std::chrono::steady_clock::now();
  const auto db = database_of(cfg);
  const auto parse_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - parse_start)
                            .count();
  err << "load_ms " << format_number(parse_ms) << " transactions " << db.size() << '\n';

  const auto name = dataset_name(cfg);
  MinerOptions options;
  options.threads = cfg.threads;
  for (const auto& [lo, hi] : settings) {
    const auto start = std::chrono::steady_clock::now();
    const auto result = mine(db, config, {lo, hi, mode}, options);
    const auto ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    payload << name << ',' << format_number(lo) << ',' << format_number(hi) << ','
            << result.fris.size() << ',' << format_number(std::round(ms * 1000.0) / 1000.0) << ','
            << result.stats.peak_memory_bytes << '\n';
  }
  emit(cfg, payload.str(), out);
  return kExitOk;
}

int cmd_stats(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto format = parse_output_format(cfg.format);
  const auto db = database_of(cfg);
  std::ostringstream payload;
  write_stats(payload, database_stats(db), format);
  emit(cfg, payload.str(), out);
  return kExitOk;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool thresholds, bool format) {
  sub->add_option("--input,-i", cfg.input, "Quantitative transaction file");
  sub->add_flag("--demo", cfg.demo, "Use the built-in eight-transaction example");
  sub->add_option("--membership,-m", cfg.membership, "Membership config (default L=1 M=6 H=11)");
  sub->add_option("--output,-o", cfg.output, "Output path (default stdout)");
  if (thresholds) {
    sub->add_option("--min-rare", cfg.min_rare, "Minimum rare support (fraction, N% or absolute)");
    sub->add_option("--max-freq", cfg.max_freq, "Maximum frequent support (exclusive)");
    sub->add_flag("--absolute", cfg.absolute, "Interpret thresholds as absolute fuzzy supports");
  }
  if (format)
    sub->add_option("--format,-f", cfg.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Fuzzy rare itemset miner"};
  app.require_subcommand(1);

  auto* mine_cmd = app.add_subcommand("mine", "Mine fuzzy rare itemsets");
  add_common(mine_cmd, cfg, true, true);
  mine_cmd->add_option("--threads", cfg.threads, "Worker threads (1 = serial reference path)");

  auto* fuzzify_cmd = app.add_subcommand("fuzzify", "Dump transformed and revised databases");
  add_common(fuzzify_cmd, cfg, true, true);

  auto* check_cmd = app.add_subcommand("check", "Compare the miner against the brute-force oracle");
  add_common(check_cmd, cfg, true, false);
  check_cmd->add_option("--random", cfg.random, "Check N random small databases instead");
  check_cmd->add_option("--seed", cfg.seed, "First seed for --random");
  check_cmd->add_option("--threads", cfg.threads, "Worker threads for the miner");
  check_cmd->add_flag("--inject-fault", cfg.inject_fault,
                      "Perturb one mined support (exercises the mismatch path)");

  auto* bench_cmd = app.add_subcommand("bench", "Time mining over threshold settings, CSV out");
  add_common(bench_cmd, cfg, false, false);
  bench_cmd->add_flag("--absolute", cfg.absolute, "Interpret settings as absolute fuzzy supports");
  bench_cmd->add_option("--settings", cfg.settings, "Comma-separated minSup:maxSup pairs");
  bench_cmd->add_option("--synthetic", cfg.synthetic,
                        "Generate a retail-like database with N transactions");
  bench_cmd->add_option("--seed", cfg.seed, "Seed for --synthetic");
  bench_cmd->add_option("--threads", cfg.threads, "Worker threads");

  auto* stats_cmd = app.add_subcommand("stats", "Print database statistics");
  add_common(stats_cmd, cfg, false, true);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("frim");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (*mine_cmd) return cmd_mine(cfg, out, err);
    if (*fuzzify_cmd) return cmd_fuzzify(cfg, out, err);
    if (*check_cmd) return cmd_check(cfg, out, err);
    if (*bench_cmd) return cmd_bench(cfg, out, err);
    if (*stats_cmd) return cmd_stats(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace frim
