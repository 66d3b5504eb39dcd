#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "relq/fixture.hpp"
#include "relq/pipeline.hpp"
#include "relq/util.hpp"
#include "relq/version.hpp"

namespace {

struct GlobalFlags {
  std::string config_path;
  std::optional<uint64_t> seed;
  std::optional<std::string> langs;
  std::string out_dir = "out";
};

void add_global_flags(CLI::App* cmd, GlobalFlags& flags, bool config_required = true) {
  auto* config = cmd->add_option("--config", flags.config_path, "configuration file");
  if (config_required) config->required();
  cmd->add_option("--seed", flags.seed, "seed overriding the config");
  cmd->add_option("--langs", flags.langs, "comma-separated language codes overriding the config");
  cmd->add_option("--out", flags.out_dir, "output directory");
}

relq::RunContext context_from(const GlobalFlags& flags) {
  relq::Config config = relq::Config::load(flags.config_path);
  return relq::make_run_context(std::move(config), flags.seed, flags.langs, flags.out_dir);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multilingual reading-comprehension relation extraction dataset builder"};
  app.set_version_flag("--version", std::string(relq::kVersion));
  app.require_subcommand(1);

  GlobalFlags ingest_flags, slotfill_flags, querify_flags, build_flags, split_flags, stats_flags;

  CLI::App* ingest = app.add_subcommand("ingest", "validate and align the inputs");
  add_global_flags(ingest, ingest_flags);

  CLI::App* slotfill = app.add_subcommand("slotfill", "build positive and negative contexts");
  add_global_flags(slotfill, slotfill_flags);
  std::optional<double> negative_ratio;
  slotfill->add_option("--negative-ratio", negative_ratio, "negatives per positive");

  CLI::App* querify = app.add_subcommand("querify", "expand contexts into question examples");
  add_global_flags(querify, querify_flags);

  CLI::App* build = app.add_subcommand("build", "ingest + slotfill + querify");
  add_global_flags(build, build_flags);
  std::optional<double> build_negative_ratio;
  build->add_option("--negative-ratio", build_negative_ratio, "negatives per positive");

  CLI::App* split_cmd = app.add_subcommand("split", "write split manifests");
  add_global_flags(split_cmd, split_flags);
  relq::SplitOptions split_options;
  split_cmd->add_option("--mode", split_options.mode, "unent or unrel")
      ->check(CLI::IsMember({"unent", "unrel"}));
  std::string fractions_csv;
  split_cmd->add_option("--fractions", fractions_csv, "train,dev,test fractions");
  std::optional<int> folds;
  split_cmd->add_option("--folds", folds, "fold count for unrel");
  std::optional<bool> peek;
  split_cmd->add_flag("--peek,!--no-peek", peek,
                      "let unrel test relations appear in other languages' training data");
  split_cmd->add_option("--pivot", split_options.pivot, "pivot language for parallel sets");
  split_cmd->add_option("--subsample", split_options.subsample_sizes,
                        "training subsample sizes (repeatable)");
  split_cmd->add_option("--template-holdout", split_options.template_holdout,
                        "fraction of templates reserved for dev/test");

  CLI::App* stats = app.add_subcommand("stats", "descriptive statistics of a built dataset");
  add_global_flags(stats, stats_flags);
  std::string pid_filter;
  stats->add_option("--pid", pid_filter, "restrict the overlap matrix to one property");

  CLI::App* score = app.add_subcommand("score", "score predictions against gold examples");
  std::string gold_path, pred_path, group_by, report_out;
  bool case_sensitive = false;
  score->add_option("--gold", gold_path, "gold examples.jsonl")->required();
  score->add_option("--pred", pred_path, "predictions jsonl")->required();
  score->add_option("--by", group_by, "per-group breakdown: pid, language or template");
  score->add_option("--out", report_out, "also write the report to this file");
  score->add_flag("--case-sensitive", case_sensitive, "compare answers case-sensitively");

  CLI::App* baseline = app.add_subcommand("baseline", "deterministic reference predictors");
  std::string baseline_gold, baseline_mode = "nil", baseline_out = "predictions.jsonl";
  baseline->add_option("--gold", baseline_gold, "gold examples.jsonl")->required();
  baseline->add_option("--mode", baseline_mode, "oracle, nil or heuristic")
      ->check(CLI::IsMember({"oracle", "nil", "heuristic"}));
  baseline->add_option("--out", baseline_out, "predictions output path");

  CLI::App* fixture = app.add_subcommand("fixture", "write the bundled demo corpus");
  std::string fixture_out = "fixtures";
  std::string fixture_data = "data";
  fixture->add_option("--out", fixture_out, "output directory");
  fixture->add_option("--data", fixture_data, "directory holding the shipped data tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors exit 1; --help/--version exit 0
  }

  try {
    if (ingest->parsed()) {
      relq::run_ingest(context_from(ingest_flags));
    } else if (slotfill->parsed()) {
      relq::RunContext ctx = context_from(slotfill_flags);
      if (negative_ratio.has_value()) {
        ctx.config.set("negative_ratio", relq::canonical_decimal(*negative_ratio));
      }
      relq::run_slotfill(ctx);
    } else if (querify->parsed()) {
      relq::run_querify(context_from(querify_flags));
    } else if (build->parsed()) {
      relq::RunContext ctx = context_from(build_flags);
      if (build_negative_ratio.has_value()) {
        ctx.config.set("negative_ratio", relq::canonical_decimal(*build_negative_ratio));
      }
      relq::run_build(ctx);
    } else if (split_cmd->parsed()) {
      relq::RunContext ctx = context_from(split_flags);
      if (!fractions_csv.empty()) {
        auto parts = relq::split(fractions_csv, ',');
        if (parts.size() != 3) throw relq::FatalError("split", "--fractions needs 3 values");
        for (size_t i = 0; i < 3; ++i) split_options.fractions[i] = std::stod(parts[i]);
      } else {
        auto parts = relq::split(ctx.config.get("fractions", "0.8,0.1,0.1"), ',');
        if (parts.size() == 3) {
          for (size_t i = 0; i < 3; ++i) split_options.fractions[i] = std::stod(parts[i]);
        }
      }
      split_options.folds = folds.value_or(ctx.config.get_int("folds", 5));
      split_options.peek = peek.value_or(ctx.config.get_bool("peek", false));
      relq::run_split(ctx, split_options);
    } else if (stats->parsed()) {
      relq::StatsOptions options;
      if (!pid_filter.empty()) options.pid_filter = pid_filter;
      relq::run_stats(context_from(stats_flags), options);
    } else if (score->parsed()) {
      std::optional<std::string> by;
      if (!group_by.empty()) by = group_by;
      std::optional<std::filesystem::path> out;
      if (!report_out.empty()) out = report_out;
      nlohmann::json report = relq::run_score(gold_path, pred_path, by, case_sensitive, out);
      std::cout << report.dump(2) << "\n";
    } else if (baseline->parsed()) {
      nlohmann::json report = relq::run_baseline(baseline_gold, baseline_mode, baseline_out);
      std::cout << report.dump(2) << "\n";
    } else if (fixture->parsed()) {
      relq::write_fixture(relq::FixtureOptions{fixture_out, fixture_data});
    }
  } catch (const relq::FatalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
