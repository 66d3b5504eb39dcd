#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "relq/config.hpp"

namespace relq {

// Everything a stage needs: the configuration, the resolved language list,
// the seed and the output directory. Stages communicate through files only;
// each writes a manifest.<stage>.json recording its inputs' content digests
// and parameters, so equal manifests imply byte-equal outputs.
struct RunContext {
  Config config;
  std::vector<std::string> langs;
  uint64_t seed = 0;
  std::filesystem::path out_dir;
};

RunContext make_run_context(Config config, const std::optional<uint64_t>& seed_override,
                            const std::optional<std::string>& langs_override,
                            const std::filesystem::path& out_dir);

// Loads and aligns, writes ingest_report.json.
nlohmann::json run_ingest(const RunContext& ctx);

// Distant supervision: writes triples.jsonl, contexts.jsonl, slotfill_report.json.
nlohmann::json run_slotfill(const RunContext& ctx);

// Template expansion: writes examples.jsonl, querify_report.json.
nlohmann::json run_querify(const RunContext& ctx);

// ingest + slotfill + querify in one pass.
nlohmann::json run_build(const RunContext& ctx);

struct SplitOptions {
  std::string mode = "unent";  // unent | unrel
  std::array<double, 3> fractions = {0.8, 0.1, 0.1};
  int folds = 5;
  bool peek = false;
  std::string pivot = "en";
  std::vector<uint64_t> subsample_sizes;
  double template_holdout = 0.0;
};

nlohmann::json run_split(const RunContext& ctx, const SplitOptions& options);

struct StatsOptions {
  std::optional<std::string> pid_filter;
};

nlohmann::json run_stats(const RunContext& ctx, const StatsOptions& options);

nlohmann::json run_score(const std::filesystem::path& gold_path,
                         const std::filesystem::path& pred_path,
                         const std::optional<std::string>& group_by, bool case_sensitive,
                         const std::optional<std::filesystem::path>& report_path);

nlohmann::json run_baseline(const std::filesystem::path& gold_path, const std::string& mode,
                            const std::filesystem::path& pred_path);

}  // namespace relq
