#include "relq/pipeline.hpp"

#include <algorithm>
#include <iostream>

#include "relq/baselines.hpp"
#include "relq/evalscore.hpp"
#include "relq/ingest.hpp"
#include "relq/io.hpp"
#include "relq/querify.hpp"
#include "relq/slotfill.hpp"
#include "relq/splits.hpp"
#include "relq/stats.hpp"
#include "relq/util.hpp"
#include "relq/version.hpp"

namespace relq {

namespace {

using json = nlohmann::json;

std::vector<std::string> parse_langs(const std::string& csv) {
  std::vector<std::string> langs;
  for (const std::string& raw : split(csv, ',')) {
    std::string lang = trim(raw);
    if (!lang.empty()) langs.push_back(lang);
  }
  if (langs.empty()) throw FatalError("config", "empty language list");
  return langs;
}

// Inputs the stage actually read, keyed by config name, digested by content.
void write_manifest(const RunContext& ctx, const std::string& stage,
                    const std::vector<std::string>& input_keys, const json& params) {
  json inputs = json::object();
  for (const std::string& key : input_keys) {
    if (!ctx.config.has(key)) continue;
    inputs[key] = "fnv1a64:" + hex64(fnv1a64_file(ctx.config.path_for(key)));
  }
  json manifest{{"tool", "relq"},
                {"version", std::string(kVersion)},
                {"stage", stage},
                {"seed", ctx.seed},
                {"langs", ctx.langs},
                {"inputs", inputs},
                {"params", params}};
  write_json_file(ctx.out_dir / ("manifest." + stage + ".json"), manifest);
}

std::vector<std::string> corpus_keys(const RunContext& ctx) {
  std::vector<std::string> keys = {"kb"};
  for (const std::string& lang : ctx.langs) keys.push_back("corpus." + lang);
  return keys;
}

std::vector<std::string> table_keys() {
  return {"templates", "properties", "locale", "agreement", "abbrev", "pronouns"};
}

struct Resources {
  Kb kb;
  std::map<std::string, std::vector<PageDoc>> corpora;
  std::map<std::string, IngestCounts> corpus_counts;
  IngestCounts kb_counts;
  PropertyCatalog catalog;
  LocaleTable locale;
  AbbrevTable abbrev;
  AgreementTable agreement;
  PronounTable pronouns;
  TemplateSet templates;
};

Resources load_resources(const RunContext& ctx, bool need_templates) {
  Resources r;
  r.kb = Kb(load_kb(ctx.config.path_for("kb"), r.kb_counts));
  for (const std::string& lang : ctx.langs) {
    IngestCounts counts;
    r.corpora[lang] = load_corpus(ctx.config.path_for("corpus." + lang), lang, counts);
    r.corpus_counts[lang] = counts;
  }
  r.catalog = PropertyCatalog::load(ctx.config.path_for("properties"));
  r.locale = LocaleTable::load(ctx.config.path_for("locale"));
  r.abbrev = AbbrevTable::load(ctx.config.path_for("abbrev"));
  if (need_templates) {
    r.agreement = AgreementTable::load(ctx.config.path_for("agreement"));
    r.pronouns = PronounTable::load(ctx.config.path_for("pronouns"));
    r.templates = TemplateSet::load(ctx.config.path_for("templates"));
  }
  return r;
}

json ingest_stage(const RunContext& ctx, Resources& r) {
  json per_lang = json::object();
  for (const std::string& lang : ctx.langs) {
    AlignCounts ac;
    std::vector<DocumentView> views = align(r.kb, r.corpora[lang], lang, ac);
    const IngestCounts& ic = r.corpus_counts[lang];
    per_lang[lang] = json{{"pages", ic.pages},
                          {"pages_malformed", ic.pages_malformed},
                          {"pages_empty", ic.pages_empty},
                          {"views", ac.views},
                          {"kb_only", ac.kb_only},
                          {"corpus_only", ac.corpus_only},
                          {"kb_unlabeled", ac.kb_unlabeled}};
  }
  return json{{"kb",
               json{{"entities", r.kb_counts.kb_entities},
                    {"malformed", r.kb_counts.kb_malformed}}},
              {"languages", per_lang}};
}

struct SlotfillOutput {
  std::vector<ContextRecord> contexts;
  std::vector<Triple> triples;
  json report;
};

SlotfillOutput slotfill_stage(const RunContext& ctx, Resources& r) {
  double ratio = ctx.config.get_double("negative_ratio", 0.2);

  std::vector<std::vector<PositiveContext>> per_language;
  std::vector<ContextRecord> contexts;
  json per_lang_report = json::object();

  for (const std::string& lang : ctx.langs) {
    AlignCounts ac;
    std::vector<DocumentView> views = align(r.kb, r.corpora[lang], lang, ac);
    SlotfillCounts counts;
    std::vector<PositiveContext> positives =
        build_positives(views, r.kb, r.catalog, r.locale, r.abbrev, lang, counts);
    std::vector<NegativeContext> negatives = build_negatives(positives, ratio, ctx.seed, counts);

    for (const PositiveContext& p : positives) {
      ContextRecord c;
      c.triple_id = p.triple_id;
      c.language = p.language;
      c.sentence = p.sentence;
      c.answers = p.answer_strings;
      c.entity1_surface = p.entity1_surface;
      contexts.push_back(std::move(c));
    }
    for (const NegativeContext& n : negatives) {
      ContextRecord c;
      c.triple_id = n.triple_id;
      c.language = n.language;
      c.sentence = n.sentence;
      c.partner_triple_id = n.partner_triple_id;
      contexts.push_back(std::move(c));
    }
    per_lang_report[lang] = counts.to_json();
    per_language.push_back(std::move(positives));
  }

  std::sort(contexts.begin(), contexts.end(), [](const ContextRecord& a, const ContextRecord& b) {
    if (a.triple_id != b.triple_id) return a.triple_id < b.triple_id;
    if (a.language != b.language) return a.language < b.language;
    if (a.is_negative() != b.is_negative()) return !a.is_negative();
    return a.partner_triple_id < b.partner_triple_id;
  });

  SlotfillOutput out;
  out.triples = collect_triples(per_language);
  out.contexts = std::move(contexts);
  out.report = json{{"languages", per_lang_report}, {"triples", out.triples.size()}};
  return out;
}

json querify_stage(const RunContext& ctx, Resources& r, const std::vector<ContextRecord>& contexts,
                   std::vector<RCExample>* examples_out) {
  std::map<std::pair<std::string, std::string>, const PageDoc*> pages;
  for (const auto& [lang, corpus] : r.corpora) {
    for (const PageDoc& p : corpus) pages[{p.qid, lang}] = &p;
  }
  QuerifyCounts counts;
  std::vector<RCExample> examples =
      querify_dataset(contexts, r.kb, pages, r.templates, r.agreement, r.pronouns, counts);
  write_examples(ctx.out_dir / "examples.jsonl", examples);
  if (examples_out != nullptr) *examples_out = std::move(examples);
  return counts.to_json();
}

std::map<std::string, std::set<std::string>> load_vocabs(const RunContext& ctx) {
  std::map<std::string, std::set<std::string>> vocab;
  for (const std::string& lang : ctx.langs) {
    std::string key = "vocab." + lang;
    if (!ctx.config.has(key)) continue;
    std::set<std::string> words;
    for_each_line(ctx.config.path_for(key), [&](size_t, const std::string& line) {
      if (!line.empty()) words.insert(line);
    });
    vocab[lang] = std::move(words);
  }
  return vocab;
}

}  // namespace

RunContext make_run_context(Config config, const std::optional<uint64_t>& seed_override,
                            const std::optional<std::string>& langs_override,
                            const std::filesystem::path& out_dir) {
  RunContext ctx;
  ctx.langs = parse_langs(langs_override.value_or(config.get("langs", "en,de,es,fr,it")));
  ctx.seed = seed_override.value_or(
      static_cast<uint64_t>(std::stoull(config.get("seed", "0"))));
  ctx.config = std::move(config);
  ctx.out_dir = out_dir;
  std::filesystem::create_directories(ctx.out_dir);
  return ctx;
}

json run_ingest(const RunContext& ctx) {
  Resources r = load_resources(ctx, false);
  json report = ingest_stage(ctx, r);
  write_json_file(ctx.out_dir / "ingest_report.json", report);
  write_manifest(ctx, "ingest", corpus_keys(ctx), json::object());
  return report;
}

json run_slotfill(const RunContext& ctx) {
  Resources r = load_resources(ctx, false);
  SlotfillOutput out = slotfill_stage(ctx, r);
  write_triples(ctx.out_dir / "triples.jsonl", out.triples);
  write_contexts(ctx.out_dir / "contexts.jsonl", out.contexts);
  write_json_file(ctx.out_dir / "slotfill_report.json", out.report);

  std::vector<std::string> keys = corpus_keys(ctx);
  keys.insert(keys.end(), {"properties", "locale", "abbrev"});
  write_manifest(ctx, "slotfill", keys,
                 json{{"negative_ratio", ctx.config.get("negative_ratio", "0.2")}});
  return out.report;
}

json run_querify(const RunContext& ctx) {
  Resources r = load_resources(ctx, true);
  std::vector<ContextRecord> contexts = read_contexts(ctx.out_dir / "contexts.jsonl");
  json report = querify_stage(ctx, r, contexts, nullptr);
  write_json_file(ctx.out_dir / "querify_report.json", report);

  std::vector<std::string> keys = corpus_keys(ctx);
  std::vector<std::string> tables = table_keys();
  keys.insert(keys.end(), tables.begin(), tables.end());
  write_manifest(ctx, "querify", keys, json::object());
  return report;
}

json run_build(const RunContext& ctx) {
  Resources r = load_resources(ctx, true);

  json ingest_report = ingest_stage(ctx, r);
  write_json_file(ctx.out_dir / "ingest_report.json", ingest_report);

  SlotfillOutput slot = slotfill_stage(ctx, r);
  write_triples(ctx.out_dir / "triples.jsonl", slot.triples);
  write_contexts(ctx.out_dir / "contexts.jsonl", slot.contexts);
  write_json_file(ctx.out_dir / "slotfill_report.json", slot.report);

  json querify_report = querify_stage(ctx, r, slot.contexts, nullptr);
  write_json_file(ctx.out_dir / "querify_report.json", querify_report);

  std::vector<std::string> keys = corpus_keys(ctx);
  std::vector<std::string> tables = table_keys();
  keys.insert(keys.end(), tables.begin(), tables.end());
  write_manifest(ctx, "build", keys,
                 json{{"negative_ratio", ctx.config.get("negative_ratio", "0.2")}});

  return json{{"ingest", ingest_report}, {"slotfill", slot.report}, {"querify", querify_report}};
}

json run_split(const RunContext& ctx, const SplitOptions& options) {
  std::vector<RCExample> examples = read_examples(ctx.out_dir / "examples.jsonl");
  json report;

  if (options.mode == "unent") {
    UnentSplit unent = split_unent(examples, ctx.langs, options.fractions, ctx.seed,
                                   options.template_holdout);
    static const std::array<std::string, 3> kPartNames = {"train", "dev", "test"};
    json langs_report = json::object();
    for (const std::string& lang : ctx.langs) {
      const auto& ids = unent.example_ids.at(lang);
      const auto& ents = unent.entities.at(lang);
      json lang_report;
      for (size_t part = 0; part < 3; ++part) {
        write_id_file(ctx.out_dir / ("unent_" + lang + "_" + kPartNames[part] + ".ids"),
                      ids[part]);
        lang_report[kPartNames[part]] =
            json{{"examples", ids[part].size()}, {"entities", ents[part].size()}};
      }
      langs_report[lang] = lang_report;
    }

    ParallelSets parallel = build_parallel_testsets(examples, unent, options.pivot, ctx.langs);
    json parallel_report = json::object();
    for (const auto& [lang, sets] : parallel.example_ids) {
      write_id_file(ctx.out_dir / ("parallel_" + options.pivot + "-" + lang + "_dev.ids"),
                    sets[0]);
      write_id_file(ctx.out_dir / ("parallel_" + options.pivot + "-" + lang + "_test.ids"),
                    sets[1]);
      if (sets[0].empty() && sets[1].empty()) {
        std::cerr << "warning: empty parallel intersection for " << options.pivot << "-" << lang
                  << "\n";
      }
      parallel_report[lang] = json{{"dev", sets[0].size()}, {"test", sets[1].size()}};
    }

    json subsample_report = json::object();
    for (uint64_t n : options.subsample_sizes) {
      for (const std::string& lang : ctx.langs) {
        const auto& train = unent.example_ids.at(lang)[0];
        bool truncated = false;
        std::vector<std::string> sample = subsample(train, n, ctx.seed ^ fnv1a64(lang), &truncated);
        if (truncated) {
          std::cerr << "warning: subsample " << n << " exceeds train size for " << lang << " ("
                    << train.size() << "); returning all\n";
        }
        write_id_file(ctx.out_dir / ("unent_" + lang + "_train_n" + std::to_string(n) + ".ids"),
                      sample);
        subsample_report[std::to_string(n)][lang] = sample.size();
      }
    }

    report = json{{"mode", "unent"},
                  {"languages", langs_report},
                  {"parallel", parallel_report},
                  {"subsamples", subsample_report},
                  {"pivot", options.pivot}};
  } else if (options.mode == "unrel") {
    UnrelSplit unrel = fold_unrel(examples, ctx.langs, options.folds, options.peek, ctx.seed);
    std::string folds_out;
    json folds_report = json::array();
    for (const UnrelFold& f : unrel.folds) {
      folds_out += f.manifest_json().dump();
      folds_out += '\n';
      write_id_file(ctx.out_dir / ("unrel_r" + std::to_string(f.round) + "_" + f.language +
                                   "_train.ids"),
                    f.train_ids);
      write_id_file(ctx.out_dir / ("unrel_r" + std::to_string(f.round) + "_" + f.language +
                                   "_test.ids"),
                    f.test_ids);
      folds_report.push_back(json{{"round", f.round},
                                  {"language", f.language},
                                  {"train", f.train_ids.size()},
                                  {"test", f.test_ids.size()}});
    }
    write_text_file(ctx.out_dir / "folds.jsonl", folds_out);
    report = json{{"mode", "unrel"},
                  {"k", options.folds},
                  {"peek", options.peek},
                  {"folds", folds_report}};
  } else {
    throw FatalError("split", "unknown mode: " + options.mode);
  }

  write_json_file(ctx.out_dir / "split_report.json", report);
  write_manifest(ctx, "split", {},
                 json{{"mode", options.mode},
                      {"fractions", options.fractions},
                      {"folds", options.folds},
                      {"peek", options.peek},
                      {"pivot", options.pivot},
                      {"template_holdout", options.template_holdout},
                      {"examples", "fnv1a64:" + hex64(fnv1a64_file(ctx.out_dir / "examples.jsonl"))}});
  return report;
}

json run_stats(const RunContext& ctx, const StatsOptions& options) {
  std::vector<ContextRecord> contexts = read_contexts(ctx.out_dir / "contexts.jsonl");
  std::vector<RCExample> examples = read_examples(ctx.out_dir / "examples.jsonl");

  json counts = json::object();
  for (const auto& [lang, row] : count_table(contexts, examples)) {
    counts[lang] = row.to_json();
  }
  write_json_file(ctx.out_dir / "counts.json", counts);

  json top = json::object();
  for (const auto& [lang, ranked] : top_properties(contexts)) {
    json arr = json::array();
    for (const auto& [pid, n] : ranked) arr.push_back(json::array({pid, n}));
    top[lang] = arr;
  }
  write_json_file(ctx.out_dir / "top_properties.json", top);

  OverlapMatrix overlap = overlap_matrix(contexts, ctx.langs, options.pid_filter);
  write_json_file(ctx.out_dir / "overlap.json", overlap.to_json());

  // Prefer unseen-entity split manifests when a prior split run left them.
  std::map<std::string, std::map<std::string, std::set<std::string>>> split_ids;
  static const std::array<std::string, 3> kPartNames = {"train", "dev", "test"};
  for (const std::string& lang : ctx.langs) {
    bool any = false;
    for (const std::string& part : kPartNames) {
      std::filesystem::path p = ctx.out_dir / ("unent_" + lang + "_" + part + ".ids");
      if (!std::filesystem::exists(p)) continue;
      any = true;
      auto ids = read_id_file(p);
      split_ids[lang][part] = std::set<std::string>(ids.begin(), ids.end());
    }
    if (!any) {
      auto& all = split_ids[lang]["all"];
      for (const RCExample& e : examples) {
        if (e.language == lang) all.insert(e.id);
      }
    }
  }
  json lengths = json::object();
  for (const auto& [lang, by_split] : context_length_stats(examples, split_ids)) {
    lengths[lang] = by_split;
  }
  write_json_file(ctx.out_dir / "context_lengths.json", lengths);

  auto vocab = load_vocabs(ctx);
  if (!vocab.empty()) {
    json coverage = json::object();
    for (const auto& [lang, row] : vocab_coverage(examples, vocab)) {
      coverage[lang] = row.to_json();
    }
    write_json_file(ctx.out_dir / "coverage.json", coverage);
  }

  json params{{"pid", options.pid_filter.has_value() ? json(*options.pid_filter) : json(nullptr)}};
  std::vector<std::string> vocab_keys;
  for (const std::string& lang : ctx.langs) vocab_keys.push_back("vocab." + lang);
  write_manifest(ctx, "stats", vocab_keys, params);
  return json{{"counts", counts}};
}

namespace {

// Manifest variant for the file-to-file stages that run without a config.
void write_file_manifest(const std::filesystem::path& out_file, const std::string& stage,
                         const std::map<std::string, std::filesystem::path>& inputs,
                         const json& params) {
  json digests = json::object();
  for (const auto& [name, path] : inputs) {
    digests[name] = "fnv1a64:" + hex64(fnv1a64_file(path));
  }
  json manifest{{"tool", "relq"},
                {"version", std::string(kVersion)},
                {"stage", stage},
                {"inputs", digests},
                {"params", params}};
  std::filesystem::path dir =
      out_file.has_parent_path() ? out_file.parent_path() : std::filesystem::path(".");
  write_json_file(dir / ("manifest." + stage + ".json"), manifest);
}

}  // namespace

json run_score(const std::filesystem::path& gold_path, const std::filesystem::path& pred_path,
               const std::optional<std::string>& group_by, bool case_sensitive,
               const std::optional<std::filesystem::path>& report_path) {
  std::vector<RCExample> gold = read_examples(gold_path);
  std::vector<Prediction> preds = read_predictions(pred_path);

  EvalReport overall = score(gold, preds, case_sensitive);
  if (overall.defaulted_nil > 0) {
    std::cerr << "warning: " << overall.defaulted_nil
              << " gold examples had no prediction; scored as NIL\n";
  }
  json report = overall.to_json();
  if (group_by.has_value()) {
    std::optional<GroupKey> key = parse_group_key(*group_by);
    if (!key.has_value()) throw FatalError("score", "unknown group key: " + *group_by);
    json groups = json::object();
    for (const auto& [group, r] : score_by_group(gold, preds, *key, case_sensitive)) {
      groups[group] = r.to_json();
    }
    report["groups"] = groups;
    report["group_by"] = *group_by;
  }
  if (report_path.has_value()) {
    write_json_file(*report_path, report);
    write_file_manifest(*report_path, "score", {{"gold", gold_path}, {"pred", pred_path}},
                        json{{"group_by", group_by.has_value() ? json(*group_by) : json(nullptr)},
                             {"case_sensitive", case_sensitive}});
  }
  return report;
}

json run_baseline(const std::filesystem::path& gold_path, const std::string& mode,
                  const std::filesystem::path& pred_path) {
  std::vector<RCExample> gold = read_examples(gold_path);
  std::vector<Prediction> preds;
  if (mode == "oracle") {
    preds = oracle_predict(gold);
  } else if (mode == "nil") {
    preds = nil_predict(gold);
  } else if (mode == "heuristic") {
    preds = heuristic_predict(gold);
  } else {
    throw FatalError("baseline", "unknown mode: " + mode);
  }
  write_predictions(pred_path, preds);
  write_file_manifest(pred_path, "baseline", {{"gold", gold_path}}, json{{"mode", mode}});
  uint64_t nonnil = 0;
  for (const Prediction& p : preds) nonnil += p.answer.has_value();
  return json{{"mode", mode}, {"predictions", preds.size()}, {"nonnil", nonnil}};
}

}  // namespace relq
