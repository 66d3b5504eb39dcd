#include "relq/splits.hpp"

#include <algorithm>
#include <cmath>

#include "relq/slotfill.hpp"
#include "relq/util.hpp"

namespace relq {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

UnentSplit split_unent(const std::vector<RCExample>& examples,
                       const std::vector<std::string>& langs, std::array<double, 3> fractions,
                       uint64_t seed, double template_holdout) {
  double total = fractions[0] + fractions[1] + fractions[2];
  if (std::abs(total - 1.0) > 1e-9) {
    throw FatalError("split", "fractions must sum to 1");
  }

  UnentSplit out;
  for (const std::string& lang : langs) {
    std::vector<std::string> entity_pool;
    for (const RCExample& e : examples) {
      if (e.language == lang) entity_pool.push_back(entity1_of_triple(e.triple_id));
    }
    entity_pool = sorted_unique(std::move(entity_pool));
    if (entity_pool.size() < 3) {
      throw FatalError("split", "insufficient-entities for language " + lang + ": " +
                                    std::to_string(entity_pool.size()));
    }

    seeded_shuffle(entity_pool, seed ^ fnv1a64("unent|" + lang));
    size_t n = entity_pool.size();
    size_t b1 = static_cast<size_t>(std::llround(fractions[0] * static_cast<double>(n)));
    size_t b2 = static_cast<size_t>(
        std::llround((fractions[0] + fractions[1]) * static_cast<double>(n)));
    b1 = std::min(b1, n);
    b2 = std::min(std::max(b2, b1), n);

    auto& parts = out.entities[lang];
    for (size_t i = 0; i < n; ++i) {
      size_t part = i < b1 ? 0 : i < b2 ? 1 : 2;
      parts[part].insert(entity_pool[i]);
    }

    std::set<std::string> holdout;
    if (template_holdout > 0.0) {
      std::vector<std::string> template_pool;
      for (const RCExample& e : examples) {
        if (e.language == lang) template_pool.push_back(e.template_id);
      }
      template_pool = sorted_unique(std::move(template_pool));
      seeded_shuffle(template_pool, seed ^ fnv1a64("unent-tmpl|" + lang));
      size_t keep = static_cast<size_t>(
          std::llround(template_holdout * static_cast<double>(template_pool.size())));
      for (size_t i = 0; i < keep && i < template_pool.size(); ++i) {
        holdout.insert(template_pool[i]);
      }
      out.holdout_templates[lang] = holdout;
    }

    auto& ids = out.example_ids[lang];
    for (const RCExample& e : examples) {
      if (e.language != lang) continue;
      std::string e1 = entity1_of_triple(e.triple_id);
      size_t part = parts[0].count(e1) ? 0 : parts[1].count(e1) ? 1 : 2;
      if (!holdout.empty()) {
        bool held = holdout.count(e.template_id) > 0;
        // Held-out templates appear only at evaluation time.
        if (part == 0 && held) continue;
        if (part != 0 && !held) continue;
      }
      ids[part].push_back(e.id);
    }
    for (auto& part : ids) std::sort(part.begin(), part.end());
  }
  return out;
}

ParallelSets build_parallel_testsets(const std::vector<RCExample>& examples,
                                     const UnentSplit& unent, const std::string& pivot,
                                     const std::vector<std::string>& langs) {
  std::map<std::string, std::map<std::string, std::vector<const RCExample*>>> by_lang_triple;
  for (const RCExample& e : examples) {
    by_lang_triple[e.language][e.triple_id].push_back(&e);
  }

  auto pivot_it = unent.entities.find(pivot);
  if (pivot_it == unent.entities.end()) {
    throw FatalError("split", "pivot language has no unseen-entity split: " + pivot);
  }
  const std::set<std::string>& pivot_train_entities =
      pivot_it->second[static_cast<size_t>(SplitPart::Train)];
  const auto& pivot_triples = by_lang_triple[pivot];

  ParallelSets out;
  for (const std::string& lang : langs) {
    if (lang == pivot) continue;
    auto ids_it = unent.example_ids.find(lang);
    if (ids_it == unent.example_ids.end()) continue;

    std::map<std::string, const RCExample*> lang_examples;
    for (const auto& [triple, exs] : by_lang_triple[lang]) {
      (void)triple;
      for (const RCExample* e : exs) lang_examples.emplace(e->id, e);
    }

    for (size_t part : {static_cast<size_t>(SplitPart::Dev), static_cast<size_t>(SplitPart::Test)}) {
      size_t slot = part - 1;  // dev -> 0, test -> 1
      for (const std::string& id : ids_it->second[part]) {
        const RCExample* e = lang_examples.at(id);
        bool shared = pivot_triples.count(e->triple_id) > 0;
        bool leaked = pivot_train_entities.count(entity1_of_triple(e->triple_id)) > 0;
        if (shared && !leaked) {
          out.example_ids[lang][slot].push_back(id);
          ++out.retained[lang][slot];
        } else {
          ++out.dropped[lang][slot];
        }
      }
      std::sort(out.example_ids[lang][slot].begin(), out.example_ids[lang][slot].end());
    }
  }
  return out;
}

nlohmann::json UnrelFold::manifest_json() const {
  return nlohmann::json{{"round", round},
                        {"language", language},
                        {"train_pids", train_pids},
                        {"test_pids", test_pids}};
}

UnrelSplit fold_unrel(const std::vector<RCExample>& examples,
                      const std::vector<std::string>& langs, int k, bool peek, uint64_t seed) {
  if (k < 2) throw FatalError("split", "fold count must be at least 2");

  std::vector<std::string> pids;
  for (const RCExample& e : examples) pids.push_back(pid_of_triple(e.triple_id));
  pids = sorted_unique(std::move(pids));
  if (static_cast<size_t>(k) > pids.size()) {
    throw FatalError("split", "fold count " + std::to_string(k) + " exceeds property count " +
                                  std::to_string(pids.size()));
  }

  seeded_shuffle(pids, seed ^ fnv1a64("unrel"));
  UnrelSplit out;
  out.assignment.k = k;
  out.assignment.peek = peek;
  out.assignment.languages = langs;
  for (size_t i = 0; i < pids.size(); ++i) {
    out.assignment.base_fold[pids[i]] = static_cast<int>(i % static_cast<size_t>(k));
  }

  std::map<std::string, std::map<std::string, std::vector<std::string>>> ids_by_lang_pid;
  for (const RCExample& e : examples) {
    ids_by_lang_pid[e.language][pid_of_triple(e.triple_id)].push_back(e.id);
  }

  for (int round = 0; round < k; ++round) {
    for (size_t li = 0; li < langs.size(); ++li) {
      const std::string& lang = langs[li];
      int fold = out.assignment.test_fold(round, static_cast<int>(li));

      UnrelFold f;
      f.round = round;
      f.language = lang;
      for (const auto& [pid, base] : out.assignment.base_fold) {
        (base == fold ? f.test_pids : f.train_pids).push_back(pid);
      }
      const auto& by_pid = ids_by_lang_pid[lang];
      auto append_ids = [&](const std::vector<std::string>& fold_pids,
                            std::vector<std::string>& dst) {
        for (const std::string& pid : fold_pids) {
          auto it = by_pid.find(pid);
          if (it == by_pid.end()) continue;
          dst.insert(dst.end(), it->second.begin(), it->second.end());
        }
        std::sort(dst.begin(), dst.end());
      };
      append_ids(f.train_pids, f.train_ids);
      append_ids(f.test_pids, f.test_ids);
      out.folds.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<std::string> subsample(const std::vector<std::string>& ids, size_t n, uint64_t seed,
                                   bool* truncated) {
  if (truncated != nullptr) *truncated = false;
  std::vector<std::string> pool = sorted_unique(ids);
  if (n >= pool.size()) {
    if (truncated != nullptr && n > pool.size()) *truncated = true;
    return pool;
  }
  seeded_shuffle(pool, seed ^ fnv1a64("subsample"));
  pool.resize(n);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace relq
