#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "relq/querify.hpp"

namespace relq {

enum class SplitPart { Train = 0, Dev = 1, Test = 2 };

// Unseen-entity split: entity1 qids are partitioned per language by a seeded
// shuffle proportional to the fractions, and every example follows its
// entity's part, so train/dev/test entity sets are disjoint by construction.
struct UnentSplit {
  // language -> {train, dev, test} example ids, sorted.
  std::map<std::string, std::array<std::vector<std::string>, 3>> example_ids;
  // language -> {train, dev, test} entity1 qid sets.
  std::map<std::string, std::array<std::set<std::string>, 3>> entities;
  // language -> template ids reserved for dev/test (template holdout only).
  std::map<std::string, std::set<std::string>> holdout_templates;
};

// fractions must sum to 1. A language with fewer than 3 distinct entities is
// fatal ("insufficient-entities"). template_holdout > 0 additionally holds
// out that fraction of each language's template ids: examples using held-out
// templates leave train, and dev/test keep only held-out templates.
UnentSplit split_unent(const std::vector<RCExample>& examples,
                       const std::vector<std::string>& langs, std::array<double, 3> fractions,
                       uint64_t seed, double template_holdout = 0.0);

// Pairwise parallel dev/test sets between the pivot language and every other
// language: keep dev/test triples of the target language whose id also
// occurs in the pivot's examples, dropping any triple whose entity1 appears
// in the pivot's training entities.
struct ParallelSets {
  // language -> {dev ids, test ids} (target-language example ids, sorted).
  std::map<std::string, std::array<std::vector<std::string>, 2>> example_ids;
  std::map<std::string, std::array<uint64_t, 2>> retained;
  std::map<std::string, std::array<uint64_t, 2>> dropped;
};

ParallelSets build_parallel_testsets(const std::vector<RCExample>& examples,
                                     const UnentSplit& unent, const std::string& pivot,
                                     const std::vector<std::string>& langs);

// Unseen-relation k-fold assignment. Base folds come from a seeded shuffle
// of the pids. Without peek, every language tests fold r in round r. With
// peek, language index l tests fold (r + l) mod k, so each test relation is
// unseen in its own language's training data but trained on by the other
// languages in the same round.
struct FoldAssignment {
  int k = 5;
  bool peek = false;
  std::vector<std::string> languages;
  std::map<std::string, int> base_fold;  // pid -> fold index

  int test_fold(int round, int lang_index) const {
    return peek ? (round + lang_index) % k : round % k;
  }
};

struct UnrelFold {
  int round = 0;
  std::string language;
  std::vector<std::string> train_pids;  // sorted
  std::vector<std::string> test_pids;
  std::vector<std::string> train_ids;  // example ids, sorted
  std::vector<std::string> test_ids;

  nlohmann::json manifest_json() const;  // {round, language, train_pids, test_pids}
};

struct UnrelSplit {
  FoldAssignment assignment;
  std::vector<UnrelFold> folds;  // ordered by (round, language)
};

UnrelSplit fold_unrel(const std::vector<RCExample>& examples,
                      const std::vector<std::string>& langs, int k, bool peek, uint64_t seed);

// Seeded uniform sample without replacement; output is sorted by id. When
// n exceeds the population the whole population is returned and *truncated
// is set.
std::vector<std::string> subsample(const std::vector<std::string>& ids, size_t n, uint64_t seed,
                                   bool* truncated = nullptr);

}  // namespace relq
