#include "relq/slotfill.hpp"

#include <algorithm>
#include <cmath>

#include "relq/io.hpp"
#include "relq/normalize.hpp"
#include "relq/util.hpp"

namespace relq {

namespace {
constexpr const char* kInstanceOf = "P31";
}

TypeKey entity2_type(const Value& value, const Kb& kb) {
  if (const auto* ref = std::get_if<EntityRef>(&value)) {
    if (const KBEntity* target = kb.find(ref->qid)) {
      for (const Statement& s : target->statements) {
        if (s.pid != kInstanceOf) continue;
        if (const auto* cls = std::get_if<EntityRef>(&s.value)) return TypeKey{"E:" + cls->qid};
      }
    }
    return TypeKey{"untyped"};
  }
  if (std::holds_alternative<TimeValue>(value)) return TypeKey{"L:time"};
  if (std::holds_alternative<QuantityValue>(value)) return TypeKey{"L:quantity"};
  return TypeKey{"L:text"};
}

std::string make_triple_id(const std::string& entity1_qid, const std::string& pid,
                           const std::string& vkey) {
  return entity1_qid + "|" + pid + "|" + vkey;
}

std::string entity1_of_triple(const std::string& triple_id) {
  size_t bar = triple_id.find('|');
  return bar == std::string::npos ? triple_id : triple_id.substr(0, bar);
}

std::string pid_of_triple(const std::string& triple_id) {
  size_t first = triple_id.find('|');
  if (first == std::string::npos) return "";
  size_t second = triple_id.find('|', first + 1);
  if (second == std::string::npos) return triple_id.substr(first + 1);
  return triple_id.substr(first + 1, second - first - 1);
}

std::optional<JointMatch> find_first_joint_sentence(const std::vector<Sentence>& sentences,
                                                    const std::vector<std::string>& e1_surfaces,
                                                    const std::vector<std::string>& e2_surfaces) {
  std::vector<std::vector<uint32_t>> e1_folded;
  e1_folded.reserve(e1_surfaces.size());
  for (const auto& s : e1_surfaces) e1_folded.push_back(fold_cps(s));
  std::vector<std::vector<uint32_t>> e2_folded;
  e2_folded.reserve(e2_surfaces.size());
  for (const auto& s : e2_surfaces) e2_folded.push_back(fold_cps(s));

  for (size_t si = 0; si < sentences.size(); ++si) {
    std::vector<uint32_t> hay = fold_cps(sentences[si].text);
    size_t e1_hit = e1_surfaces.size();
    for (size_t k = 0; k < e1_folded.size(); ++k) {
      if (contains_word(hay, e1_folded[k])) {
        e1_hit = k;
        break;  // surfaces come longest-first, so the first hit is preferred
      }
    }
    if (e1_hit == e1_surfaces.size()) continue;
    JointMatch m;
    for (size_t k = 0; k < e2_folded.size(); ++k) {
      if (contains_word(hay, e2_folded[k])) m.entity2_surfaces.push_back(e2_surfaces[k]);
    }
    if (m.entity2_surfaces.empty()) continue;
    m.sentence_index = si;
    m.entity1_surface = e1_surfaces[e1_hit];
    return m;
  }
  return std::nullopt;
}

std::vector<PositiveContext> build_positives(const std::vector<DocumentView>& views,
                                             const Kb& kb, const PropertyCatalog& catalog,
                                             const LocaleTable& locale, const AbbrevTable& abbrev,
                                             const std::string& lang, SlotfillCounts& counts) {
  std::vector<PositiveContext> positives;
  std::set<std::string> seen_ids;  // one positive per (triple, language)

  for (const DocumentView& view : views) {
    if (view.entity->statements.empty()) {
      ++counts.zero_tuple_views;
      continue;
    }
    std::vector<Sentence> sentences = segment_sentences(view.page->text, lang, abbrev);
    std::vector<std::string> e1_surfaces = surfaces_for(view.qid, lang, kb);
    if (e1_surfaces.empty()) continue;  // align() should prevent this

    size_t tuples_here = 0;
    for (const Statement& stmt : view.entity->statements) {
      DenormalizeResult res = denormalize_statement(stmt, lang, kb, catalog, locale);
      if (res.skip.has_value()) {
        if (*res.skip == SkipReason::UnknownProperty) {
          ++counts.skip_unknown_property;
        } else {
          ++counts.skip_unlabeled_value;
        }
        continue;
      }
      const DenormalizedTuple& tuple = *res.tuple;
      ++counts.tuples;
      ++tuples_here;

      std::string id = make_triple_id(view.qid, tuple.pid, tuple.value_key);
      if (seen_ids.count(id)) continue;  // duplicate statement

      std::vector<std::string> e2_surfaces;
      if (const auto* ref = std::get_if<EntityRef>(&stmt.value)) {
        e2_surfaces = surfaces_for(ref->qid, lang, kb);
      } else {
        e2_surfaces.push_back(tuple.value_text);
      }

      auto match = find_first_joint_sentence(sentences, e1_surfaces, e2_surfaces);
      if (!match.has_value()) {
        ++counts.misses;
        continue;
      }

      PositiveContext pc;
      pc.triple_id = id;
      pc.language = lang;
      pc.sentence = sentences[match->sentence_index].text;
      pc.answer_strings = match->entity2_surfaces;
      pc.entity1_surface = match->entity1_surface;
      pc.entity1_qid = view.qid;
      pc.pid = tuple.pid;
      pc.value_key = tuple.value_key;
      pc.type_key = entity2_type(stmt.value, kb);
      positives.push_back(std::move(pc));
      seen_ids.insert(std::move(id));
      ++counts.positives;
    }
    if (tuples_here == 0) ++counts.zero_tuple_views;
  }

  std::sort(positives.begin(), positives.end(),
            [](const PositiveContext& a, const PositiveContext& b) {
              return a.triple_id < b.triple_id;
            });
  return positives;
}

namespace {

// Integer quota for member i of a group so that quotas sum to
// round(ratio * group_size) and depend only on position, not on the seed.
size_t quota_at(size_t i, double ratio) {
  auto floor_at = [&](size_t k) {
    return static_cast<size_t>(std::floor(static_cast<double>(k) * ratio + 1e-9));
  };
  return floor_at(i + 1) - floor_at(i);
}

}  // namespace

std::vector<NegativeContext> build_negatives(const std::vector<PositiveContext>& positives,
                                             double ratio, uint64_t seed, SlotfillCounts& counts) {
  // Group by type key, preserving triple-id order within each group.
  std::map<std::string, std::vector<size_t>> groups;
  for (size_t i = 0; i < positives.size(); ++i) {
    groups[positives[i].type_key.key].push_back(i);
  }

  std::vector<NegativeContext> negatives;
  for (const auto& [type_key, members] : groups) {
    (void)type_key;
    for (size_t gi = 0; gi < members.size(); ++gi) {
      size_t quota = quota_at(gi, ratio);
      if (quota == 0) continue;
      const PositiveContext& p = positives[members[gi]];
      if (members.size() < 2) {
        ++counts.no_partner;
        continue;
      }

      std::vector<size_t> candidates;
      candidates.reserve(members.size() - 1);
      for (size_t gj = 0; gj < members.size(); ++gj) {
        if (gj != gi) candidates.push_back(members[gj]);
      }
      uint64_t shuffle_seed = seed ^ fnv1a64(p.triple_id + "\x1f" + p.language);
      seeded_shuffle(candidates, shuffle_seed);

      size_t taken = 0;
      for (size_t cand : candidates) {
        if (taken == quota) break;
        const PositiveContext& q = positives[cand];
        bool leaks = false;
        for (const std::string& answer : p.answer_strings) {
          if (contains_normalized_answer(q.sentence, answer)) {
            leaks = true;
            break;
          }
        }
        if (leaks) continue;
        negatives.push_back(NegativeContext{p.triple_id, p.language, q.sentence, q.triple_id});
        ++counts.negatives;
        ++taken;
      }
      if (taken < quota) ++counts.no_partner;
    }
  }

  std::sort(negatives.begin(), negatives.end(),
            [](const NegativeContext& a, const NegativeContext& b) {
              if (a.triple_id != b.triple_id) return a.triple_id < b.triple_id;
              return a.partner_triple_id < b.partner_triple_id;
            });
  return negatives;
}

std::vector<Triple> collect_triples(const std::vector<std::vector<PositiveContext>>& per_language) {
  std::map<std::string, Triple> by_id;
  for (const auto& positives : per_language) {
    for (const PositiveContext& p : positives) {
      Triple& t = by_id[p.triple_id];
      if (t.id.empty()) {
        t.id = p.triple_id;
        t.entity1_qid = p.entity1_qid;
        t.pid = p.pid;
        t.value_key = p.value_key;
      }
      t.answer_texts[p.language] = p.answer_strings;
    }
  }
  std::vector<Triple> out;
  out.reserve(by_id.size());
  for (auto& [id, t] : by_id) {
    (void)id;
    out.push_back(std::move(t));
  }
  return out;
}

nlohmann::json Triple::to_json() const {
  return nlohmann::json{{"id", id},
                        {"entity1_qid", entity1_qid},
                        {"pid", pid},
                        {"value_key", value_key},
                        {"answers", answer_texts}};
}

Triple Triple::from_json(const nlohmann::json& j) {
  Triple t;
  t.id = j.at("id").get<std::string>();
  t.entity1_qid = j.at("entity1_qid").get<std::string>();
  t.pid = j.at("pid").get<std::string>();
  t.value_key = j.at("value_key").get<std::string>();
  if (j.contains("answers")) {
    t.answer_texts = j.at("answers").get<std::map<std::string, std::vector<std::string>>>();
  }
  return t;
}

nlohmann::json ContextRecord::to_json() const {
  nlohmann::json j{{"triple_id", triple_id}, {"language", language}, {"sentence", sentence}};
  if (answers.has_value()) {
    j["answers"] = *answers;
    j["entity1_surface"] = entity1_surface;
  } else {
    j["answers"] = nullptr;
    j["partner_triple_id"] = partner_triple_id;
  }
  return j;
}

ContextRecord ContextRecord::from_json(const nlohmann::json& j) {
  ContextRecord c;
  c.triple_id = j.at("triple_id").get<std::string>();
  c.language = j.at("language").get<std::string>();
  c.sentence = j.at("sentence").get<std::string>();
  if (j.contains("answers") && !j.at("answers").is_null()) {
    c.answers = j.at("answers").get<std::vector<std::string>>();
  }
  c.partner_triple_id = j.value("partner_triple_id", "");
  c.entity1_surface = j.value("entity1_surface", "");
  return c;
}

nlohmann::json SlotfillCounts::to_json() const {
  return nlohmann::json{{"tuples", tuples},
                        {"positives", positives},
                        {"misses", misses},
                        {"skip_unknown_property", skip_unknown_property},
                        {"skip_unlabeled_value", skip_unlabeled_value},
                        {"zero_tuple_views", zero_tuple_views},
                        {"negatives", negatives},
                        {"no_partner", no_partner}};
}

void write_triples(const std::filesystem::path& path, const std::vector<Triple>& triples) {
  std::string out;
  for (const Triple& t : triples) {
    out += t.to_json().dump();
    out += '\n';
  }
  write_text_file(path, out);
}

std::vector<Triple> read_triples(const std::filesystem::path& path) {
  std::vector<Triple> out;
  for_each_line(path, [&](size_t lineno, const std::string& line) {
    if (line.empty()) return;
    try {
      out.push_back(Triple::from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw FatalError("slotfill",
                       "bad triple record at " + path.string() + ":" + std::to_string(lineno) +
                           ": " + e.what());
    }
  });
  return out;
}

void write_contexts(const std::filesystem::path& path, const std::vector<ContextRecord>& contexts) {
  std::string out;
  for (const ContextRecord& c : contexts) {
    out += c.to_json().dump();
    out += '\n';
  }
  write_text_file(path, out);
}

std::vector<ContextRecord> read_contexts(const std::filesystem::path& path) {
  std::vector<ContextRecord> out;
  for_each_line(path, [&](size_t lineno, const std::string& line) {
    if (line.empty()) return;
    try {
      out.push_back(ContextRecord::from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw FatalError("slotfill",
                       "bad context record at " + path.string() + ":" + std::to_string(lineno) +
                           ": " + e.what());
    }
  });
  return out;
}

}  // namespace relq
