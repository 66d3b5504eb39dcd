#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "relq/ingest.hpp"
#include "relq/util.hpp"
#include "relq/io.hpp"

using namespace relq;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name, const std::string& content) {
  fs::path dir = fs::temp_directory_path() / "relq_test_ingest";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p;
}

}  // namespace

TEST_SUITE("ingest") {

TEST_CASE("load_kb parses a minimal record") {
  auto path = temp_file("minimal.jsonl",
                        R"({"qid":"Q1067","labels":{"en":"Dante Alighieri"},"statements":[]})"
                        "\n");
  IngestCounts counts;
  auto entities = load_kb(path, counts);
  REQUIRE(entities.size() == 1);
  CHECK(entities[0].qid == "Q1067");
  CHECK(*entities[0].label("en") == "Dante Alighieri");
  CHECK(entities[0].statements.empty());
  CHECK(counts.kb_malformed == 0);
}

TEST_CASE("load_kb keeps statement pids") {
  auto path = temp_file(
      "statement.jsonl",
      R"({"qid":"Q40185","labels":{"en":"Divine Comedy"},"statements":[{"pid":"P50","type":"entity","value":"Q1067"}]})"
      "\n");
  IngestCounts counts;
  auto entities = load_kb(path, counts);
  REQUIRE(entities.size() == 1);
  REQUIRE(entities[0].statements.size() == 1);
  CHECK(entities[0].statements[0].pid == "P50");
  CHECK(std::get<EntityRef>(entities[0].statements[0].value).qid == "Q1067");
}

TEST_CASE("load_kb skips malformed lines but keeps the rest") {
  auto path = temp_file("malformed.jsonl",
                        R"({"qid":"Q1","labels":{"en":"One"}})"
                        "\n"
                        "{ not json\n"
                        R"({"qid":"Q2","labels":{"en":"Two"}})"
                        "\n");
  IngestCounts counts;
  auto entities = load_kb(path, counts);
  CHECK(entities.size() == 2);
  CHECK(counts.kb_entities == 2);
  CHECK(counts.kb_malformed == 1);
}

TEST_CASE("load_kb rejects unreadable files") {
  IngestCounts counts;
  CHECK_THROWS_AS(load_kb("/nonexistent/kb.jsonl", counts), FatalError);
}

TEST_CASE("load_corpus drops empty pages and counts them") {
  auto path = temp_file("corpus.jsonl",
                        R"({"qid":"Q1","language":"it","title":"A","text":""})"
                        "\n"
                        R"({"qid":"Q2","language":"it","title":"Rio delle Amazzoni","text":"Il Rio delle Amazzoni è un fiume."})"
                        "\n");
  IngestCounts counts;
  auto pages = load_corpus(path, "it", counts);
  REQUIRE(pages.size() == 1);
  CHECK(pages[0].qid == "Q2");
  CHECK(pages[0].language == "it");
  CHECK(counts.pages_empty == 1);
}

TEST_CASE("load_corpus preserves input order") {
  auto path = temp_file("order.jsonl",
                        R"({"qid":"Q9","language":"en","title":"B","text":"b text"})"
                        "\n"
                        R"({"qid":"Q1","language":"en","title":"A","text":"a text"})"
                        "\n");
  IngestCounts counts;
  auto pages = load_corpus(path, "en", counts);
  REQUIRE(pages.size() == 2);
  CHECK(pages[0].qid == "Q9");
  CHECK(pages[1].qid == "Q1");
}

TEST_CASE("align intersects kb and corpus by qid") {
  KBEntity q1;
  q1.qid = "Q1";
  q1.labels["en"] = "One";
  KBEntity q2;
  q2.qid = "Q2";
  q2.labels["en"] = "Two";
  Kb kb(std::vector<KBEntity>{q1, q2});

  std::vector<PageDoc> corpus{{"Q2", "en", "Two", "text"}, {"Q3", "en", "Three", "text"}};
  AlignCounts counts;
  auto views = align(kb, corpus, "en", counts);
  REQUIRE(views.size() == 1);
  CHECK(views[0].qid == "Q2");
  CHECK(views[0].entity->qid == views[0].page->qid);
  CHECK(counts.kb_only == 1);
  CHECK(counts.corpus_only == 1);
}

TEST_CASE("align with empty corpus yields nothing") {
  KBEntity q1;
  q1.qid = "Q1";
  q1.labels["en"] = "One";
  Kb kb(std::vector<KBEntity>{q1});
  AlignCounts counts;
  CHECK(align(kb, {}, "en", counts).empty());
}

TEST_CASE("align excludes entities without a label in the language") {
  KBEntity q1;
  q1.qid = "Q1";
  q1.labels["en"] = "One";  // no German label
  Kb kb(std::vector<KBEntity>{q1});
  std::vector<PageDoc> corpus{{"Q1", "de", "Eins", "text"}};
  AlignCounts counts;
  auto views = align(kb, corpus, "de", counts);
  CHECK(views.empty());
  CHECK(counts.kb_unlabeled == 1);
}

TEST_CASE("align output is ordered by qid and consistent") {
  std::vector<KBEntity> entities;
  std::vector<PageDoc> corpus;
  for (const char* qid : {"Q9", "Q3", "Q5", "Q1"}) {
    KBEntity e;
    e.qid = qid;
    e.labels["en"] = qid;
    entities.push_back(e);
    corpus.push_back(PageDoc{qid, "en", qid, "text"});
  }
  Kb kb(std::move(entities));
  AlignCounts counts;
  auto views = align(kb, corpus, "en", counts);
  REQUIRE(views.size() == 4);
  for (size_t i = 1; i < views.size(); ++i) CHECK(views[i - 1].qid < views[i].qid);
  for (const auto& v : views) CHECK(v.entity->qid == v.page->qid);
}

}  // TEST_SUITE
