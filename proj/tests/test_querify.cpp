#include <doctest.h>

#include "relq/io.hpp"
#include "relq/querify.hpp"

using namespace relq;

namespace {

AgreementTable agreement() {
  return AgreementTable::load(std::filesystem::path(RELQ_DATA_DIR) / "agreement.tsv");
}

PronounTable pronouns() {
  return PronounTable::load(std::filesystem::path(RELQ_DATA_DIR) / "pronouns.tsv");
}

TemplateSet three_en_templates() {
  auto dir = std::filesystem::temp_directory_path() / "relq_test_querify";
  std::filesystem::create_directories(dir);
  auto p = dir / "templates.tsv";
  write_text_file(p,
                  "T1\tP17\ten\tWhat country is {x} located in?\n"
                  "T2\tP17\ten\tIn which country is {x}?\n"
                  "T3\tP17\ten\tWhich country contains {x}?\n"
                  "T4\tP50\tde\tWer hat {x} geschrieben?\n");
  return TemplateSet::load(p);
}

Kb amazon_kb() {
  KBEntity amazon;
  amazon.qid = "Q3783";
  amazon.labels = {{"en", "Amazon"}};
  Kb kb(std::vector<KBEntity>{amazon});
  return kb;
}

ContextRecord positive_context() {
  ContextRecord c;
  c.triple_id = "Q3783|P17|Q155";
  c.language = "en";
  c.sentence = "The Amazon proper runs mostly through Brazil and Peru.";
  c.answers = std::vector<std::string>{"Brazil"};
  c.entity1_surface = "Amazon";
  return c;
}

ContextRecord negative_context() {
  ContextRecord c;
  c.triple_id = "Q3783|P17|Q155";
  c.language = "en";
  c.sentence = "The Danube flows through Germany.";
  c.partner_triple_id = "Q1653|P17|Q183";
  return c;
}

}  // namespace

TEST_SUITE("querify") {

TEST_CASE("one positive context expands into one example per template") {
  QuerifyCounts counts;
  auto examples = querify_dataset({positive_context()}, amazon_kb(), {}, three_en_templates(),
                                  agreement(), pronouns(), counts);
  REQUIRE(examples.size() == 3);
  for (const auto& e : examples) {
    CHECK(e.triple_id == "Q3783|P17|Q155");
    CHECK_FALSE(e.is_negative);
    CHECK(e.answers == std::vector<std::string>{"Brazil"});
    CHECK(e.question.find("Amazon") != std::string::npos);
    CHECK(e.question.find('{') == std::string::npos);
    CHECK(e.context == positive_context().sentence);
  }
  CHECK(examples[0].question == "What country is Amazon located in?");
  CHECK(counts.examples == 3);
  CHECK(counts.positives == 3);
}

TEST_CASE("negative contexts expand into NIL examples") {
  QuerifyCounts counts;
  auto examples = querify_dataset({negative_context()}, amazon_kb(), {}, three_en_templates(),
                                  agreement(), pronouns(), counts);
  REQUIRE(examples.size() == 3);
  for (const auto& e : examples) {
    CHECK(e.is_negative);
    CHECK(e.answers.empty());
  }
  CHECK(counts.negatives == 3);
}

TEST_CASE("contexts without templates for their language are skipped and counted") {
  ContextRecord c = positive_context();
  c.language = "de";  // only P50 has a German template here
  QuerifyCounts counts;
  KBEntity amazon;
  amazon.qid = "Q3783";
  amazon.labels = {{"de", "Amazonas"}};
  Kb kb(std::vector<KBEntity>{amazon});
  auto examples =
      querify_dataset({c}, kb, {}, three_en_templates(), agreement(), pronouns(), counts);
  CHECK(examples.empty());
  CHECK(counts.skipped_no_template == 1);
}

TEST_CASE("examples are ordered by triple then template and ids are unique") {
  ContextRecord pos = positive_context();
  ContextRecord neg = negative_context();
  ContextRecord neg2 = negative_context();
  neg2.partner_triple_id = "Q999|P17|Q1";
  QuerifyCounts counts;
  auto examples = querify_dataset({pos, neg, neg2}, amazon_kb(), {}, three_en_templates(),
                                  agreement(), pronouns(), counts);
  REQUIRE(examples.size() == 9);
  std::set<std::string> ids;
  for (const auto& e : examples) ids.insert(e.id);
  CHECK(ids.size() == 9);
  for (size_t i = 1; i < examples.size(); ++i) {
    auto key = [](const RCExample& e) { return std::tie(e.triple_id, e.template_id, e.id); };
    CHECK(key(examples[i - 1]) < key(examples[i]));
  }
}

TEST_CASE("examples round-trip through jsonl") {
  QuerifyCounts counts;
  auto examples = querify_dataset({positive_context(), negative_context()}, amazon_kb(), {},
                                  three_en_templates(), agreement(), pronouns(), counts);
  auto dir = std::filesystem::temp_directory_path() / "relq_test_querify";
  auto path = dir / "examples.jsonl";
  write_examples(path, examples);
  auto loaded = read_examples(path);
  REQUIRE(loaded.size() == examples.size());
  for (size_t i = 0; i < loaded.size(); ++i) {
    CHECK(loaded[i].id == examples[i].id);
    CHECK(loaded[i].question == examples[i].question);
    CHECK(loaded[i].answers == examples[i].answers);
    CHECK(loaded[i].is_negative == examples[i].is_negative);
  }
}

}  // TEST_SUITE
