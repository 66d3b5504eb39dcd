#include <doctest.h>

#include "relq/io.hpp"
#include "relq/templates.hpp"
#include "relq/util.hpp"

using namespace relq;

namespace {

AgreementTable agreement() {
  return AgreementTable::load(std::filesystem::path(RELQ_DATA_DIR) / "agreement.tsv");
}

PronounTable pronouns() {
  return PronounTable::load(std::filesystem::path(RELQ_DATA_DIR) / "pronouns.tsv");
}

std::filesystem::path temp_tsv(const std::string& name, const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "relq_test_templates";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  write_text_file(p, content);
  return p;
}

}  // namespace

TEST_SUITE("templates") {

TEST_CASE("loading accepts valid patterns and rejects ones without the entity slot") {
  auto path = temp_tsv("t.tsv",
                       "T1\tP17\ten\tWhat country is {x} located in?\n"
                       "T2\tP50\ten\tWho wrote {x}?\n"
                       "T3\tP50\ten\tWho wrote?\n"
                       "T4\tP17\tit\tDi quale nazione fa parte {art} {x}?\n");
  TemplateSet set = TemplateSet::load(path);
  CHECK(set.all().size() == 3);
  CHECK(set.rejected() == 1);
  CHECK(set.count("P17", "en") == 1);
  CHECK(set.count("P17", "it") == 1);
  CHECK(set.count("P50", "en") == 1);
  CHECK(set.count("P99", "en") == 0);
}

TEST_CASE("duplicate template ids are fatal") {
  auto path = temp_tsv("dup.tsv",
                       "T1\tP17\ten\tWhere is {x}?\n"
                       "T1\tP17\tde\tWo ist {x}?\n");
  CHECK_THROWS_AS(TemplateSet::load(path), FatalError);
}

TEST_CASE("pattern validation") {
  std::string error;
  CHECK(validate_pattern("Who wrote {x}?", &error));
  CHECK(validate_pattern("{art} {x} {fill}", &error));
  CHECK_FALSE(validate_pattern("Who wrote?", &error));
  CHECK_FALSE(validate_pattern("{x} and {x}", &error));
  CHECK_FALSE(validate_pattern("Who is {y}?", &error));
  CHECK_FALSE(validate_pattern("broken {x", &error));
}

TEST_CASE("instantiate fills the entity slot") {
  Template t{"T1", "P17", "en", "What country is {x} located in?"};
  CHECK(instantiate(t, "Amazon", GenderClass::Unknown, agreement()) ==
        "What country is Amazon located in?");
}

TEST_CASE("instantiate picks the gendered article") {
  Template t{"T9", "P17", "it", "Di quale nazione fa parte {art} {x}?"};
  CHECK(instantiate(t, "Rio delle Amazzoni", GenderClass::Masculine, agreement()) ==
        "Di quale nazione fa parte il Rio delle Amazzoni?");
  CHECK(instantiate(t, "Rio delle Amazzoni", GenderClass::Unknown, agreement()) ==
        "Di quale nazione fa parte il Rio delle Amazzoni?");
  Template es{"T5", "P17", "es", "¿En qué país se encuentra {art} {x}?"};
  CHECK(instantiate(es, "Amazonas", GenderClass::Unknown, agreement()) ==
        "¿En qué país se encuentra el Amazonas?");
}

TEST_CASE("vowel-initial surfaces elide the article") {
  Template t{"T9", "P17", "it", "Di quale nazione fa parte {art} {x}?"};
  CHECK(instantiate(t, "Adda", GenderClass::Masculine, agreement()) ==
        "Di quale nazione fa parte l'Adda?");
  Template fr{"T7", "P17", "fr", "Dans quel pays se trouve {art} {x}?"};
  CHECK(instantiate(fr, "Allier", GenderClass::Masculine, agreement()) ==
        "Dans quel pays se trouve l'Allier?");
  CHECK(instantiate(fr, "Rhône", GenderClass::Masculine, agreement()) ==
        "Dans quel pays se trouve le Rhône?");
}

TEST_CASE("gender fillers agree") {
  Template it{"T26", "P19", "it", "Dove è {fill} {x}?"};
  CHECK(instantiate(it, "Bruno Keller", GenderClass::Masculine, agreement()) ==
        "Dove è nato Bruno Keller?");
  CHECK(instantiate(it, "Ada Sorel", GenderClass::Feminine, agreement()) ==
        "Dove è nata Ada Sorel?");
  Template fr{"T25", "P19", "fr", "Où est {fill} {x}?"};
  CHECK(instantiate(fr, "Ada Sorel", GenderClass::Feminine, agreement()) == "Où est née Ada Sorel?");
}

TEST_CASE("empty fillers never leave doubled spaces") {
  Template de{"Tx", "P19", "de", "Wo ist {x} {fill} geboren?"};
  std::string q = instantiate(de, "Bruno Keller", GenderClass::Masculine, agreement());
  CHECK(q == "Wo ist Bruno Keller geboren?");
  CHECK(q.find("  ") == std::string::npos);
}

TEST_CASE("instantiated questions have no unfilled placeholders") {
  TemplateSet set = TemplateSet::load(std::filesystem::path(RELQ_DATA_DIR) / "templates.tsv");
  for (const Template& t : set.all()) {
    std::string q = instantiate(t, "Elena Marchetti", GenderClass::Feminine, agreement());
    CAPTURE(t.template_id);
    CHECK(q.find('{') == std::string::npos);
    CHECK(q.find("Elena Marchetti") != std::string::npos);
  }
}

TEST_CASE("a missing agreement form is an error") {
  Template es{"T5", "P17", "es", "¿En qué país se encuentra {art} {x}?"};
  CHECK_THROWS_AS(instantiate(es, "Amazonas", GenderClass::Neuter, agreement()), FatalError);
}

TEST_CASE("explicit sex-or-gender wins over page text") {
  KBEntity e;
  e.qid = "Q1";
  e.statements = {{"P21", EntityRef{"Q6581072"}}};
  Kb kb(std::vector<KBEntity>{e});
  PageDoc page{"Q1", "de", "X", "Er sagte, er bleibe. Er kam. Er ging."};
  CHECK(infer_gender("Q1", "de", kb, &page, pronouns()) == GenderClass::Feminine);
}

TEST_CASE("pronoun counts decide when the kb is silent") {
  KBEntity e;
  e.qid = "Q1";
  Kb kb(std::vector<KBEntity>{e});
  std::string text;
  for (int i = 0; i < 12; ++i) text += "Er kam wieder. ";
  text += "Dann kam sie.";
  PageDoc page{"Q1", "de", "X", text};
  CHECK(infer_gender("Q1", "de", kb, &page, pronouns()) == GenderClass::Masculine);

  PageDoc fem_page{"Q1", "de", "X", "Sie blieb. Sie las viel."};
  CHECK(infer_gender("Q1", "de", kb, &fem_page, pronouns()) == GenderClass::Feminine);
}

TEST_CASE("no signal at all means unknown") {
  KBEntity e;
  e.qid = "Q1";
  Kb kb(std::vector<KBEntity>{e});
  PageDoc page{"Q1", "de", "X", "Das Dorf liegt im Tal."};
  CHECK(infer_gender("Q1", "de", kb, &page, pronouns()) == GenderClass::Unknown);
  CHECK(infer_gender("Q1", "de", kb, nullptr, pronouns()) == GenderClass::Unknown);

  PageDoc tie{"Q1", "de", "X", "Er kam. Sie ging."};
  CHECK(infer_gender("Q1", "de", kb, &tie, pronouns()) == GenderClass::Unknown);
}

}  // TEST_SUITE
