#include <doctest.h>

#include <algorithm>

#include "relq/baselines.hpp"
#include "relq/evalscore.hpp"
#include "relq/util.hpp"

using namespace relq;

namespace {

RCExample make_example(const std::string& id, std::vector<std::string> answers,
                       const std::string& lang = "en", const std::string& triple = "Q1|P17|Q2",
                       const std::string& tmpl = "T1") {
  RCExample e;
  e.id = id;
  e.triple_id = triple;
  e.template_id = tmpl;
  e.language = lang;
  e.question = "What country is X located in?";
  e.context = "X lies in Y.";
  e.is_negative = answers.empty();
  e.answers = std::move(answers);
  return e;
}

// 3 non-nil + 1 nil gold; predictions: 2 correct, 1 wrong, 1 NIL.
std::vector<RCExample> fixture_gold() {
  return {make_example("e1", {"Brazil"}),
          make_example("e2", {"Peru"}),
          make_example("e3", {"Colombia"}),
          make_example("e4", {})};
}

std::vector<Prediction> fixture_preds() {
  return {{"e1", "Brazil"}, {"e2", "Peru"}, {"e3", "Venezuela"}, {"e4", std::nullopt}};
}

}  // namespace

TEST_SUITE("evalscore") {

TEST_CASE("normalization discards order, punctuation and case") {
  CHECK(normalize_answer("the Amazon River.") == normalize_answer("amazon river the"));
  CHECK(normalize_answer("Brazil") == normalize_answer("Brazil,"));
  CHECK(normalize_answer("") == std::vector<std::string>{});
  CHECK(normalize_answer("...") == std::vector<std::string>{});
}

TEST_CASE("articles are kept") {
  CHECK(normalize_answer("la Plata") != normalize_answer("Plata"));
}

TEST_CASE("case folding is optional") {
  CHECK(normalize_answer("Brazil") == normalize_answer("brazil"));
  CHECK(normalize_answer("Brazil", true) != normalize_answer("brazil", true));
  CHECK(normalize_answer("Brazil,", true) == normalize_answer("Brazil", true));
}

TEST_CASE("normalization is idempotent") {
  for (const std::string s : {"the Amazon River.", "¿Dónde está el Perú?", "a b a,  c"}) {
    auto bag = normalize_answer(s);
    std::string rejoined;
    for (const auto& t : bag) rejoined += t + " ";
    CHECK(normalize_answer(rejoined) == bag);
  }
}

TEST_CASE("normalized containment uses the token bag") {
  CHECK(contains_normalized_answer("The Amazon crosses Brazil today.", "brazil"));
  CHECK(contains_normalized_answer("Der Fluss in Brasilien, Venezuela.", "Brasilien"));
  CHECK_FALSE(contains_normalized_answer("The Amazon crosses Brazil.", "Peru"));
  // Every token must be present.
  CHECK_FALSE(contains_normalized_answer("The Amazon is long.", "Amazon River"));
  CHECK(contains_normalized_answer("The River Amazon is long.", "Amazon River"));
  CHECK_FALSE(contains_normalized_answer("anything", ""));
}

TEST_CASE("hand-computed fixture scores exactly two thirds") {
  EvalReport r = score(fixture_gold(), fixture_preds());
  CHECK(r.tp == 2);
  CHECK(r.predicted_nonnil == 3);
  CHECK(r.gold_nonnil == 3);
  CHECK(r.precision == 2.0 / 3.0);
  CHECK(r.recall == 2.0 / 3.0);
  CHECK(r.f1 == 2.0 / 3.0);
}

TEST_CASE("oracle predictions score one exactly") {
  auto gold = fixture_gold();
  EvalReport r = score(gold, oracle_predict(gold));
  CHECK(r.precision == 1.0);
  CHECK(r.recall == 1.0);
  CHECK(r.f1 == 1.0);
}

TEST_CASE("all-NIL predictions score zero via the zero-denominator rule") {
  auto gold = fixture_gold();
  EvalReport r = score(gold, nil_predict(gold));
  CHECK(r.tp == 0);
  CHECK(r.predicted_nonnil == 0);
  CHECK(r.precision == 0.0);
  CHECK(r.recall == 0.0);
  CHECK(r.f1 == 0.0);
}

TEST_CASE("matching any one gold answer is enough") {
  auto gold = std::vector<RCExample>{
      make_example("e1", {"Brasilien", "Venezuela", "Kolumbien"})};
  CHECK(score(gold, {{"e1", "Venezuela"}}).tp == 1);
  CHECK(score(gold, {{"e1", "venezuela,"}}).tp == 1);
  CHECK(score(gold, {{"e1", "Peru"}}).tp == 0);
}

TEST_CASE("missing predictions default to NIL with a count") {
  auto gold = fixture_gold();
  EvalReport r = score(gold, {{"e1", "Brazil"}});
  CHECK(r.tp == 1);
  CHECK(r.predicted_nonnil == 1);
  CHECK(r.defaulted_nil == 3);
  CHECK(r.gold_nonnil == 3);
}

TEST_CASE("unknown example ids and duplicates are fatal") {
  auto gold = fixture_gold();
  CHECK_THROWS_AS(score(gold, {{"nope", "x"}}), FatalError);
  CHECK_THROWS_AS(score(gold, {{"e1", "x"}, {"e1", "y"}}), FatalError);
}

TEST_CASE("score is permutation-invariant over prediction order") {
  auto gold = fixture_gold();
  auto preds = fixture_preds();
  EvalReport a = score(gold, preds);
  std::reverse(preds.begin(), preds.end());
  EvalReport b = score(gold, preds);
  CHECK(a.tp == b.tp);
  CHECK(a.precision == b.precision);
  CHECK(a.f1 == b.f1);
}

TEST_CASE("f1 is the exact harmonic mean") {
  EvalReport r = score(fixture_gold(), fixture_preds());
  CHECK(r.f1 == 2.0 * static_cast<double>(r.tp) /
                    static_cast<double>(r.predicted_nonnil + r.gold_nonnil));
  double p = r.precision;
  double q = r.recall;
  CHECK(r.f1 == doctest::Approx(2 * p * q / (p + q)).epsilon(1e-12));
  CHECK(r.precision >= 0.0);
  CHECK(r.precision <= 1.0);
  CHECK(r.recall >= 0.0);
  CHECK(r.recall <= 1.0);
  CHECK(r.f1 >= 0.0);
  CHECK(r.f1 <= 1.0);
}

TEST_CASE("grouped scoring partitions and adds up") {
  std::vector<RCExample> gold = {
      make_example("a1", {"Brazil"}, "en", "Q1|P17|Q2", "T1"),
      make_example("a2", {"Peru"}, "en", "Q1|P17|Q3", "T1"),
      make_example("b1", {"Brasilien"}, "de", "Q1|P17|Q2", "T2"),
      make_example("b2", {}, "de", "Q1|P17|Q3", "T2"),
  };
  std::vector<Prediction> preds = {
      {"a1", "Brazil"}, {"a2", "wrong"}, {"b1", "Brasilien"}, {"b2", std::nullopt}};

  auto by_lang = score_by_group(gold, preds, GroupKey::Language);
  REQUIRE(by_lang.size() == 2);
  CHECK(by_lang.at("en").tp == 1);
  CHECK(by_lang.at("en").predicted_nonnil == 2);
  CHECK(by_lang.at("de").tp == 1);
  CHECK(by_lang.at("de").predicted_nonnil == 1);

  EvalReport global = score(gold, preds);
  CHECK(by_lang.at("en").tp + by_lang.at("de").tp == global.tp);

  // Per-group reports equal independent runs over the partition.
  std::vector<RCExample> en_gold{gold[0], gold[1]};
  std::vector<Prediction> en_preds{preds[0], preds[1]};
  EvalReport en_direct = score(en_gold, en_preds);
  CHECK(en_direct.tp == by_lang.at("en").tp);
  CHECK(en_direct.f1 == by_lang.at("en").f1);

  auto by_pid = score_by_group(gold, preds, GroupKey::Pid);
  REQUIRE(by_pid.size() == 1);
  CHECK(by_pid.at("P17").tp == global.tp);

  auto by_template = score_by_group(gold, preds, GroupKey::TemplateId);
  CHECK(by_template.size() == 2);
}

TEST_CASE("single group equals the global score") {
  auto gold = fixture_gold();
  auto preds = fixture_preds();
  auto by_pid = score_by_group(gold, preds, GroupKey::Pid);
  REQUIRE(by_pid.size() == 1);
  EvalReport global = score(gold, preds);
  CHECK(by_pid.begin()->second.tp == global.tp);
  CHECK(by_pid.begin()->second.f1 == global.f1);
}

}  // TEST_SUITE
