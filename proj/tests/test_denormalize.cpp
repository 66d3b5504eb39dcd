#include <doctest.h>

#include <set>

#include "relq/denormalize.hpp"
#include "relq/io.hpp"
#include "relq/kb.hpp"
#include "relq/locale.hpp"
#include "relq/util.hpp"

using namespace relq;

namespace {

Kb small_kb() {
  KBEntity dante;
  dante.qid = "Q1067";
  dante.labels = {{"en", "Dante Alighieri"}, {"de", "Dante Alighieri"}};
  KBEntity unlabeled;
  unlabeled.qid = "Q77";
  unlabeled.labels = {{"de", "Nur Deutsch"}};
  KBEntity km;
  km.qid = "Q828224";
  km.labels = {{"en", "kilometre"}, {"de", "Kilometer"}};
  return Kb(std::vector<KBEntity>{dante, unlabeled, km});
}

PropertyCatalog small_catalog() {
  // P50 only; anything else is an unknown property.
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "relq_test_denorm";
  std::filesystem::create_directories(dir);
  std::filesystem::path p = dir / "catalog.tsv";
  write_text_file(p, "P50\ten\tauthor\nP50\tde\tAutor\nP9\ten\tmisc\nP9\tde\tmisc\n");
  return PropertyCatalog::load(p);
}

LocaleTable locale() { return LocaleTable::load(std::filesystem::path(RELQ_DATA_DIR) / "locale.tsv"); }

}  // namespace

TEST_SUITE("denormalize") {

TEST_CASE("entity statement resolves to the target label") {
  Kb kb = small_kb();
  PropertyCatalog catalog = small_catalog();
  LocaleTable loc = locale();
  Statement stmt{"P50", EntityRef{"Q1067"}};
  auto res = denormalize_statement(stmt, "en", kb, catalog, loc);
  REQUIRE(res.tuple.has_value());
  CHECK(res.tuple->property_label == "author");
  CHECK(res.tuple->value_text == "Dante Alighieri");
  CHECK(res.tuple->value_key == "Q1067");
}

TEST_CASE("missing label yields an unlabeled-value skip") {
  Kb kb = small_kb();
  PropertyCatalog catalog = small_catalog();
  LocaleTable loc = locale();
  Statement stmt{"P50", EntityRef{"Q77"}};  // labeled only in German
  auto res = denormalize_statement(stmt, "en", kb, catalog, loc);
  CHECK_FALSE(res.tuple.has_value());
  REQUIRE(res.skip.has_value());
  CHECK(*res.skip == SkipReason::UnlabeledValue);

  auto res_de = denormalize_statement(stmt, "de", kb, catalog, loc);
  CHECK(res_de.tuple.has_value());
}

TEST_CASE("unknown property yields an unknown-property skip") {
  Kb kb = small_kb();
  PropertyCatalog catalog = small_catalog();
  LocaleTable loc = locale();
  Statement stmt{"P31", EntityRef{"Q1067"}};
  auto res = denormalize_statement(stmt, "en", kb, catalog, loc);
  REQUIRE(res.skip.has_value());
  CHECK(*res.skip == SkipReason::UnknownProperty);
}

TEST_CASE("day-precision time renders the documented English form") {
  Kb kb = small_kb();
  PropertyCatalog catalog = small_catalog();
  LocaleTable loc = locale();
  TimeValue t{1994, 5, 25, TimePrecision::Day};
  Statement stmt{"P9", t};
  auto res = denormalize_statement(stmt, "en", kb, catalog, loc);
  REQUIRE(res.tuple.has_value());
  CHECK(res.tuple->value_text == "25 May 1994");
  CHECK(res.tuple->value_key == "1994-05-25");
}

TEST_CASE("time rendering matches the golden table for all languages") {
  LocaleTable loc = locale();
  auto rows = read_tsv(std::filesystem::path(RELQ_GOLDEN_DIR) / "time_rendering.golden");
  REQUIRE(!rows.empty());
  for (const auto& row : rows) {
    REQUIRE(row.size() == 4);
    const std::string& lang = row[0];
    TimeValue t;
    auto parts = split(row[2], '-');
    t.year = std::stoi(parts[0]);
    if (row[1] == "day") {
      t.precision = TimePrecision::Day;
      t.month = std::stoi(parts[1]);
      t.day = std::stoi(parts[2]);
    } else if (row[1] == "month") {
      t.precision = TimePrecision::Month;
      t.month = std::stoi(parts[1]);
    } else {
      t.precision = TimePrecision::Year;
    }
    CAPTURE(lang);
    CAPTURE(row[2]);
    CHECK(render_time(t, lang, loc) == row[3]);
  }
}

TEST_CASE("render_time is injective per language over a date grid") {
  LocaleTable loc = locale();
  for (const std::string lang : {"en", "de", "es", "fr", "it"}) {
    std::set<std::string> seen;
    size_t total = 0;
    for (int year : {1994, 2001}) {
      for (int month = 1; month <= 12; ++month) {
        for (int day : {1, 9, 25}) {
          TimeValue t{year, month, day, TimePrecision::Day};
          seen.insert(render_time(t, lang, loc));
          ++total;
        }
        seen.insert(render_time(TimeValue{year, month, 0, TimePrecision::Month}, lang, loc));
        ++total;
      }
      seen.insert(render_time(TimeValue{year, 0, 0, TimePrecision::Year}, lang, loc));
      ++total;
    }
    CHECK(seen.size() == total);
  }
}

TEST_CASE("value_key is language-invariant") {
  Kb kb = small_kb();
  PropertyCatalog catalog = small_catalog();
  LocaleTable loc = locale();
  std::vector<Statement> stmts = {
      {"P50", EntityRef{"Q1067"}},
      {"P9", TimeValue{1994, 5, 25, TimePrecision::Day}},
      {"P9", QuantityValue{6575.0, "Q828224"}},
      {"P9", TextValue{"some text"}},
  };
  for (const Statement& stmt : stmts) {
    auto en = denormalize_statement(stmt, "en", kb, catalog, loc);
    auto de = denormalize_statement(stmt, "de", kb, catalog, loc);
    REQUIRE(en.tuple.has_value());
    REQUIRE(de.tuple.has_value());
    CHECK(en.tuple->value_key == de.tuple->value_key);
  }
}

TEST_CASE("quantity rendering uses decimal separator and unit label") {
  Kb kb = small_kb();
  LocaleTable loc = locale();
  QuantityValue q{6.5, "Q828224"};
  CHECK(render_quantity(q, "en", loc, kb) == "6.5 kilometre");
  CHECK(render_quantity(q, "de", loc, kb) == "6,5 Kilometer");
  QuantityValue no_unit{42.0, ""};
  CHECK(render_quantity(no_unit, "en", loc, kb) == "42");
  QuantityValue unlabeled_unit{42.0, "Q404"};  // unit entity missing: unit omitted
  CHECK(render_quantity(unlabeled_unit, "en", loc, kb) == "42");
}

TEST_CASE("every denormalized tuple's pid exists in the catalog") {
  Kb kb = small_kb();
  PropertyCatalog catalog = small_catalog();
  LocaleTable loc = locale();
  std::vector<Statement> stmts = {{"P50", EntityRef{"Q1067"}},
                                  {"P31", EntityRef{"Q1067"}},
                                  {"P9", TextValue{"x"}}};
  for (const Statement& stmt : stmts) {
    auto res = denormalize_statement(stmt, "en", kb, catalog, loc);
    if (res.tuple.has_value()) CHECK(catalog.has(res.tuple->pid));
  }
}

}  // TEST_SUITE
