#include <doctest.h>

#include "relq/sentences.hpp"
#include "relq/util.hpp"

using namespace relq;

namespace {

AbbrevTable abbrev() {
  return AbbrevTable::load(std::filesystem::path(RELQ_DATA_DIR) / "abbrev.tsv");
}

// Independent check: sentences must be exact substrings at their offsets and
// the gaps between them pure whitespace.
void check_reconstruction(const std::string& text, const std::vector<Sentence>& sents) {
  size_t cursor = 0;
  for (const Sentence& s : sents) {
    REQUIRE(s.begin >= cursor);
    for (size_t i = cursor; i < s.begin; ++i) {
      CHECK(static_cast<unsigned char>(text[i]) <= ' ');
    }
    CHECK(text.substr(s.begin, s.end - s.begin) == s.text);
    REQUIRE(s.end > s.begin);
    cursor = s.end;
  }
}

}  // namespace

TEST_SUITE("sentences") {

TEST_CASE("two plain sentences") {
  auto sents = segment_sentences("A b. C d.", "en", abbrev());
  REQUIRE(sents.size() == 2);
  CHECK(sents[0].text == "A b.");
  CHECK(sents[1].text == "C d.");
}

TEST_CASE("abbreviation suppresses the split") {
  auto sents = segment_sentences("Dr. Who ran.", "en", abbrev());
  REQUIRE(sents.size() == 1);
  CHECK(sents[0].text == "Dr. Who ran.");
}

TEST_CASE("abbreviation lists are per language") {
  // "Sig." is an Italian abbreviation, not an English one.
  CHECK(segment_sentences("Sig. Bellini ran.", "it", abbrev()).size() == 1);
  CHECK(segment_sentences("Sig. Bellini ran.", "en", abbrev()).size() == 2);
}

TEST_CASE("empty text gives no sentences") {
  CHECK(segment_sentences("", "en", abbrev()).empty());
  CHECK(segment_sentences("   \n ", "en", abbrev()).empty());
}

TEST_CASE("split requires whitespace plus uppercase or digit") {
  // Lowercase after the period: no split.
  CHECK(segment_sentences("version 2. beta came later.", "en", abbrev()).size() == 1);
  // Digit after the period: split.
  auto sents = segment_sentences("It ended. 42 remained.", "en", abbrev());
  REQUIRE(sents.size() == 2);
  CHECK(sents[1].text == "42 remained.");
  // No whitespace after the period: no split.
  CHECK(segment_sentences("see example.Com for more", "en", abbrev()).size() == 1);
}

TEST_CASE("question and exclamation marks terminate sentences") {
  auto sents = segment_sentences("Was it him? It was! Fine.", "en", abbrev());
  REQUIRE(sents.size() == 3);
  CHECK(sents[0].text == "Was it him?");
  CHECK(sents[1].text == "It was!");
}

TEST_CASE("ordinal day numbers do not close a sentence") {
  auto sents = segment_sentences("Ada Sorel wurde am 11. März 1952 in Paris geboren.", "de",
                                 abbrev());
  REQUIRE(sents.size() == 1);
  // Years are long enough to keep their boundary.
  auto with_year = segment_sentences("Es geschah 1903. Danach kam er.", "de", abbrev());
  CHECK(with_year.size() == 2);
  // The suppression applies to list markers in any language.
  CHECK(segment_sentences("1. Introduction comes first.", "en", abbrev()).size() == 1);
}

TEST_CASE("accented uppercase starts a sentence") {
  auto sents = segment_sentences("Er kam an. Über ihm stand sie.", "de", abbrev());
  REQUIRE(sents.size() == 2);
  CHECK(sents[1].text == "Über ihm stand sie.");
}

TEST_CASE("offsets are strictly increasing and reconstruct the text") {
  std::string text = "  Der Fluss war lang. Dr. Stein kam 1994. Danach ging er.  Ende. ";
  auto sents = segment_sentences(text, "de", abbrev());
  REQUIRE(sents.size() == 4);
  check_reconstruction(text, sents);
  for (size_t i = 1; i < sents.size(); ++i) CHECK(sents[i].begin > sents[i - 1].begin);
}

TEST_CASE("trailing sentence without terminator is kept") {
  auto sents = segment_sentences("First one. and then it just ends", "en", abbrev());
  REQUIRE(sents.size() == 1);  // "and" is lowercase, so no boundary splits the text
  CHECK(sents[0].text == "First one. and then it just ends");

  auto sents2 = segment_sentences("First one. Then it just ends", "en", abbrev());
  REQUIRE(sents2.size() == 2);
  CHECK(sents2[1].text == "Then it just ends");
}

}  // TEST_SUITE
