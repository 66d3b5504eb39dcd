#include <doctest.h>

#include <set>

#include "relq/util.hpp"

using namespace relq;

TEST_SUITE("util") {

TEST_CASE("fold_lower handles ascii and accented latin") {
  CHECK(fold_lower("Brazil") == "brazil");
  CHECK(fold_lower("PÉROU") == "pérou");
  CHECK(fold_lower("Ärmel ÜBUNG Straße") == "ärmel übung straße");
  CHECK(fold_lower("Œuvre Ÿ Šš") == "œuvre ÿ šš");
}

TEST_CASE("codepoint classification") {
  CHECK(is_letter_cp(U'é'));
  CHECK(is_letter_cp(U'ß'));
  CHECK(is_upper_cp(U'É'));
  CHECK_FALSE(is_upper_cp(U'é'));
  CHECK(is_digit_cp(U'7'));
  CHECK_FALSE(is_alnum_cp(U'¿'));
  CHECK(is_punct_cp(U'¿'));
  CHECK(is_punct_cp(U','));
  CHECK(is_punct_cp(0x2019));  // right single quote
  CHECK(is_space_cp(0xA0));
  CHECK(is_vowel_cp(U'À'));
  CHECK(is_vowel_cp(U'a'));
  CHECK_FALSE(is_vowel_cp(U'R'));
  CHECK_FALSE(is_vowel_cp(U'ñ'));
}

TEST_CASE("utf8 round trip") {
  std::string s = "¿Dónde? — l'Amazzonia être 25 Mai";
  CHECK(utf8_encode(utf8_codepoints(s)) == s);
}

TEST_CASE("seeded shuffle is deterministic and seed-sensitive") {
  std::vector<int> a{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<int> b = a;
  std::vector<int> c = a;
  seeded_shuffle(a, 42);
  seeded_shuffle(b, 42);
  seeded_shuffle(c, 43);
  CHECK(a == b);
  CHECK(a != c);
  std::multiset<int> sa(a.begin(), a.end());
  std::multiset<int> sc(c.begin(), c.end());
  CHECK(sa == sc);
}

TEST_CASE("bounded stays in range") {
  SplitMix64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    CHECK(rng.bounded(13) < 13);
  }
}

TEST_CASE("fnv1a64 known value") {
  // FNV-1a test vector: empty input hashes to the offset basis.
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") != fnv1a64("b"));
  CHECK(hex64(0xcbf29ce484222325ull) == "cbf29ce484222325");
}

TEST_CASE("split helpers") {
  CHECK(split("a,b,,c", ',') == std::vector<std::string>{"a", "b", "", "c"});
  CHECK(split_ws("  a\tb\nc  ") == std::vector<std::string>{"a", "b", "c"});
  CHECK(split_ws("") == std::vector<std::string>{});
  CHECK(trim("  x y  ") == "x y");
  CHECK(join({"a", "b"}, "|") == "a|b");
}

TEST_CASE("canonical decimal") {
  CHECK(canonical_decimal(6575) == "6575");
  CHECK(canonical_decimal(6.5) == "6.5");
  CHECK(canonical_decimal(0.1) == "0.1");
}

}  // TEST_SUITE
