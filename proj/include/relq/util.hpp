#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relq {

// Fatal pipeline error. The CLI maps these to exit code 2 and prefixes the
// message with the stage that raised it.
class FatalError : public std::runtime_error {
 public:
  FatalError(std::string stage, const std::string& msg)
      : std::runtime_error("[" + stage + "] " + msg), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// ---- deterministic hashing / rng ----------------------------------------

uint64_t fnv1a64(std::string_view data);
uint64_t fnv1a64_file(const std::filesystem::path& path);
std::string hex64(uint64_t v);

// splitmix64. Fixed algorithm so seeded shuffles are byte-stable across
// platforms and standard library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t next();
  uint64_t bounded(uint64_t n);  // uniform in [0, n), n > 0

 private:
  uint64_t state_;
};

template <class T>
void seeded_shuffle(std::vector<T>& v, uint64_t seed) {
  SplitMix64 rng(seed);
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng.bounded(i));
    std::swap(v[i - 1], v[j]);
  }
}

// ---- utf-8 ----------------------------------------------------------------
// Classification and case folding cover ASCII, Latin-1 Supplement and Latin
// Extended-A, which is enough for en/de/es/fr/it. Other codepoints pass
// through unchanged and count as letters when above U+017F and below U+2000.

uint32_t utf8_decode(std::string_view s, size_t& i);  // advances i
void utf8_append(std::string& out, uint32_t cp);
std::vector<uint32_t> utf8_codepoints(std::string_view s);
std::string utf8_encode(const std::vector<uint32_t>& cps);

uint32_t lower_cp(uint32_t cp);
bool is_letter_cp(uint32_t cp);
bool is_digit_cp(uint32_t cp);
bool is_alnum_cp(uint32_t cp);
bool is_upper_cp(uint32_t cp);
bool is_space_cp(uint32_t cp);
bool is_punct_cp(uint32_t cp);
bool is_vowel_cp(uint32_t cp);

std::string fold_lower(std::string_view s);

// ---- small string helpers -------------------------------------------------

std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string> split_ws(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string trim(std::string_view s);

// Shortest round-trip decimal form of a double, '.' as separator.
std::string canonical_decimal(double v);

}  // namespace relq
