#include "relq/util.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>

namespace relq {

uint64_t fnv1a64(std::string_view data) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

uint64_t fnv1a64_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FatalError("io", "cannot open file for hashing: " + path.string());
  uint64_t h = 0xcbf29ce484222325ull;
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[static_cast<size_t>(i)]);
      h *= 0x100000001b3ull;
    }
  }
  return h;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

uint64_t SplitMix64::next() {
  uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::bounded(uint64_t n) {
  // Lemire multiply-shift; bias is irrelevant here, determinism is not.
  return static_cast<uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
}

uint32_t utf8_decode(std::string_view s, size_t& i) {
  unsigned char b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  auto cont = [&](size_t k) -> bool {
    return i + k < s.size() && (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  if ((b0 & 0xE0) == 0xC0 && cont(1)) {
    uint32_t cp = (b0 & 0x1Fu) << 6 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
    i += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    uint32_t cp = (b0 & 0x0Fu) << 12 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6 |
                  (static_cast<unsigned char>(s[i + 2]) & 0x3Fu);
    i += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    uint32_t cp = (b0 & 0x07u) << 18 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12 |
                  (static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6 |
                  (static_cast<unsigned char>(s[i + 3]) & 0x3Fu);
    i += 4;
    return cp;
  }
  // Invalid byte: pass through as-is.
  ++i;
  return b0;
}

void utf8_append(std::string& out, uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::vector<uint32_t> utf8_codepoints(std::string_view s) {
  std::vector<uint32_t> cps;
  cps.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) cps.push_back(utf8_decode(s, i));
  return cps;
}

std::string utf8_encode(const std::vector<uint32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (uint32_t cp : cps) utf8_append(out, cp);
  return out;
}

uint32_t lower_cp(uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if ((cp >= 0xC0 && cp <= 0xD6) || (cp >= 0xD8 && cp <= 0xDE)) return cp + 32;
  if (cp >= 0x100 && cp <= 0x137 && cp % 2 == 0) return cp + 1;
  if (cp >= 0x139 && cp <= 0x147 && cp % 2 == 1) return cp + 1;
  if (cp >= 0x14A && cp <= 0x176 && cp % 2 == 0) return cp + 1;
  if (cp == 0x178) return 0xFF;
  if (cp == 0x179 || cp == 0x17B || cp == 0x17D) return cp + 1;
  return cp;
}

bool is_upper_cp(uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return true;
  if ((cp >= 0xC0 && cp <= 0xD6) || (cp >= 0xD8 && cp <= 0xDE)) return true;
  if (cp >= 0x100 && cp <= 0x136 && cp % 2 == 0) return true;
  if (cp >= 0x139 && cp <= 0x147 && cp % 2 == 1) return true;
  if (cp >= 0x14A && cp <= 0x176 && cp % 2 == 0) return true;
  if (cp == 0x178) return true;
  if (cp == 0x179 || cp == 0x17B || cp == 0x17D) return true;
  return false;
}

bool is_letter_cp(uint32_t cp) {
  if ((cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z')) return true;
  if (cp == 0xAA || cp == 0xB5 || cp == 0xBA) return true;
  if (cp >= 0xC0 && cp <= 0xFF && cp != 0xD7 && cp != 0xF7) return true;
  if (cp >= 0x100 && cp <= 0x24F) return true;
  // Everything else below general punctuation is treated as a letter, so
  // scripts outside the supported set do not break word boundaries.
  if (cp > 0x24F && cp < 0x2000) return true;
  return false;
}

bool is_digit_cp(uint32_t cp) { return cp >= '0' && cp <= '9'; }

bool is_alnum_cp(uint32_t cp) { return is_letter_cp(cp) || is_digit_cp(cp); }

bool is_space_cp(uint32_t cp) {
  switch (cp) {
    case ' ':
    case '\t':
    case '\n':
    case '\r':
    case '\f':
    case '\v':
    case 0xA0:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_punct_cp(uint32_t cp) {
  if (cp < 0x80) {
    return (cp >= '!' && cp <= '/') || (cp >= ':' && cp <= '@') ||
           (cp >= '[' && cp <= '`') || (cp >= '{' && cp <= '~');
  }
  switch (cp) {
    case 0xA1:   // inverted exclamation
    case 0xA7:
    case 0xAB:
    case 0xB6:
    case 0xB7:
    case 0xBB:
    case 0xBF:   // inverted question mark
      return true;
    default:
      return (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E);
  }
}

bool is_vowel_cp(uint32_t cp) {
  uint32_t lo = lower_cp(cp);
  switch (lo) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return true;
    default:
      break;
  }
  // Accented vowels in Latin-1: a-grave through u-umlaut, skipping
  // consonants (0xF1 n-tilde, 0xE7 c-cedilla) and the division sign.
  if (lo >= 0xE0 && lo <= 0xFF) {
    return lo != 0xE7 && lo != 0xF0 && lo != 0xF1 && lo != 0xF7 && lo != 0xFE;
  }
  return false;
}

std::string fold_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) utf8_append(out, lower_cp(utf8_decode(s, i)));
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      return parts;
    }
    parts.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> parts;
  size_t i = 0;
  std::string cur;
  while (i < s.size()) {
    size_t before = i;
    uint32_t cp = utf8_decode(s, i);
    if (is_space_cp(cp)) {
      if (!cur.empty()) {
        parts.push_back(std::move(cur));
        cur.clear();
      }
    } else {
      cur.append(s.substr(before, i - before));
    }
  }
  if (!cur.empty()) parts.push_back(std::move(cur));
  return parts;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

std::string trim(std::string_view s) {
  size_t b = 0;
  while (b < s.size() && (static_cast<unsigned char>(s[b]) <= ' ')) ++b;
  size_t e = s.size();
  while (e > b && (static_cast<unsigned char>(s[e - 1]) <= ' ')) --e;
  return std::string(s.substr(b, e - b));
}

std::string canonical_decimal(double v) {
  std::array<char, 64> buf;
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

}  // namespace relq
