#include "rootpipe/arabic_text.h"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "rootpipe/errors.h"

namespace rootpipe {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

template <std::size_t N>
constexpr bool Contains(const std::array<char16_t, N>& set, char16_t c) {
  return std::find(set.begin(), set.end(), c) != set.end();
}

std::string Hex(char32_t c) {
  char buf[16];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf,
                                 static_cast<unsigned>(c), 16);
  std::string out(buf, end);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return std::toupper(ch); });
  while (out.size() < 4) out.insert(out.begin(), '0');
  return "U+" + out;
}

void AppendUtf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// UTF-8

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    int extra = 0;
    char32_t c = 0;
    char32_t min = 0;
    if (lead < 0x80) {
      out.push_back(lead);
      ++i;
      continue;
    } else if ((lead & 0xE0) == 0xC0) {
      extra = 1, c = lead & 0x1F, min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2, c = lead & 0x0F, min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3, c = lead & 0x07, min = 0x10000;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    bool ok = true;
    for (int k = 0; k < extra; ++k, ++j) {
      if (j >= text.size() ||
          (static_cast<unsigned char>(text[j]) & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      c = (c << 6) | (static_cast<unsigned char>(text[j]) & 0x3F);
    }
    if (!ok || c < min || c > 0x10FFFF || (c >= 0xD800 && c <= 0xDFFF)) {
      out.push_back(kReplacement);
      // A truncated sequence resynchronizes on the next byte.
      i = ok ? j : i + 1;
      continue;
    }
    out.push_back(c);
    i = j;
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 2);
  for (char32_t c : text) AppendUtf8(out, c);
  return out;
}

std::string EncodeUtf8(std::u16string_view text) {
  // Only BMP letters are ever stored in words; surrogates are not paired.
  std::string out;
  out.reserve(text.size() * 2);
  for (char16_t c : text) AppendUtf8(out, c);
  return out;
}

// ---------------------------------------------------------------------------
// Letters

bool IsBaseArabicLetter(char32_t c) {
  return (c >= 0x0621 && c <= 0x063A) || (c >= 0x0641 && c <= 0x064A);
}

bool IsArabicDiacritic(char32_t c) {
  return (c >= 0x0610 && c <= 0x061A) ||  // honorifics and small marks
         (c >= 0x064B && c <= 0x065F) ||  // tanween, harakat, shadda, sukun
         c == 0x0670 ||                   // superscript alif
         (c >= 0x06D6 && c <= 0x06DC) || (c >= 0x06DF && c <= 0x06E4) ||
         (c >= 0x06E7 && c <= 0x06E8) || (c >= 0x06EA && c <= 0x06ED);
}

bool IsPrefixLetter(char16_t letter) { return Contains(kPrefixLetters, letter); }
bool IsSuffixLetter(char16_t letter) { return Contains(kSuffixLetters, letter); }
bool IsInfixVowel(char16_t letter) { return Contains(kInfixVowels, letter); }
bool IsFullInfixLetter(char16_t letter) {
  return Contains(kFullInfixLetters, letter);
}

LetterClass Classify(char16_t letter) {
  return {IsPrefixLetter(letter), IsSuffixLetter(letter),
          IsInfixVowel(letter)};
}

// ---------------------------------------------------------------------------
// Normalization

std::u32string StripDiacritics(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    // Tatweel is a stretching glyph, not a letter.
    if (IsArabicDiacritic(c) || c == letters::kTatweel) continue;
    out.push_back(c);
  }
  return out;
}

std::string StripDiacritics(std::string_view utf8) {
  return EncodeUtf8(StripDiacritics(DecodeUtf8(utf8)));
}

std::u32string NormalizeHamza(std::u32string_view text,
                              const NormalizeOptions& options) {
  std::u32string out(text);
  for (char32_t& c : out) {
    if (c == letters::kAlifHamzaBelow ||
        (options.fold_alif_madda && c == letters::kAlifMadda)) {
      c = letters::kAlif;
    }
  }
  return out;
}

std::string NormalizeHamza(std::string_view utf8,
                           const NormalizeOptions& options) {
  return EncodeUtf8(NormalizeHamza(DecodeUtf8(utf8), options));
}

NormalizedWord NormalizedWord::FromLetters(std::u16string_view letters) {
  if (letters.empty()) {
    throw Error(ErrorCode::kEmptyAfterNormalization,
                "no letters remain after normalization");
  }
  for (char16_t c : letters) {
    if (!IsBaseArabicLetter(c) || c == letters::kAlifHamzaBelow ||
        IsArabicDiacritic(c)) {
      throw Error(ErrorCode::kNonArabicCharacter,
                  Hex(c) + " is not a normalized Arabic letter");
    }
  }
  if (letters.size() > kMaxLetters) {
    throw Error(ErrorCode::kWordTooLong,
                std::to_string(letters.size()) + " letters exceed the " +
                    std::to_string(kMaxLetters) + "-letter word width");
  }
  return NormalizedWord(std::u16string(letters));
}

NormalizedWord NormalizedWord::Substr(std::size_t pos,
                                      std::size_t count) const {
  return NormalizedWord(letters_.substr(pos, count));
}

NormalizedWord NormalizeWord(std::string_view token,
                             const NormalizeOptions& options) {
  const std::u32string text = NormalizeHamza(
      StripDiacritics(DecodeUtf8(token)), options);
  if (text.empty()) {
    throw Error(ErrorCode::kEmptyAfterNormalization,
                "token '" + std::string(token) + "' has no letters");
  }
  std::u16string letters;
  letters.reserve(text.size());
  for (char32_t c : text) {
    if (!IsBaseArabicLetter(c)) {
      throw Error(ErrorCode::kNonArabicCharacter,
                  Hex(c) + " in token '" + std::string(token) + "'");
    }
    letters.push_back(static_cast<char16_t>(c));
  }
  return NormalizedWord::FromLetters(letters);
}

// ---------------------------------------------------------------------------
// Display names

const std::vector<std::pair<char16_t, std::string_view>>& DisplayNameTable() {
  static const std::vector<std::pair<char16_t, std::string_view>> kTable = {
      {0x0621, "Hamza"},       {0x0622, "AlifMadda"},
      {0x0623, "AlifHamzaAbove"}, {0x0624, "WawHamza"},
      {0x0625, "AlifHamzaBelow"}, {0x0626, "YaHamza"},
      {0x0627, "Alif"},        {0x0628, "Ba"},
      {0x0629, "TaMarbuta"},   {0x062A, "Ta"},
      {0x062B, "Tha"},         {0x062C, "Jim"},
      {0x062D, "Hha"},         {0x062E, "Kha"},
      {0x062F, "Dal"},         {0x0630, "Dhal"},
      {0x0631, "Ra"},          {0x0632, "Zay"},
      {0x0633, "Sin"},         {0x0634, "Shin"},
      {0x0635, "Sad"},         {0x0636, "Dad"},
      {0x0637, "Tta"},         {0x0638, "Zza"},
      {0x0639, "Ayn"},         {0x063A, "Ghayn"},
      {0x0641, "Fa"},          {0x0642, "Qaf"},
      {0x0643, "Kaf"},         {0x0644, "Lam"},
      {0x0645, "Mim"},         {0x0646, "Nun"},
      {0x0647, "Ha"},          {0x0648, "Waw"},
      {0x0649, "AlifMaqsura"}, {0x064A, "Ya"},
  };
  return kTable;
}

std::string_view ToDisplayName(char32_t letter) {
  const auto& table = DisplayNameTable();
  auto it = std::lower_bound(
      table.begin(), table.end(), letter,
      [](const auto& entry, char32_t c) { return entry.first < c; });
  if (it == table.end() || it->first != letter) {
    throw Error(ErrorCode::kUnknownLetter, Hex(letter) + " has no display name");
  }
  return it->second;
}

char16_t FromDisplayName(std::string_view name) {
  for (const auto& [letter, display] : DisplayNameTable()) {
    if (display == name) return letter;
  }
  throw Error(ErrorCode::kUnknownLetter,
              "no letter is named '" + std::string(name) + "'");
}

std::string RenderWord(std::u16string_view word, bool latin) {
  if (!latin) return EncodeUtf8(word);
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += '-';
    out += ToDisplayName(word[i]);
  }
  return out;
}

std::map<char16_t, std::string> LoadDisplayNameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFileUnreadable, path);
  std::map<char16_t, std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    unsigned code = 0;
    std::from_chars(line.data(), line.data() + tab, code, 16);
    names[static_cast<char16_t>(code)] = line.substr(tab + 1);
  }
  return names;
}

// ---------------------------------------------------------------------------
// Tokenization

bool IsUnicodeWhitespace(char32_t c) {
  return (c >= 0x09 && c <= 0x0D) || c == 0x20 || c == 0x85 || c == 0xA0 ||
         c == 0x1680 || (c >= 0x2000 && c <= 0x200A) || c == 0x2028 ||
         c == 0x2029 || c == 0x202F || c == 0x205F || c == 0x3000;
}

bool IsPunctuation(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
  }
  return c == 0x00A1 || c == 0x00AB || c == 0x00B7 || c == 0x00BB ||
         c == 0x00BF ||
         c == 0x060C || c == 0x060D || c == 0x061B || c == 0x061E ||
         c == 0x061F || (c >= 0x066A && c <= 0x066D) || c == 0x06D4 ||
         c == 0x06DD || c == 0x06DE || c == 0x06E9 ||  // ayah and sajdah signs
         c == 0xFD3E || c == 0xFD3F ||                 // ornate parentheses
         (c >= 0x200B && c <= 0x200F) ||               // zero-width marks
         (c >= 0x2010 && c <= 0x2027) || (c >= 0x2030 && c <= 0x205E) ||
         (c >= 0x3001 && c <= 0x3003) || (c >= 0x3008 && c <= 0x3011);
}

std::vector<std::string> Tokenize(std::string_view text) {
  const std::u32string decoded = DecodeUtf8(text);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < decoded.size()) {
    while (i < decoded.size() && IsUnicodeWhitespace(decoded[i])) ++i;
    std::size_t end = i;
    while (end < decoded.size() && !IsUnicodeWhitespace(decoded[end])) ++end;
    std::size_t first = i;
    std::size_t last = end;
    while (first < last && IsPunctuation(decoded[first])) ++first;
    while (last > first && IsPunctuation(decoded[last - 1])) --last;
    if (first < last) {
      tokens.push_back(EncodeUtf8(
          std::u32string_view(decoded).substr(first, last - first)));
    }
    i = end;
  }
  return tokens;
}

}  // namespace rootpipe
