#ifndef ROOTPIPE_ARABIC_TEXT_H_
#define ROOTPIPE_ARABIC_TEXT_H_

// Character-level handling of Arabic text: UTF-8 conversion, diacritic
// stripping, hamza normalization, letter classes, display names and
// corpus tokenization.
//
// Words are held as UTF-16 code units. Every base Arabic letter sits in the
// BMP, so one code unit is one letter, which is also the width of a
// character register in the hardware datapath.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rootpipe {

// ---------------------------------------------------------------------------
// UTF-8

// Malformed sequences decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);
std::string EncodeUtf8(std::u16string_view text);

// ---------------------------------------------------------------------------
// Letters

namespace letters {
inline constexpr char16_t kHamza = u'ء';
inline constexpr char16_t kAlifMadda = u'آ';
inline constexpr char16_t kAlifHamzaAbove = u'أ';
inline constexpr char16_t kAlifHamzaBelow = u'إ';
inline constexpr char16_t kAlif = u'ا';
inline constexpr char16_t kTatweel = u'ـ';
inline constexpr char16_t kWaw = u'و';
inline constexpr char16_t kAlifMaqsura = u'ى';
inline constexpr char16_t kYa = u'ي';
}  // namespace letters

// The prefix letters of the checkPrefix constant: أ ت س ف ل ن ي.
inline constexpr std::array<char16_t, 7> kPrefixLetters = {
    u'أ', u'ت', u'س', u'ف',
    u'ل', u'ن', u'ي'};

// Distinct letters of the suffix mnemonic ايتيهكمون (ي repeats).
inline constexpr std::array<char16_t, 8> kSuffixLetters = {
    u'ا', u'ي', u'ت', u'ه',
    u'ك', u'م', u'و', u'ن'};

// The long vowels ا و ي.
inline constexpr std::array<char16_t, 3> kInfixVowels = {
    u'ا', u'و', u'ي'};

// Letters of the infix mnemonic اتوني.
inline constexpr std::array<char16_t, 5> kFullInfixLetters = {
    u'ا', u'ت', u'و', u'ن', u'ي'};

// Base alphabet: U+0621..U+063A and U+0641..U+064A.
bool IsBaseArabicLetter(char32_t c);

// Harakat, tanween, shadda, sukun, superscript alif and Quranic annotation
// marks in the Arabic block.
bool IsArabicDiacritic(char32_t c);

struct LetterClass {
  bool is_prefix_letter = false;
  bool is_suffix_letter = false;
  bool is_infix_vowel = false;

  friend bool operator==(const LetterClass&, const LetterClass&) = default;
};

LetterClass Classify(char16_t letter);
bool IsPrefixLetter(char16_t letter);
bool IsSuffixLetter(char16_t letter);
bool IsInfixVowel(char16_t letter);
bool IsFullInfixLetter(char16_t letter);

// ---------------------------------------------------------------------------
// Normalization

struct NormalizeOptions {
  // Map آ to ا. Off by default; only إ is folded unconditionally.
  bool fold_alif_madda = false;
};

// A diacritic-free, hamza-normalized word of 1..15 base Arabic letters.
class NormalizedWord {
 public:
  static constexpr std::size_t kMaxLetters = 15;

  // Validates an already-normalized letter sequence. Throws Error with
  // kEmptyAfterNormalization, kWordTooLong or kNonArabicCharacter.
  static NormalizedWord FromLetters(std::u16string_view letters);

  std::u16string_view letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  char16_t operator[](std::size_t i) const { return letters_[i]; }

  NormalizedWord Substr(std::size_t pos, std::size_t count) const;
  std::string ToUtf8() const { return EncodeUtf8(letters_); }

  friend bool operator==(const NormalizedWord&,
                         const NormalizedWord&) = default;
  friend auto operator<=>(const NormalizedWord&,
                          const NormalizedWord&) = default;

 private:
  explicit NormalizedWord(std::u16string letters)
      : letters_(std::move(letters)) {}

  std::u16string letters_;
};

std::u32string StripDiacritics(std::u32string_view text);
std::string StripDiacritics(std::string_view utf8);

std::u32string NormalizeHamza(std::u32string_view text,
                              const NormalizeOptions& options = {});
std::string NormalizeHamza(std::string_view utf8,
                           const NormalizeOptions& options = {});

// StripDiacritics then NormalizeHamza, then validation as in
// NormalizedWord::FromLetters.
NormalizedWord NormalizeWord(std::string_view token,
                             const NormalizeOptions& options = {});

// ---------------------------------------------------------------------------
// Display names

// Romanized name used in traces, e.g. س -> "Sin". Throws kUnknownLetter.
std::string_view ToDisplayName(char32_t letter);
// Inverse of ToDisplayName. Throws kUnknownLetter.
char16_t FromDisplayName(std::string_view name);

// Renders a word either as Arabic UTF-8 or as dash-joined display names.
std::string RenderWord(std::u16string_view word, bool latin);

// The built-in table, ordered by codepoint.
const std::vector<std::pair<char16_t, std::string_view>>& DisplayNameTable();

// Parses a `<codepoint-hex><TAB><ascii-name>` file. Throws kFileUnreadable.
std::map<char16_t, std::string> LoadDisplayNameFile(const std::string& path);

// ---------------------------------------------------------------------------
// Tokenization

bool IsUnicodeWhitespace(char32_t c);
bool IsPunctuation(char32_t c);

// Splits on whitespace and trims punctuation from both token edges. Empty
// tokens are dropped.
std::vector<std::string> Tokenize(std::string_view text);

}  // namespace rootpipe

#endif  // ROOTPIPE_ARABIC_TEXT_H_
