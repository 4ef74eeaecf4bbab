#ifndef ROOTPIPE_ROOT_LEXICON_H_
#define ROOTPIPE_ROOT_LEXICON_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rootpipe/arabic_text.h"

namespace rootpipe {

struct LexiconStats {
  std::size_t bilateral = 0;
  std::size_t trilateral = 0;
  std::size_t quadrilateral = 0;
  std::size_t total = 0;

  friend bool operator==(const LexiconStats&, const LexiconStats&) = default;
};

// Known verb roots of 2, 3 and 4 letters. Each length has its own sorted
// partition, so membership is a binary search. Immutable after construction.
class RootLexicon {
 public:
  static constexpr std::size_t kMinRootLength = 2;
  static constexpr std::size_t kMaxRootLength = 4;

  RootLexicon() = default;

  // One root per line; '#' comments and blank lines are skipped, CRLF is
  // accepted. Throws kFileUnreadable, or kMalformedRoot naming the line.
  static RootLexicon Load(const std::string& path,
                          const NormalizeOptions& options = {});

  // Builds from UTF-8 roots. Throws kMalformedRoot on the first bad entry.
  static RootLexicon FromRoots(std::span<const std::string> roots,
                               const NormalizeOptions& options = {});

  bool Contains(const NormalizedWord& stem) const;
  bool Contains(std::u16string_view stem) const;

  // Same as Contains, but adds the number of three-way comparisons the
  // search performed to *comparisons.
  bool Contains(std::u16string_view stem, std::size_t* comparisons) const;

  LexiconStats Stats() const;

  // Sorted roots of one length; empty span for lengths outside 2..4.
  std::span<const std::u16string> Partition(std::size_t length) const;

  const std::string& source() const { return source_; }

 private:
  void Insert(std::u16string root);
  void Seal();

  std::array<std::vector<std::u16string>, kMaxRootLength - kMinRootLength + 1>
      by_length_;
  std::string source_;
};

}  // namespace rootpipe

#endif  // ROOTPIPE_ROOT_LEXICON_H_
