#ifndef ROOTPIPE_STEM_TYPES_H_
#define ROOTPIPE_STEM_TYPES_H_

#include <array>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "rootpipe/arabic_text.h"

namespace rootpipe {

// Number of leading positions examined for prefix letters.
inline constexpr std::size_t kPrefixWindow = 5;

// Default number of slots per candidate list (the hardware counter bound).
inline constexpr std::size_t kDefaultCapacity = 6;
inline constexpr std::size_t kUnboundedCapacity =
    std::numeric_limits<std::size_t>::max();

// Stage 1 output: one membership bit per examined position, in logical
// order (index 0 is the first letter of the word).
struct PositionBits {
  std::size_t length = 0;
  std::array<bool, kPrefixWindow> prefix{};
  std::array<bool, NormalizedWord::kMaxLetters> suffix{};

  std::size_t prefix_count() const {
    return length < kPrefixWindow ? length : kPrefixWindow;
  }

  // "1"/"0" per position, index 0 first.
  std::string PrefixString() const;
  std::string SuffixString() const;

  friend bool operator==(const PositionBits&, const PositionBits&) = default;
};

// Stage 2 output. prefix_ends holds p in {-1..4}: the prefix is word[0..p].
// suffix_starts holds s in {0..L}: the suffix is word[s..L-1]. -1 and L are
// always present (empty affixes). Both are sorted ascending.
struct BoundarySets {
  std::vector<int> prefix_ends;
  std::vector<int> suffix_starts;

  friend bool operator==(const BoundarySets&, const BoundarySets&) = default;
};

// Stage 3 output: substrings of length 3 and 4 in generation order.
struct StemCandidates {
  std::vector<NormalizedWord> tri;
  std::vector<NormalizedWord> quad;
  // Set when a list hit its capacity and further stems were dropped.
  bool truncated = false;

  bool empty() const { return tri.empty() && quad.empty(); }

  friend bool operator==(const StemCandidates&,
                         const StemCandidates&) = default;
};

}  // namespace rootpipe

#endif  // ROOTPIPE_STEM_TYPES_H_
