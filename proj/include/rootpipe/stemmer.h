#ifndef ROOTPIPE_STEMMER_H_
#define ROOTPIPE_STEMMER_H_

// Five-stage verb root extraction:
//
//   1. CheckPositions      prefix/suffix membership bit per letter
//   2. ProduceBoundaries   mask each bit vector to its run from the word edge
//   3. GenerateStems       cut the word at every (prefix, suffix) boundary pair
//                          and keep the 3- and 4-letter pieces
//   4. CompareAndExtract   first trilateral and first quadrilateral lexicon hit
//   5. FinishExtraction    pick the root, or run the infix fallback
//
// Every function here is pure; words may be stemmed from any number of
// threads against one shared lexicon.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rootpipe/arabic_text.h"
#include "rootpipe/errors.h"
#include "rootpipe/infix_fallback.h"
#include "rootpipe/root_lexicon.h"
#include "rootpipe/stem_types.h"

namespace rootpipe {

struct ExtractOptions {
  bool infix_processing = true;
  // Slots per candidate list. kUnboundedCapacity lifts the hardware bound.
  std::size_t capacity = kDefaultCapacity;
  bool trace = false;
  // Bare alif passes the prefix check as if it were أ.
  bool alif_matches_hamza_prefix = true;
  FallbackOptions fallback;
  NormalizeOptions normalize;
};

// Prefix test applied at each of the first five positions.
bool PassesPrefixCheck(char16_t letter, bool alif_matches_hamza_prefix);

PositionBits CheckPositions(const NormalizedWord& word,
                            bool alif_matches_hamza_prefix = true);

BoundarySets ProduceBoundaries(const PositionBits& bits);

StemCandidates GenerateStems(const NormalizedWord& word,
                             const BoundarySets& bounds,
                             std::size_t capacity = kDefaultCapacity);

struct RootPair {
  std::optional<NormalizedWord> root3;
  std::optional<NormalizedWord> root4;

  friend bool operator==(const RootPair&, const RootPair&) = default;
};

RootPair CompareAndExtract(const StemCandidates& candidates,
                           const RootLexicon& lexicon);

enum class SizeClass { kNone, kBilateral, kTrilateral, kQuadrilateral };
enum class ExtractionStage { kDirect, kInfixRemoved, kRestoredForm, kNotFound };

std::string_view StageName(ExtractionStage stage);
// "2", "3", "4" or "none".
std::string_view SizeName(SizeClass size);

struct StemTrace {
  PositionBits bits;
  BoundarySets bounds;
  StemCandidates candidates;
  RootPair direct;
  std::optional<FallbackOutcome> fallback;
};

struct ExtractionResult {
  NormalizedWord word;
  std::optional<NormalizedWord> root;
  SizeClass size = SizeClass::kNone;
  ExtractionStage stage = ExtractionStage::kNotFound;
  StemCandidates candidates;
  std::optional<StemTrace> trace;
};

// Stage 5. Chooses root3 over root4; when neither exists and infix
// processing is on, runs FallbackExtract.
ExtractionResult FinishExtraction(NormalizedWord word,
                                  StemCandidates candidates,
                                  const RootPair& direct,
                                  const RootLexicon& lexicon,
                                  const ExtractOptions& options,
                                  std::optional<StemTrace> trace = {});

// Validates that a normalized word can yield stems. Throws kNotAWord for
// words shorter than three letters.
void RequireStemmable(const NormalizedWord& word);

// Runs all five stages on a raw token. Throws the normalization errors and
// kNotAWord.
ExtractionResult ExtractRoot(std::string_view token, const RootLexicon& lexicon,
                             const ExtractOptions& options = {});

// Non-throwing per-token outcome for batch and corpus work.
struct TokenOutcome {
  std::string token;
  std::optional<ExtractionResult> result;
  std::optional<ErrorCode> error;
};

// Stems every token; work is split across `threads` workers (0 picks the
// hardware concurrency). Output order matches input order.
std::vector<TokenOutcome> ExtractAll(const std::vector<std::string>& tokens,
                                     const RootLexicon& lexicon,
                                     const ExtractOptions& options = {},
                                     unsigned threads = 0);

// Trace lines S1..S5, letters rendered as Arabic or display names.
std::vector<std::string> RenderTrace(const StemTrace& trace, bool latin);

std::string RenderBoundaries(const BoundarySets& bounds);
std::string RenderCandidates(const StemCandidates& candidates, bool latin);
std::string RenderRootPair(const RootPair& pair, bool latin);

}  // namespace rootpipe

#endif  // ROOTPIPE_STEMMER_H_
