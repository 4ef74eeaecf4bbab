#ifndef ROOTPIPE_INFIX_FALLBACK_H_
#define ROOTPIPE_INFIX_FALLBACK_H_

// Repairs applied when no stem candidate matched the lexicon directly:
// restoring a weak middle radical (قال -> قول) and removing an infix letter
// in second position (حاج -> حج, كاتب -> كتب). Each repair is applied once
// to the stage-3 candidates; repaired stems are never repaired again.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rootpipe/root_lexicon.h"
#include "rootpipe/stem_types.h"

namespace rootpipe {

struct FallbackOptions {
  // Test the second letter against all of اتوني instead of ا و ي.
  bool full_infix_set = false;
};

struct RepairedStems {
  std::vector<NormalizedWord> bilateral;    // from trilateral stems
  std::vector<NormalizedWord> trilateral;   // from quadrilateral stems
};

RepairedStems RemoveInfix(const StemCandidates& candidates,
                          const FallbackOptions& options = {});

// Replaces a second-position ا with و in each trilateral stem.
std::vector<NormalizedWord> RestoreOriginalForm(
    std::span<const NormalizedWord> tri);

enum class FallbackMethod { kNone, kInfixRemoved, kRestoredForm };

std::string_view FallbackMethodName(FallbackMethod method);

struct FallbackOutcome {
  std::optional<NormalizedWord> root;
  FallbackMethod method = FallbackMethod::kNone;
  // Repaired stems looked up, in order, up to and including the match.
  std::vector<NormalizedWord> attempted;
};

// Tries restored forms first, then bilateral and trilateral infix removals.
FallbackOutcome FallbackExtract(const StemCandidates& candidates,
                                const RootLexicon& lexicon,
                                const FallbackOptions& options = {});

}  // namespace rootpipe

#endif  // ROOTPIPE_INFIX_FALLBACK_H_
