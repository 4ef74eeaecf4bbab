#include "rootpipe/infix_fallback.h"

#include <string>

namespace rootpipe {

namespace {

bool IsInfix(char16_t letter, const FallbackOptions& options) {
  return options.full_infix_set ? IsFullInfixLetter(letter)
                                : IsInfixVowel(letter);
}

std::vector<NormalizedWord> DropSecondInfix(
    std::span<const NormalizedWord> stems, const FallbackOptions& options) {
  std::vector<NormalizedWord> out;
  for (const NormalizedWord& stem : stems) {
    if (stem.size() < 2 || !IsInfix(stem[1], options)) continue;
    std::u16string reduced(stem.letters());
    reduced.erase(1, 1);
    out.push_back(NormalizedWord::FromLetters(reduced));
  }
  return out;
}

}  // namespace

RepairedStems RemoveInfix(const StemCandidates& candidates,
                          const FallbackOptions& options) {
  return {DropSecondInfix(candidates.tri, options),
          DropSecondInfix(candidates.quad, options)};
}

std::vector<NormalizedWord> RestoreOriginalForm(
    std::span<const NormalizedWord> tri) {
  std::vector<NormalizedWord> out;
  for (const NormalizedWord& stem : tri) {
    if (stem.size() != 3 || stem[1] != letters::kAlif) continue;
    std::u16string restored(stem.letters());
    restored[1] = letters::kWaw;
    out.push_back(NormalizedWord::FromLetters(restored));
  }
  return out;
}

std::string_view FallbackMethodName(FallbackMethod method) {
  switch (method) {
    case FallbackMethod::kInfixRemoved: return "infixRemoved";
    case FallbackMethod::kRestoredForm: return "restoredForm";
    case FallbackMethod::kNone: break;
  }
  return "none";
}

FallbackOutcome FallbackExtract(const StemCandidates& candidates,
                                const RootLexicon& lexicon,
                                const FallbackOptions& options) {
  FallbackOutcome outcome;
  const auto try_all = [&](const std::vector<NormalizedWord>& stems,
                           FallbackMethod method) {
    for (const NormalizedWord& stem : stems) {
      outcome.attempted.push_back(stem);
      if (lexicon.Contains(stem)) {
        outcome.root = stem;
        outcome.method = method;
        return true;
      }
    }
    return false;
  };

  if (try_all(RestoreOriginalForm(candidates.tri),
              FallbackMethod::kRestoredForm)) {
    return outcome;
  }
  const RepairedStems removed = RemoveInfix(candidates, options);
  if (try_all(removed.bilateral, FallbackMethod::kInfixRemoved)) return outcome;
  try_all(removed.trilateral, FallbackMethod::kInfixRemoved);
  return outcome;
}

}  // namespace rootpipe
