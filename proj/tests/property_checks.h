#ifndef ROOTPIPE_TESTS_PROPERTY_CHECKS_H_
#define ROOTPIPE_TESTS_PROPERTY_CHECKS_H_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "oracles.h"
#include "rootpipe/errors.h"
#include "rootpipe/pipeline_sim.h"
#include "rootpipe/stemmer.h"

namespace rootpipe::testing {

struct CheckTally {
  std::size_t cases = 0;
  std::vector<std::string> mismatches;  // first few offending inputs
  void Fail(const std::string& what) {
    if (mismatches.size() < 10) mismatches.push_back(what);
  }
  bool ok() const { return cases > 0 && mismatches.empty(); }
};

inline const std::u16string& BaseAlphabet() {
  static const std::u16string letters = [] {
    std::u16string out;
    for (char16_t c = 0x0621; c <= 0x063A; ++c) {
      if (c != 0x0625) out.push_back(c);  // folds to alif
    }
    for (char16_t c = 0x0641; c <= 0x064A; ++c) out.push_back(c);
    return out;
  }();
  return letters;
}

// Half the draws come from the affix letters so that long affix runs occur.
inline std::u16string RandomWord(std::mt19937& rng, int min_len, int max_len) {
  static const std::u16string affix = u"أاتسفلنيهكمو";
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<std::size_t> any(0, BaseAlphabet().size() - 1);
  std::uniform_int_distribution<std::size_t> aff(0, affix.size() - 1);
  std::u16string out;
  for (int i = len(rng); i > 0; --i) {
    out.push_back(coin(rng) ? affix[aff(rng)] : BaseAlphabet()[any(rng)]);
  }
  return out;
}

inline CheckTally CheckStemsAgainstBruteForce(std::uint32_t seed,
                                              std::size_t count) {
  std::mt19937 rng(seed);
  CheckTally tally;
  for (std::size_t i = 0; i < count; ++i) {
    const std::u16string letters = RandomWord(rng, 3, 15);
    const NormalizedWord w = NormalizedWord::FromLetters(letters);
    const StemCandidates got = GenerateStems(
        w, ProduceBoundaries(CheckPositions(w)), kUnboundedCapacity);
    std::vector<std::u16string> tri, quad;
    for (const auto& s : got.tri) tri.emplace_back(s.letters());
    for (const auto& s : got.quad) quad.emplace_back(s.letters());
    std::sort(tri.begin(), tri.end());
    std::sort(quad.begin(), quad.end());
    const oracle::Stems want = oracle::BruteForceStems(letters, true);
    ++tally.cases;
    if (tri != want.tri || quad != want.quad || got.truncated) {
      tally.Fail(EncodeUtf8(letters));
    }
  }
  return tally;
}

inline bool SameOutcome(const TokenOutcome& a, const TokenOutcome& b) {
  if (a.token != b.token || a.error != b.error) return false;
  if (a.result.has_value() != b.result.has_value()) return false;
  if (!a.result) return true;
  return a.result->word == b.result->word && a.result->root == b.result->root &&
         a.result->size == b.result->size &&
         a.result->stage == b.result->stage &&
         a.result->candidates == b.result->candidates;
}

inline TokenOutcome DirectOutcome(const std::string& token,
                                  const RootLexicon& lexicon,
                                  const ExtractOptions& options) {
  TokenOutcome out;
  out.token = token;
  try {
    out.result = ExtractRoot(token, lexicon, options);
  } catch (const Error& e) {
    out.error = e.code();
  }
  return out;
}

// Random word lists, including tokens that fail normalization.
inline CheckTally CheckSimulatorEquivalence(std::uint32_t seed,
                                            std::size_t lists,
                                            const RootLexicon& lexicon) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> list_len(1, 40);
  std::uniform_int_distribution<int> odd(0, 19);
  CheckTally tally;
  for (std::size_t l = 0; l < lists; ++l) {
    std::vector<std::string> words;
    for (int i = list_len(rng); i > 0; --i) {
      switch (odd(rng)) {
        case 0: words.push_back("xyz"); break;
        case 1: words.push_back(EncodeUtf8(RandomWord(rng, 1, 2))); break;
        case 2: words.push_back(EncodeUtf8(RandomWord(rng, 16, 18))); break;
        default: words.push_back(EncodeUtf8(RandomWord(rng, 3, 15)));
      }
    }
    for (ProcessorMode mode :
         {ProcessorMode::kNonPipelined, ProcessorMode::kPipelined}) {
      const SimRun run = SimulateTrace({mode, 1e6}, words, lexicon);
      ++tally.cases;
      bool same = run.results.size() == words.size() &&
                  run.total_cycles == CyclesFor(mode, words.size());
      for (std::size_t i = 0; same && i < words.size(); ++i) {
        same = SameOutcome(run.results[i], DirectOutcome(words[i], lexicon, {}));
      }
      if (!same) tally.Fail(std::string(ModeName(mode)) + " list " +
                            std::to_string(l));
    }
  }
  return tally;
}

// Random text with diacritics, hamza forms and tatweel mixed in.
inline CheckTally CheckNormalizeIdempotence(std::uint32_t seed,
                                            std::size_t count) {
  std::mt19937 rng(seed);
  const std::u32string extras = U"ًٌٍَُِّ"
                                U"ْٰـإآ";
  std::uniform_int_distribution<std::size_t> pick_extra(0, extras.size() - 1);
  std::bernoulli_distribution mark(0.3);
  CheckTally tally;
  for (std::size_t i = 0; i < count; ++i) {
    const std::u16string base = RandomWord(rng, 1, 15);
    std::u32string raw;
    for (char16_t c : base) {
      raw.push_back(c);
      if (mark(rng)) raw.push_back(extras[pick_extra(rng)]);
    }
    const std::string token = EncodeUtf8(raw);
    try {
      const NormalizedWord once = NormalizeWord(token);
      ++tally.cases;
      if (NormalizeWord(once.ToUtf8()) != once) tally.Fail(token);
    } catch (const Error&) {
    }
  }
  return tally;
}

}  // namespace rootpipe::testing

#endif  // ROOTPIPE_TESTS_PROPERTY_CHECKS_H_
