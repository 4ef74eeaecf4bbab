#include "rootpipe/stemmer.h"

#include <algorithm>
#include <thread>
#include <utility>

namespace rootpipe {

namespace {

std::string Bits(const bool* begin, std::size_t count) {
  std::string out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(begin[i] ? '1' : '0');
  return out;
}

std::string RenderList(const std::vector<NormalizedWord>& words, bool latin) {
  std::string out = "[";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += ',';
    out += RenderWord(words[i].letters(), latin);
  }
  return out + "]";
}

std::string RenderOptional(const std::optional<NormalizedWord>& word,
                           bool latin) {
  return word ? RenderWord(word->letters(), latin) : std::string("-");
}

SizeClass SizeOf(const NormalizedWord& root) {
  switch (root.size()) {
    case 2: return SizeClass::kBilateral;
    case 3: return SizeClass::kTrilateral;
    case 4: return SizeClass::kQuadrilateral;
    default: return SizeClass::kNone;
  }
}

}  // namespace

std::string PositionBits::PrefixString() const {
  return Bits(prefix.data(), prefix_count());
}

std::string PositionBits::SuffixString() const {
  return Bits(suffix.data(), length);
}

bool PassesPrefixCheck(char16_t letter, bool alif_matches_hamza_prefix) {
  if (alif_matches_hamza_prefix && letter == letters::kAlif) {
    return IsPrefixLetter(letters::kAlifHamzaAbove);
  }
  return IsPrefixLetter(letter);
}

PositionBits CheckPositions(const NormalizedWord& word,
                            bool alif_matches_hamza_prefix) {
  PositionBits bits;
  bits.length = word.size();
  for (std::size_t i = 0; i < bits.prefix_count(); ++i) {
    bits.prefix[i] = PassesPrefixCheck(word[i], alif_matches_hamza_prefix);
  }
  for (std::size_t j = 0; j < word.size(); ++j) {
    bits.suffix[j] = IsSuffixLetter(word[j]);
  }
  return bits;
}

BoundarySets ProduceBoundaries(const PositionBits& bits) {
  BoundarySets bounds;
  bounds.prefix_ends.push_back(-1);
  for (std::size_t p = 0; p < bits.prefix_count() && bits.prefix[p]; ++p) {
    bounds.prefix_ends.push_back(static_cast<int>(p));
  }
  // Scan the suffix bits from the end; the first 0 masks everything before.
  const int length = static_cast<int>(bits.length);
  int first = length;
  while (first > 0 && bits.suffix[first - 1]) --first;
  for (int s = first; s <= length; ++s) bounds.suffix_starts.push_back(s);
  return bounds;
}

StemCandidates GenerateStems(const NormalizedWord& word,
                             const BoundarySets& bounds,
                             std::size_t capacity) {
  StemCandidates out;
  const auto append = [&](std::vector<NormalizedWord>& list, int p, int len) {
    if (list.size() >= capacity) {
      out.truncated = true;
      return;
    }
    list.push_back(word.Substr(static_cast<std::size_t>(p + 1),
                               static_cast<std::size_t>(len)));
  };
  for (int p : bounds.prefix_ends) {
    for (auto it = bounds.suffix_starts.rbegin();
         it != bounds.suffix_starts.rend(); ++it) {
      const int len = *it - p - 1;
      if (len == 3) {
        append(out.tri, p, len);
      } else if (len == 4) {
        append(out.quad, p, len);
      }
    }
  }
  return out;
}

RootPair CompareAndExtract(const StemCandidates& candidates,
                           const RootLexicon& lexicon) {
  RootPair pair;
  const auto first_hit = [&](const std::vector<NormalizedWord>& stems)
      -> std::optional<NormalizedWord> {
    for (const NormalizedWord& stem : stems) {
      if (lexicon.Contains(stem)) return stem;
    }
    return std::nullopt;
  };
  pair.root3 = first_hit(candidates.tri);
  pair.root4 = first_hit(candidates.quad);
  return pair;
}

std::string_view StageName(ExtractionStage stage) {
  switch (stage) {
    case ExtractionStage::kDirect: return "direct";
    case ExtractionStage::kInfixRemoved: return "infixRemoved";
    case ExtractionStage::kRestoredForm: return "restoredForm";
    case ExtractionStage::kNotFound: break;
  }
  return "notFound";
}

std::string_view SizeName(SizeClass size) {
  switch (size) {
    case SizeClass::kBilateral: return "2";
    case SizeClass::kTrilateral: return "3";
    case SizeClass::kQuadrilateral: return "4";
    case SizeClass::kNone: break;
  }
  return "none";
}

ExtractionResult FinishExtraction(NormalizedWord word,
                                  StemCandidates candidates,
                                  const RootPair& direct,
                                  const RootLexicon& lexicon,
                                  const ExtractOptions& options,
                                  std::optional<StemTrace> trace) {
  ExtractionResult result{std::move(word), std::nullopt, SizeClass::kNone,
                          ExtractionStage::kNotFound, {}, std::nullopt};
  if (direct.root3 || direct.root4) {
    result.root = direct.root3 ? direct.root3 : direct.root4;
    result.stage = ExtractionStage::kDirect;
  } else if (options.infix_processing) {
    FallbackOutcome fallback =
        FallbackExtract(candidates, lexicon, options.fallback);
    if (fallback.root) {
      result.root = fallback.root;
      result.stage = fallback.method == FallbackMethod::kRestoredForm
                         ? ExtractionStage::kRestoredForm
                         : ExtractionStage::kInfixRemoved;
    }
    if (trace) trace->fallback = std::move(fallback);
  }
  if (result.root) result.size = SizeOf(*result.root);
  result.candidates = std::move(candidates);
  result.trace = std::move(trace);
  return result;
}

void RequireStemmable(const NormalizedWord& word) {
  if (word.size() < 3) {
    throw Error(ErrorCode::kNotAWord,
                "'" + word.ToUtf8() + "' is shorter than any stem");
  }
}

ExtractionResult ExtractRoot(std::string_view token, const RootLexicon& lexicon,
                             const ExtractOptions& options) {
  NormalizedWord word = NormalizeWord(token, options.normalize);
  RequireStemmable(word);
  const PositionBits bits =
      CheckPositions(word, options.alif_matches_hamza_prefix);
  const BoundarySets bounds = ProduceBoundaries(bits);
  StemCandidates candidates = GenerateStems(word, bounds, options.capacity);
  const RootPair direct = CompareAndExtract(candidates, lexicon);

  std::optional<StemTrace> trace;
  if (options.trace) trace = StemTrace{bits, bounds, candidates, direct, {}};
  return FinishExtraction(std::move(word), std::move(candidates), direct,
                          lexicon, options, std::move(trace));
}

std::vector<TokenOutcome> ExtractAll(const std::vector<std::string>& tokens,
                                     const RootLexicon& lexicon,
                                     const ExtractOptions& options,
                                     unsigned threads) {
  std::vector<TokenOutcome> out(tokens.size());
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i].token = tokens[i];
      try {
        out[i].result = ExtractRoot(tokens[i], lexicon, options);
      } catch (const Error& e) {
        out[i].error = e.code();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers =
      std::min<std::size_t>(threads, std::max<std::size_t>(1, tokens.size() / 256));
  if (workers <= 1) {
    work(0, tokens.size());
    return out;
  }
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (tokens.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < tokens.size(); begin += chunk) {
      pool.emplace_back(work, begin, std::min(tokens.size(), begin + chunk));
    }
  }
  return out;
}

std::string RenderBoundaries(const BoundarySets& bounds) {
  const auto join = [](const std::vector<int>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(values[i]);
    }
    return out + "}";
  };
  return "P=" + join(bounds.prefix_ends) + " S=" + join(bounds.suffix_starts);
}

std::string RenderCandidates(const StemCandidates& candidates, bool latin) {
  std::string out = "tri=" + RenderList(candidates.tri, latin) +
                    " quad=" + RenderList(candidates.quad, latin);
  if (candidates.truncated) out += " truncated=1";
  return out;
}

std::string RenderRootPair(const RootPair& pair, bool latin) {
  return "root3=" + RenderOptional(pair.root3, latin) +
         " root4=" + RenderOptional(pair.root4, latin);
}

std::vector<std::string> RenderTrace(const StemTrace& trace, bool latin) {
  std::vector<std::string> lines;
  lines.push_back("S1 prefixBits=" + trace.bits.PrefixString() +
                  " suffixBits=" + trace.bits.SuffixString());
  lines.push_back("S2 " + RenderBoundaries(trace.bounds));
  lines.push_back("S3 " + RenderCandidates(trace.candidates, latin));
  lines.push_back("S4 " + RenderRootPair(trace.direct, latin));
  if (!trace.fallback) {
    lines.push_back("S5 fallback=skipped");
  } else {
    std::string line = "S5 fallback=" +
                       std::string(FallbackMethodName(trace.fallback->method)) +
                       " root=" + RenderOptional(trace.fallback->root, latin) +
                       " attempted=" + RenderList(trace.fallback->attempted, latin);
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace rootpipe
