#ifndef ROOTPIPE_CORPUS_EVAL_H_
#define ROOTPIPE_CORPUS_EVAL_H_

// Corpus-level accuracy and frequency reporting.
//
// The headline metric is root-type accuracy: the fraction of distinct gold
// roots that the stemmer produced at least once anywhere in the corpus.
// Token-level accuracy is reported only when a word -> root gold map is
// supplied.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rootpipe/root_lexicon.h"
#include "rootpipe/stemmer.h"

namespace rootpipe {

struct GoldRootSet {
  std::set<std::u16string> roots;

  // Same file format as the lexicon. Throws kFileUnreadable, kMalformedRoot.
  static GoldRootSet Load(const std::string& path);
  static GoldRootSet FromRoots(const std::vector<std::string>& roots);
};

// Normalized word -> expected root, from `word<TAB>root` lines.
using GoldMap = std::map<std::u16string, std::u16string>;
GoldMap LoadGoldMap(const std::string& path);

// Root (UTF-8) -> count.
using CountTable = std::map<std::string, std::uint64_t>;

// `root<TAB>count` lines, '#' comments allowed. Throws kFileUnreadable.
CountTable LoadCountTable(const std::string& path);

struct EvalFailure {
  std::string token;
  std::string reason;  // error name or "notFound"
};

struct EvalReport {
  std::uint64_t gold_root_count = 0;
  std::uint64_t extracted_gold_roots = 0;
  std::vector<std::string> missing_gold_roots;

  std::uint64_t token_count = 0;
  std::uint64_t succeeded = 0;
  std::vector<EvalFailure> failures;
  std::uint64_t truncation_events = 0;
  std::uint64_t fallback_extractions = 0;
  CountTable per_root_counts;

  std::optional<std::uint64_t> mapped_tokens;
  std::optional<std::uint64_t> correct_tokens;

  double root_type_accuracy() const {
    return gold_root_count == 0
               ? 0.0
               : static_cast<double>(extracted_gold_roots) /
                     static_cast<double>(gold_root_count);
  }
};

// Throws kEmptyGold.
EvalReport EvaluateTokens(const std::vector<std::string>& tokens,
                          const GoldRootSet& gold, const RootLexicon& lexicon,
                          const ExtractOptions& options = {},
                          const GoldMap* gold_map = nullptr);

// Reads and tokenizes the corpus first. Throws kFileUnreadable, kEmptyGold.
EvalReport EvaluateCorpus(const std::string& corpus_path,
                          const GoldRootSet& gold, const RootLexicon& lexicon,
                          const ExtractOptions& options = {},
                          const GoldMap* gold_map = nullptr);

using FrequencyTable = std::vector<std::pair<std::string, std::uint64_t>>;

// Count descending, ties by root ascending.
FrequencyTable SortByFrequency(const CountTable& counts);

FrequencyTable FrequencyTableFor(const std::vector<std::string>& tokens,
                                 const RootLexicon& lexicon,
                                 const ExtractOptions& options = {});
FrequencyTable FrequencyTableForCorpus(const std::string& corpus_path,
                                       const RootLexicon& lexicon,
                                       const ExtractOptions& options = {});

struct DifferenceRow {
  std::string root;
  std::uint64_t mine = 0;
  std::uint64_t reference = 0;
  std::uint64_t actual = 0;
  double percent = 0;  // |mine - reference| / actual * 100
};

// One row per root of the reference table, in reference order of
// decreasing actual count. Roots absent from `mine` count as 0. Throws
// kMissingActualCount when a root has no (or a zero) actual count.
std::vector<DifferenceRow> CompareReports(const CountTable& mine,
                                          const CountTable& reference,
                                          const CountTable& actual);

std::string ReadTextFile(const std::string& path);

std::vector<std::string> RenderEvalReport(const EvalReport& report,
                                          bool records);
std::vector<std::string> RenderDifferences(
    const std::vector<DifferenceRow>& rows, bool records);
std::vector<std::string> RenderFrequencyTable(const FrequencyTable& table,
                                              bool records);

}  // namespace rootpipe

#endif  // ROOTPIPE_CORPUS_EVAL_H_
