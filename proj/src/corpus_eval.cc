#include "rootpipe/corpus_eval.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rootpipe/errors.h"
#include "rootpipe/format.h"

namespace rootpipe {

namespace {

std::string_view Trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Tab-separated two-column lines, skipping comments and blanks.
std::vector<std::pair<std::string, std::string>> ReadPairs(
    const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFileUnreadable, path);
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto tab = view.find('\t');
    if (tab == std::string_view::npos) continue;
    pairs.emplace_back(std::string(Trim(view.substr(0, tab))),
                       std::string(Trim(view.substr(tab + 1))));
  }
  return pairs;
}

std::string NormalizedKey(const std::string& root) {
  try {
    return NormalizeWord(root).ToUtf8();
  } catch (const Error&) {
    return root;
  }
}

}  // namespace

GoldRootSet GoldRootSet::Load(const std::string& path) {
  const RootLexicon lexicon = RootLexicon::Load(path);
  GoldRootSet gold;
  for (std::size_t n = RootLexicon::kMinRootLength;
       n <= RootLexicon::kMaxRootLength; ++n) {
    for (const auto& root : lexicon.Partition(n)) gold.roots.insert(root);
  }
  return gold;
}

GoldRootSet GoldRootSet::FromRoots(const std::vector<std::string>& roots) {
  const RootLexicon lexicon = RootLexicon::FromRoots(roots);
  GoldRootSet gold;
  for (std::size_t n = RootLexicon::kMinRootLength;
       n <= RootLexicon::kMaxRootLength; ++n) {
    for (const auto& root : lexicon.Partition(n)) gold.roots.insert(root);
  }
  return gold;
}

GoldMap LoadGoldMap(const std::string& path) {
  GoldMap map;
  for (const auto& [word, root] : ReadPairs(path)) {
    try {
      map[std::u16string(NormalizeWord(word).letters())] =
          std::u16string(NormalizeWord(root).letters());
    } catch (const Error& e) {
      throw Error(ErrorCode::kMalformedRoot, path + ": " + e.what());
    }
  }
  return map;
}

CountTable LoadCountTable(const std::string& path) {
  CountTable table;
  for (const auto& [root, count] : ReadPairs(path)) {
    std::uint64_t value = 0;
    std::from_chars(count.data(), count.data() + count.size(), value);
    table[NormalizedKey(root)] += value;
  }
  return table;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFileUnreadable, path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

EvalReport EvaluateTokens(const std::vector<std::string>& tokens,
                          const GoldRootSet& gold, const RootLexicon& lexicon,
                          const ExtractOptions& options,
                          const GoldMap* gold_map) {
  if (gold.roots.empty()) throw Error(ErrorCode::kEmptyGold, "no gold roots");

  EvalReport report;
  report.gold_root_count = gold.roots.size();
  report.token_count = tokens.size();
  if (gold_map != nullptr) {
    report.mapped_tokens = 0;
    report.correct_tokens = 0;
  }

  std::set<std::u16string> produced;
  for (TokenOutcome& outcome : ExtractAll(tokens, lexicon, options)) {
    if (outcome.error) {
      report.failures.push_back(
          {outcome.token, std::string(ErrorName(*outcome.error))});
      continue;
    }
    const ExtractionResult& result = *outcome.result;
    if (result.candidates.truncated) ++report.truncation_events;

    if (gold_map != nullptr) {
      auto it = gold_map->find(std::u16string(result.word.letters()));
      if (it != gold_map->end()) {
        ++*report.mapped_tokens;
        if (result.root && result.root->letters() == it->second) {
          ++*report.correct_tokens;
        }
      }
    }

    if (!result.root) {
      report.failures.push_back({outcome.token, "notFound"});
      continue;
    }
    ++report.succeeded;
    if (result.stage != ExtractionStage::kDirect) ++report.fallback_extractions;
    ++report.per_root_counts[result.root->ToUtf8()];
    produced.emplace(result.root->letters());
  }

  for (const auto& root : gold.roots) {
    if (produced.contains(root)) {
      ++report.extracted_gold_roots;
    } else {
      report.missing_gold_roots.push_back(EncodeUtf8(root));
    }
  }
  return report;
}

EvalReport EvaluateCorpus(const std::string& corpus_path,
                          const GoldRootSet& gold, const RootLexicon& lexicon,
                          const ExtractOptions& options,
                          const GoldMap* gold_map) {
  return EvaluateTokens(Tokenize(ReadTextFile(corpus_path)), gold, lexicon,
                        options, gold_map);
}

FrequencyTable SortByFrequency(const CountTable& counts) {
  FrequencyTable table(counts.begin(), counts.end());
  std::stable_sort(table.begin(), table.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });
  return table;
}

FrequencyTable FrequencyTableFor(const std::vector<std::string>& tokens,
                                 const RootLexicon& lexicon,
                                 const ExtractOptions& options) {
  CountTable counts;
  for (const TokenOutcome& outcome : ExtractAll(tokens, lexicon, options)) {
    if (outcome.result && outcome.result->root) {
      ++counts[outcome.result->root->ToUtf8()];
    }
  }
  return SortByFrequency(counts);
}

FrequencyTable FrequencyTableForCorpus(const std::string& corpus_path,
                                       const RootLexicon& lexicon,
                                       const ExtractOptions& options) {
  return FrequencyTableFor(Tokenize(ReadTextFile(corpus_path)), lexicon,
                           options);
}

std::vector<DifferenceRow> CompareReports(const CountTable& mine,
                                          const CountTable& reference,
                                          const CountTable& actual) {
  std::vector<DifferenceRow> rows;
  for (const auto& [root, ref_count] : reference) {
    auto actual_it = actual.find(root);
    if (actual_it == actual.end() || actual_it->second == 0) {
      throw Error(ErrorCode::kMissingActualCount, "root " + root);
    }
    DifferenceRow row;
    row.root = root;
    row.reference = ref_count;
    row.actual = actual_it->second;
    if (auto it = mine.find(root); it != mine.end()) row.mine = it->second;
    const double diff = row.mine > row.reference
                            ? static_cast<double>(row.mine - row.reference)
                            : static_cast<double>(row.reference - row.mine);
    row.percent = 100.0 * diff / static_cast<double>(row.actual);
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.actual > b.actual;
  });
  return rows;
}

std::vector<std::string> RenderEvalReport(const EvalReport& report,
                                          bool records) {
  std::vector<std::string> lines;
  if (records) {
    std::string line =
        "gold_roots=" + std::to_string(report.gold_root_count) +
        " extracted_gold_roots=" + std::to_string(report.extracted_gold_roots) +
        " root_type_accuracy=" + FormatDouble(report.root_type_accuracy()) +
        " tokens=" + std::to_string(report.token_count) +
        " succeeded=" + std::to_string(report.succeeded) +
        " failures=" + std::to_string(report.failures.size()) +
        " fallback_extractions=" + std::to_string(report.fallback_extractions) +
        " truncation_events=" + std::to_string(report.truncation_events);
    if (report.mapped_tokens) {
      line += " mapped_tokens=" + std::to_string(*report.mapped_tokens) +
              " correct_tokens=" + std::to_string(*report.correct_tokens);
    }
    lines.push_back(std::move(line));
    for (const auto& root : report.missing_gold_roots) {
      lines.push_back("missing_root=" + root);
    }
    return lines;
  }

  lines.push_back("gold roots           " +
                  std::to_string(report.gold_root_count));
  lines.push_back("extracted gold roots " +
                  std::to_string(report.extracted_gold_roots));
  lines.push_back("root-type accuracy   " +
                  FormatPercent(static_cast<double>(report.extracted_gold_roots),
                                static_cast<double>(report.gold_root_count)));
  if (report.mapped_tokens) {
    lines.push_back(
        "token accuracy       " +
        FormatPercent(static_cast<double>(*report.correct_tokens),
                      static_cast<double>(*report.mapped_tokens)) +
        " (" + std::to_string(*report.correct_tokens) + "/" +
        std::to_string(*report.mapped_tokens) + " mapped tokens)");
  }
  lines.push_back("tokens               " + std::to_string(report.token_count) +
                  " (" + std::to_string(report.succeeded) + " stemmed, " +
                  std::to_string(report.failures.size()) + " failed)");
  lines.push_back("fallback extractions " +
                  std::to_string(report.fallback_extractions));
  lines.push_back("truncation events    " +
                  std::to_string(report.truncation_events));

  std::map<std::string, std::uint64_t> reasons;
  for (const auto& failure : report.failures) ++reasons[failure.reason];
  for (const auto& [reason, count] : reasons) {
    lines.push_back("  failed " + reason + ": " + std::to_string(count));
  }
  for (const auto& root : report.missing_gold_roots) {
    lines.push_back("  missing gold root " + root);
  }
  return lines;
}

std::vector<std::string> RenderDifferences(
    const std::vector<DifferenceRow>& rows, bool records) {
  std::vector<std::string> lines;
  if (!records) lines.push_back("root\tactual\treference\tmine\tabs-diff");
  for (const auto& row : rows) {
    if (records) {
      lines.push_back("root=" + row.root +
                      " actual=" + std::to_string(row.actual) +
                      " reference=" + std::to_string(row.reference) +
                      " mine=" + std::to_string(row.mine) +
                      " diff_percent=" + FormatDouble(row.percent));
    } else {
      lines.push_back(row.root + "\t" + std::to_string(row.actual) + "\t" +
                      std::to_string(row.reference) + "\t" +
                      std::to_string(row.mine) + "\t" +
                      FormatDouble(row.percent, 0) + "%");
    }
  }
  return lines;
}

std::vector<std::string> RenderFrequencyTable(const FrequencyTable& table,
                                              bool records) {
  std::vector<std::string> lines;
  for (const auto& [root, count] : table) {
    lines.push_back(records ? "root=" + root + " count=" + std::to_string(count)
                            : root + "\t" + std::to_string(count));
  }
  return lines;
}

}  // namespace rootpipe
