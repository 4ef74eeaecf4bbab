#include "rootpipe/corpus_eval.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rootpipe/errors.h"
#include "rootpipe/format.h"
#include "synthetic.h"
#include "test_util.h"

namespace rootpipe {
namespace {

using testing::DataPath;
using testing::PlainRoots;
using testing::TestDataPath;
using testing::ThrownCode;
using testing::WriteTempFile;

const RootLexicon& Fixture() {
  static const RootLexicon lexicon =
      RootLexicon::Load(DataPath("fixture_lexicon.txt"));
  return lexicon;
}

EvalReport SyntheticReport(std::size_t gold, std::size_t present) {
  const std::vector<std::string> roots = PlainRoots(gold);
  const std::vector<std::string> tokens(roots.begin(),
                                        roots.begin() + static_cast<long>(present));
  return EvaluateTokens(tokens, GoldRootSet::FromRoots(roots),
                        RootLexicon::FromRoots(roots));
}

std::string AccuracyLine(const EvalReport& report) {
  for (const auto& line : RenderEvalReport(report, false)) {
    if (line.starts_with("root-type accuracy")) return line;
  }
  return {};
}

TEST(EvaluateTokens, SyntheticGoldCounts) {
  const EvalReport with = SyntheticReport(1767, 1549);
  EXPECT_EQ(with.gold_root_count, 1767u);
  EXPECT_EQ(with.extracted_gold_roots, 1549u);
  EXPECT_EQ(with.root_type_accuracy(), 1549.0 / 1767.0);
  EXPECT_EQ(AccuracyLine(with), "root-type accuracy   87.7%");

  const EvalReport without = SyntheticReport(1767, 1261);
  EXPECT_EQ(without.extracted_gold_roots, 1261u);
  EXPECT_EQ(without.missing_gold_roots.size(), 1767u - 1261u);
}

TEST(EvaluateTokens, NothingExtractedIsZero) {
  const std::vector<std::string> gold = {"درس"};
  const EvalReport report =
      EvaluateTokens({"بببب"}, GoldRootSet::FromRoots(gold), Fixture());
  EXPECT_EQ(report.root_type_accuracy(), 0.0);
  EXPECT_EQ(AccuracyLine(report), "root-type accuracy   0.0%");
}

TEST(EvaluateTokens, EmptyGold) {
  EXPECT_EQ(ThrownCode([] {
              EvaluateTokens({"درس"}, GoldRootSet{}, Fixture());
            }),
            ErrorCode::kEmptyGold);
}

TEST(EvaluateCorpus, MissingFile) {
  const std::vector<std::string> gold = {"درس"};
  EXPECT_EQ(ThrownCode([&] {
              EvaluateCorpus("/nonexistent/corpus.txt",
                             GoldRootSet::FromRoots(gold), Fixture());
            }),
            ErrorCode::kFileUnreadable);
  EXPECT_EQ(ThrownCode([] { GoldRootSet::Load("/nonexistent/gold.txt"); }),
            ErrorCode::kFileUnreadable);
}

TEST(FormatPercent, RoundsToNearestAtOneDecimal) {
  EXPECT_EQ(FormatPercent(1549, 1767), "87.7%");
  EXPECT_EQ(FormatPercent(1261, 1767), "71.4%");
  EXPECT_EQ(FormatPercent(1, 3), "33.3%");
  EXPECT_EQ(FormatPercent(2, 3), "66.7%");
  EXPECT_EQ(FormatPercent(55, 55), "100.0%");
  EXPECT_EQ(FormatPercent(1022, 1722, 0), "59%");
}

TEST(EvaluateCorpus, DeskCorpusRecoversEveryGoldRoot) {
  const GoldRootSet gold = GoldRootSet::Load(DataPath("desk_gold.txt"));
  const EvalReport with =
      EvaluateCorpus(DataPath("desk_corpus.txt"), gold, Fixture());
  EXPECT_EQ(with.extracted_gold_roots, with.gold_root_count);
  EXPECT_TRUE(with.missing_gold_roots.empty());

  ExtractOptions off;
  off.infix_processing = false;
  const EvalReport without =
      EvaluateCorpus(DataPath("desk_corpus.txt"), gold, Fixture(), off);
  EXPECT_LE(without.extracted_gold_roots, with.extracted_gold_roots);
  EXPECT_LT(without.extracted_gold_roots, with.extracted_gold_roots);
  EXPECT_EQ(without.fallback_extractions, 0u);
}

TEST(EvaluateCorpus, TokenConservation) {
  const GoldRootSet gold = GoldRootSet::Load(DataPath("desk_gold.txt"));
  const EvalReport report =
      EvaluateCorpus(DataPath("desk_corpus.txt"), gold, Fixture());
  const auto tokens = Tokenize(ReadTextFile(DataPath("desk_corpus.txt")));
  EXPECT_EQ(report.token_count, tokens.size());
  EXPECT_EQ(report.token_count, report.succeeded + report.failures.size());
  std::uint64_t counted = 0;
  for (const auto& [root, n] : report.per_root_counts) counted += n;
  EXPECT_EQ(counted, report.succeeded);
}

TEST(EvaluateCorpus, Deterministic) {
  const GoldRootSet gold = GoldRootSet::Load(DataPath("desk_gold.txt"));
  const GoldMap map = LoadGoldMap(DataPath("desk_gold_map.tsv"));
  const auto run = [&] {
    return RenderEvalReport(
        EvaluateCorpus(DataPath("desk_corpus.txt"), gold, Fixture(), {}, &map),
        true);
  };
  EXPECT_EQ(run(), run());
}

TEST(EvaluateCorpus, TokenAccuracyWithGoldMap) {
  const GoldRootSet gold = GoldRootSet::Load(DataPath("desk_gold.txt"));
  const GoldMap map = LoadGoldMap(DataPath("desk_gold_map.tsv"));
  const EvalReport report =
      EvaluateCorpus(DataPath("desk_corpus.txt"), gold, Fixture(), {}, &map);
  ASSERT_TRUE(report.mapped_tokens);
  EXPECT_GT(*report.mapped_tokens, 0u);
  EXPECT_LE(*report.correct_tokens, *report.mapped_tokens);

  const EvalReport plain =
      EvaluateCorpus(DataPath("desk_corpus.txt"), gold, Fixture());
  EXPECT_FALSE(plain.mapped_tokens);
}

TEST(EvaluateTokens, InfixNeverLowersRootCount) {
  std::mt19937 rng(41);
  const std::u16string alphabet = u"اويقحجكتبدسلمنعر";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(3, 8);
  const GoldRootSet gold = GoldRootSet::Load(DataPath("fixture_lexicon.txt"));
  ExtractOptions off;
  off.infix_processing = false;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> tokens;
    for (int i = 0; i < 40; ++i) {
      std::u16string w;
      for (int j = len(rng); j > 0; --j) w.push_back(alphabet[pick(rng)]);
      tokens.push_back(EncodeUtf8(w));
    }
    EXPECT_GE(EvaluateTokens(tokens, gold, Fixture()).extracted_gold_roots,
              EvaluateTokens(tokens, gold, Fixture(), off).extracted_gold_roots);
  }
}

TEST(FrequencyTable, CountsRepeatedTokens) {
  std::vector<std::string> tokens(5, "سيلعبون");
  tokens.insert(tokens.end(), 2, "قال");
  tokens.push_back("بببب");
  CountTable oracle;
  for (const auto& t : tokens) {
    const ExtractionResult r = ExtractRoot(t, Fixture());
    if (r.root) ++oracle[r.root->ToUtf8()];
  }
  const FrequencyTable table = FrequencyTableFor(tokens, Fixture());
  EXPECT_EQ(table, (FrequencyTable{{"لعب", 5}, {"قول", 2}}));
  EXPECT_EQ(CountTable(table.begin(), table.end()), oracle);
}

TEST(FrequencyTable, EmptyCorpus) {
  EXPECT_TRUE(FrequencyTableForCorpus(WriteTempFile("empty_corpus.txt", ""),
                                      Fixture())
                  .empty());
  EXPECT_EQ(ThrownCode([] {
              FrequencyTableForCorpus("/nonexistent/c.txt", Fixture());
            }),
            ErrorCode::kFileUnreadable);
}

TEST(FrequencyTable, SortedDescendingWithStableTies) {
  const CountTable counts = {{"ب", 2}, {"ا", 2}, {"ت", 9}, {"ث", 1}};
  EXPECT_EQ(SortByFrequency(counts),
            (FrequencyTable{{"ت", 9}, {"ا", 2}, {"ب", 2}, {"ث", 1}}));
}

TEST(CompareReports, Examples) {
  const auto qawl = CompareReports({{"قول", 1022}}, {{"قول", 1195}},
                                   {{"قول", 1722}});
  ASSERT_EQ(qawl.size(), 1u);
  EXPECT_NEAR(qawl[0].percent, 100.0 * 173 / 1722, 1e-9);
  EXPECT_EQ(std::lround(qawl[0].percent), 10);

  const auto kawn = CompareReports({{"كون", 765}}, {{"كون", 32}},
                                   {{"كون", 1390}});
  EXPECT_EQ(std::lround(kawn[0].percent), 53);

  const CountTable same = {{"علم", 5}, {"كفر", 7}};
  for (const auto& row : CompareReports(same, same, same)) {
    EXPECT_EQ(row.percent, 0.0);
  }
}

TEST(CompareReports, MissingActualCount) {
  EXPECT_EQ(ThrownCode([] {
              CompareReports({{"قول", 1}}, {{"قول", 1}}, {{"كون", 3}});
            }),
            ErrorCode::kMissingActualCount);
  EXPECT_EQ(ThrownCode([] {
              CompareReports({{"قول", 1}}, {{"قول", 1}}, {{"قول", 0}});
            }),
            ErrorCode::kMissingActualCount);
}

TEST(CompareReports, MissingRootInMineCountsAsZero) {
  const auto rows = CompareReports({}, {{"قول", 10}}, {{"قول", 20}});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].mine, 0u);
  EXPECT_EQ(rows[0].percent, 50.0);
}

TEST(CompareReports, LoadedTableFiles) {
  const CountTable mine = LoadCountTable(TestDataPath("table7_mine.tsv"));
  const CountTable reference =
      LoadCountTable(TestDataPath("table7_reference.tsv"));
  const CountTable actual = LoadCountTable(TestDataPath("table7_actual.tsv"));
  const std::map<std::string, long> printed = {
      {"علم", 24}, {"كفر", 28}, {"قول", 10}, {"نفس", 11}, {"نزل", 15},
      {"عمل", 23}, {"خلق", 13}, {"جعل", 29}, {"كذب", 17}, {"كون", 53}};
  const auto rows = CompareReports(mine, reference, actual);
  ASSERT_EQ(rows.size(), printed.size());
  EXPECT_EQ(rows.front().root, "قول");
  for (const auto& row : rows) {
    EXPECT_EQ(std::lround(row.percent), printed.at(row.root)) << row.root;
  }
  const auto text = RenderDifferences(rows, false);
  EXPECT_EQ(text[1], "قول\t1722\t1195\t1022\t10%");
}

}  // namespace
}  // namespace rootpipe
