#include "cli.h"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rootpipe/arabic_text.h"
#include "rootpipe/corpus_eval.h"
#include "rootpipe/errors.h"
#include "rootpipe/format.h"
#include "rootpipe/pipeline_sim.h"
#include "rootpipe/root_lexicon.h"
#include "rootpipe/stemmer.h"

namespace rootpipe::cli {

namespace {

struct Config {
  std::string lexicon_path;
  bool no_infix = false;
  std::size_t capacity = kDefaultCapacity;
  bool latin = false;
  bool trace = false;
  std::string output = "text";

  bool records() const { return output == "records"; }

  ExtractOptions extract_options() const {
    ExtractOptions options;
    options.infix_processing = !no_infix;
    options.capacity = capacity;
    options.trace = trace;
    return options;
  }
};

// Raised for anything that maps to exit code 2.
struct UsageError {
  std::string message;
};

void Print(std::ostream& out, const std::vector<std::string>& lines) {
  for (const auto& line : lines) out << line << '\n';
}

RootLexicon LoadLexicon(const Config& config) {
  std::string path = config.lexicon_path;
  if (path.empty()) {
    if (const char* env = std::getenv("ROOTPIPE_LEXICON")) path = env;
  }
  if (path.empty()) {
    throw UsageError{"no lexicon given (use --lexicon or ROOTPIPE_LEXICON)"};
  }
  try {
    return RootLexicon::Load(path);
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
}

std::string RenderResult(const ExtractionResult& result, const Config& config) {
  const std::string root =
      result.root ? RenderWord(result.root->letters(), config.latin) : "-";
  return "root=" + root + " size=" + std::string(SizeName(result.size)) +
         " stage=" + std::string(StageName(result.stage));
}

int RunStem(const Config& config, const std::string& word, std::ostream& out,
            std::ostream& err) {
  const RootLexicon lexicon = LoadLexicon(config);
  try {
    const ExtractionResult result =
        ExtractRoot(word, lexicon, config.extract_options());
    out << RenderResult(result, config) << '\n';
    if (result.trace) Print(out, RenderTrace(*result.trace, config.latin));
    return result.root ? kExitOk : kExitNoRoot;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kEmptyAfterNormalization) {
      throw UsageError{e.what()};
    }
    out << "root=- size=none stage=ERROR:" << ErrorName(e.code()) << '\n';
    err << "error: " << e.what() << '\n';
    return kExitNoRoot;
  }
}

int RunBatch(const Config& config, const std::string& path,
             std::ostream& out) {
  const RootLexicon lexicon = LoadLexicon(config);
  std::string text;
  try {
    text = ReadTextFile(path);
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
  const std::vector<std::string> tokens = Tokenize(text);
  std::size_t found = 0;
  std::size_t not_found = 0;
  std::size_t errors = 0;
  for (const TokenOutcome& outcome :
       ExtractAll(tokens, lexicon, config.extract_options())) {
    std::string root;
    std::string stage;
    if (outcome.error) {
      ++errors;
      root = "ERROR:" + std::string(ErrorName(*outcome.error));
      stage = "error";
    } else if (outcome.result->root) {
      ++found;
      root = RenderWord(outcome.result->root->letters(), config.latin);
      stage = StageName(outcome.result->stage);
    } else {
      ++not_found;
      root = "NOTFOUND";
      stage = StageName(outcome.result->stage);
    }
    if (config.records()) {
      out << "token=" << outcome.token << " root=" << root
          << " stage=" << stage << '\n';
    } else {
      out << outcome.token << '\t' << root << '\t' << stage << '\n';
    }
  }
  out << "# tokens=" << tokens.size() << " found=" << found
      << " notfound=" << not_found << " errors=" << errors << '\n';
  return kExitOk;
}

struct EvalArgs {
  std::string corpus;
  std::string gold;
  std::string gold_map;
  std::string compare;
  std::string actual;
  bool frequencies = false;
};

int RunEval(const Config& config, const EvalArgs& args, std::ostream& out) {
  const RootLexicon lexicon = LoadLexicon(config);
  if (args.gold.empty()) throw UsageError{"eval needs --gold PATH"};
  if (args.compare.empty() != args.actual.empty()) {
    throw UsageError{"--compare and --actual must be given together"};
  }
  try {
    const GoldRootSet gold = GoldRootSet::Load(args.gold);
    std::optional<GoldMap> gold_map;
    if (!args.gold_map.empty()) gold_map = LoadGoldMap(args.gold_map);
    const EvalReport report =
        EvaluateCorpus(args.corpus, gold, lexicon, config.extract_options(),
                       gold_map ? &*gold_map : nullptr);
    Print(out, RenderEvalReport(report, config.records()));
    if (args.frequencies) {
      if (!config.records()) out << "-- root frequencies\n";
      Print(out, RenderFrequencyTable(SortByFrequency(report.per_root_counts),
                                      config.records()));
    }
    if (!args.compare.empty()) {
      const auto rows =
          CompareReports(report.per_root_counts, LoadCountTable(args.compare),
                         LoadCountTable(args.actual));
      if (!config.records()) out << "-- comparison against reference\n";
      Print(out, RenderDifferences(rows, config.records()));
    }
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
  return kExitOk;
}

struct SimulateArgs {
  std::optional<std::uint64_t> words;
  std::string corpus;
  std::string mode = "both";
  double fmax_np = kDefaultFmaxNonPipelinedHz;
  double fmax_p = kDefaultFmaxPipelinedHz;
  std::vector<std::uint64_t> luts;
  std::vector<std::uint64_t> lrs;
};

int RunSimulate(const Config& config, const SimulateArgs& args,
                std::ostream& out) {
  if (args.words.has_value() == !args.corpus.empty()) {
    throw UsageError{"simulate needs exactly one of -n N or --corpus PATH"};
  }
  std::vector<ProcessorModel> models;
  if (args.mode == "np" || args.mode == "both") {
    models.push_back({ProcessorMode::kNonPipelined, args.fmax_np});
  }
  if (args.mode == "p" || args.mode == "both") {
    models.push_back({ProcessorMode::kPipelined, args.fmax_p});
  }
  if (args.luts.size() != args.lrs.size()) {
    throw UsageError{"--luts and --lrs need the same number of values"};
  }
  if (!args.luts.empty() && args.luts.size() != 1 &&
      args.luts.size() != models.size()) {
    throw UsageError{"give one area value, or one per simulated mode"};
  }

  std::vector<std::string> tokens;
  std::uint64_t word_count = 0;
  try {
    for (const auto& model : models) ValidateModel(model);
    if (args.words) {
      word_count = *args.words;
    } else {
      tokens = Tokenize(ReadTextFile(args.corpus));
      word_count = tokens.size();
    }
    if (word_count == 0) throw Error(ErrorCode::kZeroWords, "no input words");
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }

  std::vector<SimReport> reports;
  for (std::size_t i = 0; i < models.size(); ++i) {
    reports.push_back(Report(models[i], word_count));
    Print(out, RenderReport(reports.back(), config.records()));
    if (!args.luts.empty()) {
      const std::size_t k = args.luts.size() == 1 ? 0 : i;
      try {
        Print(out, RenderArea(AreaRatios(reports.back(), args.luts[k],
                                         args.lrs[k]),
                              config.records()));
      } catch (const Error& e) {
        throw UsageError{e.what()};
      }
    }
  }
  if (reports.size() == 2) {
    const double speedup = Speedup(reports[1], reports[0]);
    if (config.records()) {
      out << "speedup=" << FormatDouble(speedup) << '\n';
    } else {
      out << "speedup (pipelined / nonPipelined) " << FormatDouble(speedup, 2)
          << '\n';
    }
  }

  if (config.trace) {
    if (tokens.empty()) throw UsageError{"--trace needs --corpus"};
    const RootLexicon lexicon = LoadLexicon(config);
    for (const auto& model : models) {
      out << "# trace mode=" << ModeName(model.mode) << '\n';
      ExtractOptions options = config.extract_options();
      options.trace = false;
      const SimRun run =
          SimulateTrace(model, tokens, lexicon, options, config.latin);
      for (const auto& event : run.log) {
        out << RenderEvent(event, config.records()) << '\n';
      }
    }
  }
  return kExitOk;
}

int RunLexiconStats(const Config& config, std::ostream& out) {
  const LexiconStats stats = LoadLexicon(config).Stats();
  if (config.records()) {
    out << "bilateral=" << stats.bilateral << " trilateral=" << stats.trilateral
        << " quadrilateral=" << stats.quadrilateral << " total=" << stats.total
        << '\n';
  } else {
    out << "2-letter roots  " << stats.bilateral << '\n'
        << "3-letter roots  " << stats.trilateral << '\n'
        << "4-letter roots  " << stats.quadrilateral << '\n'
        << "total           " << stats.total << '\n';
  }
  return kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Arabic verb root extraction and processor simulation",
               "rootpipe"};
  app.require_subcommand(1);
  app.fallthrough();

  Config config;
  app.add_option("--lexicon", config.lexicon_path,
                 "Root list, one root per line (default $ROOTPIPE_LEXICON)");
  app.add_flag("--no-infix", config.no_infix, "Disable infix repairs");
  app.add_option("--capacity", config.capacity,
                 "Slots per stem candidate list")
      ->check(CLI::PositiveNumber);
  app.add_flag("--latin", config.latin, "Render letters by name");
  app.add_flag("--trace", config.trace, "Print per-stage output");
  app.add_option("--output", config.output, "Output format")
      ->check(CLI::IsMember({"text", "records"}));

  std::string word;
  auto* stem = app.add_subcommand("stem", "Extract the root of one word");
  stem->add_option("word", word, "Arabic word")->required();

  std::string batch_path;
  auto* batch = app.add_subcommand("batch", "Stem every token of a file");
  batch->add_option("file", batch_path, "UTF-8 text file")->required();

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Root-type accuracy over a corpus");
  eval->add_option("corpus", eval_args.corpus, "UTF-8 corpus")->required();
  eval->add_option("--gold", eval_args.gold, "Gold root list");
  eval->add_option("--gold-map", eval_args.gold_map,
                   "word<TAB>root map for token accuracy");
  eval->add_option("--compare", eval_args.compare,
                   "Reference counts, root<TAB>count");
  eval->add_option("--actual", eval_args.actual,
                   "Actual counts, root<TAB>count");
  eval->add_flag("--frequencies", eval_args.frequencies,
                 "Print the per-root frequency table");

  SimulateArgs sim_args;
  auto* simulate =
      app.add_subcommand("simulate", "Cycle, throughput and speedup report");
  simulate->add_option("-n,--words", sim_args.words, "Number of input words");
  simulate->add_option("--corpus", sim_args.corpus,
                       "Take the word count (and trace input) from a corpus");
  simulate->add_option("--mode", sim_args.mode, "np, p or both")
      ->check(CLI::IsMember({"np", "p", "both"}));
  simulate->add_option("--fmax-np", sim_args.fmax_np,
                       "Non-pipelined clock in Hz");
  simulate->add_option("--fmax-p", sim_args.fmax_p, "Pipelined clock in Hz");
  simulate->add_option("--luts", sim_args.luts,
                       "LUT count (one value, or one per mode)")
      ->expected(1, 2);
  simulate->add_option("--lrs", sim_args.lrs,
                       "Logic register count (one value, or one per mode)")
      ->expected(1, 2);

  auto* stats = app.add_subcommand("lexicon-stats", "Roots per length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*stem) return RunStem(config, word, out, err);
    if (*batch) return RunBatch(config, batch_path, out);
    if (*eval) return RunEval(config, eval_args, out);
    if (*simulate) return RunSimulate(config, sim_args, out);
    if (*stats) return RunLexiconStats(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rootpipe::cli
