#include "rootpipe/pipeline_sim.h"

#include <array>
#include <cmath>
#include <optional>
#include <utility>

#include "rootpipe/errors.h"
#include "rootpipe/format.h"

namespace rootpipe {

namespace {

// State of one word held in the stage registers.
struct InFlight {
  std::size_t index = 0;
  std::string token;
  std::optional<NormalizedWord> word;
  std::optional<ErrorCode> error;
  PositionBits bits;
  BoundarySets bounds;
  StemCandidates candidates;
  RootPair direct;
  std::optional<ExtractionResult> result;
};

std::string RunStage(int stage, InFlight& slot, const RootLexicon& lexicon,
                     const ExtractOptions& options, bool latin) {
  if (slot.error) return "error=" + std::string(ErrorName(*slot.error));
  switch (stage) {
    case 1:
      try {
        slot.word = NormalizeWord(slot.token, options.normalize);
        RequireStemmable(*slot.word);
      } catch (const Error& e) {
        slot.error = e.code();
        return "error=" + std::string(ErrorName(e.code()));
      }
      slot.bits = CheckPositions(*slot.word, options.alif_matches_hamza_prefix);
      return "prefixBits=" + slot.bits.PrefixString() +
             " suffixBits=" + slot.bits.SuffixString();
    case 2:
      slot.bounds = ProduceBoundaries(slot.bits);
      return RenderBoundaries(slot.bounds);
    case 3:
      slot.candidates = GenerateStems(*slot.word, slot.bounds, options.capacity);
      return RenderCandidates(slot.candidates, latin);
    case 4:
      slot.direct = CompareAndExtract(slot.candidates, lexicon);
      return RenderRootPair(slot.direct, latin);
    default: {
      std::optional<StemTrace> trace;
      if (options.trace) {
        trace = StemTrace{slot.bits, slot.bounds, slot.candidates, slot.direct,
                          {}};
      }
      slot.result = FinishExtraction(*slot.word, slot.candidates, slot.direct,
                                     lexicon, options, std::move(trace));
      const ExtractionResult& r = *slot.result;
      return "root=" +
             (r.root ? RenderWord(r.root->letters(), latin) : std::string("-")) +
             " size=" + std::string(SizeName(r.size)) +
             " via=" + std::string(StageName(r.stage));
    }
  }
}

}  // namespace

std::string_view ModeName(ProcessorMode mode) {
  return mode == ProcessorMode::kPipelined ? "pipelined" : "nonPipelined";
}

void ValidateModel(const ProcessorModel& model) {
  if (!std::isfinite(model.fmax_hz) || model.fmax_hz <= 0) {
    throw Error(ErrorCode::kInvalidFrequency,
                "fmax must be a positive frequency, got " +
                    FormatDouble(model.fmax_hz));
  }
}

std::uint64_t CyclesFor(ProcessorMode mode, std::uint64_t word_count) {
  if (word_count == 0) throw Error(ErrorCode::kZeroWords, "no input words");
  return mode == ProcessorMode::kPipelined
             ? word_count + (kStageCount - 1)
             : word_count * kStageCount;
}

SimReport Report(const ProcessorModel& model, std::uint64_t word_count) {
  ValidateModel(model);
  SimReport report;
  report.model = model;
  report.word_count = word_count;
  report.total_cycles = CyclesFor(model.mode, word_count);
  report.wall_seconds = static_cast<double>(report.total_cycles) / model.fmax_hz;
  report.throughput_wps = static_cast<double>(word_count) / report.wall_seconds;
  return report;
}

double Speedup(const SimReport& a, const SimReport& b) {
  if (a.word_count != b.word_count) {
    throw Error(ErrorCode::kMismatchedWordCount,
                std::to_string(a.word_count) + " vs " +
                    std::to_string(b.word_count) + " words");
  }
  return a.throughput_wps / b.throughput_wps;
}

double AsymptoticSpeedup(double fmax_pipelined_hz,
                         double fmax_non_pipelined_hz) {
  return kStageCount * fmax_pipelined_hz / fmax_non_pipelined_hz;
}

AreaReport AreaRatios(const SimReport& report, std::uint64_t luts,
                      std::uint64_t logic_registers) {
  if (luts == 0 || logic_registers == 0) {
    throw Error(ErrorCode::kZeroArea, "LUT and LR counts must be positive");
  }
  AreaReport area;
  area.luts = luts;
  area.logic_registers = logic_registers;
  area.throughput_per_lut = report.throughput_wps / static_cast<double>(luts);
  area.throughput_per_lr =
      report.throughput_wps / static_cast<double>(logic_registers);
  return area;
}

SimRun SimulateTrace(const ProcessorModel& model,
                     const std::vector<std::string>& words,
                     const RootLexicon& lexicon, const ExtractOptions& options,
                     bool latin) {
  ValidateModel(model);
  if (words.empty()) throw Error(ErrorCode::kZeroWords, "no input words");

  SimRun run;
  run.results.resize(words.size());
  run.completion_cycles.resize(words.size());

  // stages[k] holds the word that executes stage k+1 this cycle.
  std::array<std::optional<InFlight>, kStageCount> stages;
  std::size_t next = 0;
  std::size_t finished = 0;
  std::uint64_t cycle = 0;

  while (finished < words.size()) {
    ++cycle;
    // Clock edge: every register array hands its word to the next one.
    for (int k = kStageCount - 1; k > 0; --k) {
      stages[k] = std::move(stages[k - 1]);
      stages[k - 1].reset();
    }
    bool idle = true;
    for (const auto& s : stages) idle = idle && !s.has_value();
    const bool admit = model.mode == ProcessorMode::kPipelined || idle;
    if (admit && next < words.size()) {
      stages[0] = InFlight{};
      stages[0]->index = next;
      stages[0]->token = words[next];
      ++next;
    }

    for (int k = 0; k < kStageCount; ++k) {
      if (!stages[k]) continue;
      InFlight& slot = *stages[k];
      run.log.push_back({cycle, k + 1, slot.token,
                         RunStage(k + 1, slot, lexicon, options, latin)});
    }

    if (auto& done = stages[kStageCount - 1]) {
      TokenOutcome& out = run.results[done->index];
      out.token = done->token;
      out.error = done->error;
      out.result = std::move(done->result);
      run.completion_cycles[done->index] = cycle;
      ++finished;
      done.reset();
    }
  }
  run.total_cycles = cycle;
  return run;
}

std::string RenderEvent(const TraceEvent& event, bool records) {
  if (records) {
    return "cycle=" + std::to_string(event.cycle) +
           " stage=" + std::to_string(event.stage) + " word=" + event.word +
           " " + event.summary;
  }
  return "cyc=" + std::to_string(event.cycle) + " S" +
         std::to_string(event.stage) + " word=" + event.word +
         " out=" + event.summary;
}

std::vector<std::string> RenderReport(const SimReport& report, bool records) {
  if (records) {
    return {"mode=" + std::string(ModeName(report.model.mode)) +
            " fmax_hz=" + FormatDouble(report.model.fmax_hz) +
            " words=" + std::to_string(report.word_count) +
            " cycles=" + std::to_string(report.total_cycles) +
            " latency_cycles=" + std::to_string(report.per_word_latency_cycles) +
            " wall_s=" + FormatDouble(report.wall_seconds) +
            " throughput_wps=" + FormatDouble(report.throughput_wps)};
  }
  return {
      std::string(ModeName(report.model.mode)) + " @ " +
          FormatDouble(report.model.fmax_hz / 1e6, 2) + " MHz",
      "  words        " + std::to_string(report.word_count),
      "  cycles       " + std::to_string(report.total_cycles),
      "  latency      " + std::to_string(report.per_word_latency_cycles) +
          " cycles",
      "  wall time    " + FormatDouble(report.wall_seconds * 1e3, 6) + " ms",
      "  throughput   " + FormatDouble(report.throughput_wps / 1e6, 3) +
          " MWps",
  };
}

std::vector<std::string> RenderArea(const AreaReport& area, bool records) {
  if (records) {
    return {"luts=" + std::to_string(area.luts) +
            " lrs=" + std::to_string(area.logic_registers) +
            " wps_per_lut=" + FormatDouble(area.throughput_per_lut) +
            " wps_per_lr=" + FormatDouble(area.throughput_per_lr)};
  }
  return {
      "  LUTs         " + std::to_string(area.luts) + "  -> " +
          FormatDouble(area.throughput_per_lut, 2) + " Wps/LUT",
      "  LRs          " + std::to_string(area.logic_registers) + "  -> " +
          FormatDouble(area.throughput_per_lr, 2) + " Wps/LR",
  };
}

}  // namespace rootpipe
