#ifndef ROOTPIPE_PIPELINE_SIM_H_
#define ROOTPIPE_PIPELINE_SIM_H_

// Cycle-level model of the five-stage root extraction processor, in its
// multi-cycle (one word in flight) and pipelined (one word per stage)
// variants.
//
// Timing is closed-form: a non-pipelined run takes 5 cycles per word; a
// pipelined run takes 5 cycles for the first word and one more per
// additional word (N + 4). Wall time is cycles / fmax. SimulateTrace steps
// the stage registers explicitly and runs the real stemming stage in the
// cycle each word occupies it, so it yields both a trace and the results.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rootpipe/root_lexicon.h"
#include "rootpipe/stemmer.h"

namespace rootpipe {

inline constexpr int kStageCount = 5;
inline constexpr double kDefaultFmaxNonPipelinedHz = 10.4e6;
inline constexpr double kDefaultFmaxPipelinedHz = 10.78e6;

enum class ProcessorMode { kNonPipelined, kPipelined };

std::string_view ModeName(ProcessorMode mode);

struct ProcessorModel {
  ProcessorMode mode = ProcessorMode::kPipelined;
  double fmax_hz = kDefaultFmaxPipelinedHz;
};

// Throws kInvalidFrequency unless fmax is finite and positive.
void ValidateModel(const ProcessorModel& model);

// Throws kZeroWords for an empty workload.
std::uint64_t CyclesFor(ProcessorMode mode, std::uint64_t word_count);

struct SimReport {
  ProcessorModel model;
  std::uint64_t word_count = 0;
  std::uint64_t total_cycles = 0;
  double wall_seconds = 0;
  double throughput_wps = 0;
  int per_word_latency_cycles = kStageCount;
};

SimReport Report(const ProcessorModel& model, std::uint64_t word_count);

// throughput(a) / throughput(b). Throws kMismatchedWordCount.
double Speedup(const SimReport& a, const SimReport& b);

// Limit of the pipelined-over-non-pipelined speedup as N grows.
double AsymptoticSpeedup(double fmax_pipelined_hz, double fmax_non_pipelined_hz);

struct AreaReport {
  std::uint64_t luts = 0;
  std::uint64_t logic_registers = 0;
  double throughput_per_lut = 0;
  double throughput_per_lr = 0;
};

// Throws kZeroArea when either count is zero.
AreaReport AreaRatios(const SimReport& report, std::uint64_t luts,
                      std::uint64_t logic_registers);

struct TraceEvent {
  std::uint64_t cycle = 0;
  int stage = 0;  // 1..5
  std::string word;
  // Space-separated key=value pairs describing the stage output.
  std::string summary;
};

struct SimRun {
  std::vector<TraceEvent> log;
  std::vector<TokenOutcome> results;
  // Cycle in which each word finished stage 5, in input order.
  std::vector<std::uint64_t> completion_cycles;
  std::uint64_t total_cycles = 0;
};

// Steps the stage registers one cycle at a time. Normalization failures are
// carried through the remaining stages and logged; they never stall or halt
// the run. Throws kZeroWords for an empty list.
SimRun SimulateTrace(const ProcessorModel& model,
                     const std::vector<std::string>& words,
                     const RootLexicon& lexicon,
                     const ExtractOptions& options = {}, bool latin = false);

// `cyc=<n> S<k> word=<token> out=<summary>`, or in records form
// `cycle=<n> stage=<k> word=<token> <summary>`.
std::string RenderEvent(const TraceEvent& event, bool records);

std::vector<std::string> RenderReport(const SimReport& report, bool records);
std::vector<std::string> RenderArea(const AreaReport& area, bool records);

}  // namespace rootpipe

#endif  // ROOTPIPE_PIPELINE_SIM_H_
