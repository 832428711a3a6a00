#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcagg/model.hpp"
#include "dcagg/scheduler.hpp"
#include "dcagg/tree.hpp"

namespace dcagg {

enum class Scheme { kDdas, kSptDas, kNdas };

std::string to_string(Scheme scheme);
Scheme parse_scheme(const std::string& text);
TreeMethod tree_method(Scheme scheme);
CandidatePolicy candidate_policy(Scheme scheme);

enum class SweepField { kActiveSlotCount, kPeriodLength, kNodeCount, kChannelCount };

std::string to_string(SweepField field);
SweepField parse_sweep_field(const std::string& text);

// Copy of base with the swept field set to value.
Params apply(Params base, SweepField field, int value);

struct SweepSpec {
  Params base;
  SweepField field = SweepField::kActiveSlotCount;
  std::vector<int> values;
  int trials = 100;
  std::vector<Scheme> schemes{Scheme::kDdas, Scheme::kSptDas, Scheme::kNdas};
};

// Throws std::invalid_argument when a sweep point breaks a Params invariant.
void validate(const SweepSpec& spec);

// Topology seed for one (value, trial) cell; shared by every scheme. Channel
// sweeps use the same seed for every value.
std::uint64_t trial_seed(std::uint64_t base_seed, SweepField field, int value, int trial);

struct TrialRecord {
  int value = 0;
  Scheme scheme = Scheme::kDdas;
  int trial = 0;
  std::uint64_t seed = 0;
  Slot delay = 0;
  bool operator==(const TrialRecord&) const = default;
};

struct CellStats {
  int value = 0;
  Scheme scheme = Scheme::kDdas;
  double mean = 0.0;
  double std_dev = 0.0;  // sample standard deviation, 0 for one trial
  Slot min = 0;
  Slot max = 0;
  int count = 0;
  bool operator==(const CellStats&) const = default;
};

struct ExperimentResult {
  SweepField field = SweepField::kActiveSlotCount;
  std::vector<TrialRecord> trials;  // ordered by (value, trial, scheme)
  std::vector<CellStats> cells;     // ordered by (value, scheme)

  const CellStats& cell(int value, Scheme scheme) const;
  bool operator==(const ExperimentResult&) const = default;
};

class SweepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs every (value, trial) topology through each scheme and verifies each
// schedule; a verifier violation raises SweepError. Output does not depend on
// jobs.
ExperimentResult run_sweep(const SweepSpec& spec, int jobs = 1);

// Per-value statistics in the order trials first mention (value, scheme).
std::vector<CellStats> compute_cells(const std::vector<TrialRecord>& trials);

struct Improvement {
  int value = 0;
  double baseline_mean = 0.0;
  double candidate_mean = 0.0;
  double relative = 0.0;  // (baseline - candidate) / baseline
};

std::vector<Improvement> summarize(const ExperimentResult& result, Scheme baseline = Scheme::kNdas,
                                   Scheme candidate = Scheme::kDdas);

// sweep_field,sweep_value,scheme,trial,seed,delay_slots
void write_trials_csv(std::ostream& out, const ExperimentResult& result);
// sweep_field,sweep_value,scheme,mean,std,min,max,n
void write_summary_csv(std::ostream& out, const ExperimentResult& result);
// Rebuilds the full result from the per-trial CSV.
ExperimentResult read_trials_csv(std::istream& in);
std::vector<CellStats> read_summary_csv(std::istream& in);
// Whitespace-separated "x mean_scheme1 mean_scheme2 ..." with a '#' header.
void write_plotdata(std::ostream& out, const ExperimentResult& result);

// Flat key=value sweep configuration; '#' starts a comment.
SweepSpec parse_sweep_config(std::istream& in);

// Sweeps mirroring the four published figures: fig2a (active slots), fig2b
// (period length), fig3a (node count; 800 only when extended), fig3b
// (channels).
SweepSpec preset_sweep(const std::string& name, bool extended = false);

}  // namespace dcagg
