#include "dcagg/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "dcagg/netgen.hpp"
#include "dcagg/verify.hpp"
#include "text_util.hpp"

namespace dcagg {

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kDdas: return "DDAS";
    case Scheme::kSptDas: return "SPT-DAS";
    case Scheme::kNdas: return "NDAS";
  }
  return "DDAS";
}

Scheme parse_scheme(const std::string& text) {
  if (text == "DDAS") return Scheme::kDdas;
  if (text == "SPT-DAS") return Scheme::kSptDas;
  if (text == "NDAS") return Scheme::kNdas;
  throw std::invalid_argument("unknown scheme: " + text);
}

// The NDAS-style baseline shares the DDAS tree and differs only in which
// leaves each round may take.
TreeMethod tree_method(Scheme scheme) {
  return scheme == Scheme::kSptDas ? TreeMethod::kSpt : TreeMethod::kDdas;
}

CandidatePolicy candidate_policy(Scheme scheme) {
  return scheme == Scheme::kNdas ? CandidatePolicy::kDeepestLayerOnly
                                 : CandidatePolicy::kAllLeaves;
}

std::string to_string(SweepField field) {
  switch (field) {
    case SweepField::kActiveSlotCount: return "active_slot_count";
    case SweepField::kPeriodLength: return "period_length";
    case SweepField::kNodeCount: return "node_count";
    case SweepField::kChannelCount: return "channel_count";
  }
  return "active_slot_count";
}

SweepField parse_sweep_field(const std::string& text) {
  if (text == "active_slot_count") return SweepField::kActiveSlotCount;
  if (text == "period_length") return SweepField::kPeriodLength;
  if (text == "node_count") return SweepField::kNodeCount;
  if (text == "channel_count") return SweepField::kChannelCount;
  throw std::invalid_argument("unknown sweep field: " + text);
}

Params apply(Params base, SweepField field, int value) {
  switch (field) {
    case SweepField::kActiveSlotCount: base.active_slot_count = value; break;
    case SweepField::kPeriodLength: base.period_length = value; break;
    case SweepField::kNodeCount: base.node_count = value; break;
    case SweepField::kChannelCount: base.channel_count = value; break;
  }
  return base;
}

void validate(const SweepSpec& spec) {
  if (spec.values.empty()) throw std::invalid_argument("sweep needs at least one value");
  if (spec.trials < 1) throw std::invalid_argument("sweep needs trials >= 1");
  if (spec.schemes.empty()) throw std::invalid_argument("sweep needs at least one scheme");
  for (int value : spec.values) {
    const Params p = apply(spec.base, spec.field, value);
    validate(p);
    if (p.node_count < 2) throw std::invalid_argument("sweep point needs node_count >= 2");
  }
}

std::uint64_t trial_seed(std::uint64_t base_seed, SweepField field, int value, int trial) {
  // The generator never reads the channel count, so a channel sweep reuses
  // one topology list for every value.
  const std::uint64_t salt =
      field == SweepField::kChannelCount ? 0 : mix_seed(static_cast<std::uint64_t>(value));
  const std::uint64_t cell = mix_seed(base_seed + salt);
  return mix_seed(cell + static_cast<std::uint64_t>(trial));
}

const CellStats& ExperimentResult::cell(int value, Scheme scheme) const {
  for (const auto& c : cells)
    if (c.value == value && c.scheme == scheme) return c;
  throw std::invalid_argument("no result cell for value " + std::to_string(value) + " scheme " +
                              to_string(scheme));
}

namespace {

std::vector<TrialRecord> run_cell(const SweepSpec& spec, int value, int trial) {
  Params params = apply(spec.base, spec.field, value);
  params.rng_seed = trial_seed(spec.base.rng_seed, spec.field, value, trial);
  const Network net = generate_network(params);
  const Layering lay = compute_layers(net);
  std::optional<AggregationTree> trees[2];

  std::vector<TrialRecord> out;
  for (Scheme scheme : spec.schemes) {
    const TreeMethod method = tree_method(scheme);
    auto& tree = trees[method == TreeMethod::kDdas ? 0 : 1];
    if (!tree) tree = build_tree(net, lay, method);
    const Schedule sched = schedule(net, *tree, candidate_policy(scheme));
    const auto violations = verify_schedule(net, *tree, sched);
    if (!violations.empty())
      throw SweepError("scheduler produced an invalid schedule (" + to_string(scheme) + ", " +
                       to_string(spec.field) + "=" + std::to_string(value) + ", trial " +
                       std::to_string(trial) + ", seed " + std::to_string(params.rng_seed) +
                       "): " + describe(violations.front()));
    out.push_back({value, scheme, trial, params.rng_seed, sched.delay});
  }
  return out;
}

}  // namespace

std::vector<CellStats> compute_cells(const std::vector<TrialRecord>& trials) {
  std::vector<std::pair<int, Scheme>> order;
  std::map<std::pair<int, Scheme>, std::vector<Slot>> samples;
  for (const auto& r : trials) {
    const auto key = std::make_pair(r.value, r.scheme);
    auto& list = samples[key];
    if (list.empty()) order.push_back(key);
    list.push_back(r.delay);
  }
  std::vector<CellStats> cells;
  for (const auto& key : order) {
    const auto& xs = samples[key];
    CellStats c;
    c.value = key.first;
    c.scheme = key.second;
    c.count = static_cast<int>(xs.size());
    c.min = *std::min_element(xs.begin(), xs.end());
    c.max = *std::max_element(xs.begin(), xs.end());
    double sum = 0.0;
    for (Slot x : xs) sum += static_cast<double>(x);
    c.mean = sum / c.count;
    if (c.count > 1) {
      double ss = 0.0;
      for (Slot x : xs) ss += (static_cast<double>(x) - c.mean) * (static_cast<double>(x) - c.mean);
      c.std_dev = std::sqrt(ss / (c.count - 1));
    }
    cells.push_back(c);
  }
  return cells;
}

ExperimentResult run_sweep(const SweepSpec& spec, int jobs) {
  validate(spec);
  const std::size_t per_value = static_cast<std::size_t>(spec.trials);
  const std::size_t tasks = spec.values.size() * per_value;
  std::vector<std::vector<TrialRecord>> slots(tasks);
  std::vector<std::exception_ptr> errors(tasks);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < tasks; i = next++) {
      try {
        slots[i] = run_cell(spec, spec.values[i / per_value], static_cast<int>(i % per_value));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  ExperimentResult result;
  result.field = spec.field;
  for (auto& chunk : slots)
    result.trials.insert(result.trials.end(), chunk.begin(), chunk.end());
  result.cells = compute_cells(result.trials);
  return result;
}

std::vector<Improvement> summarize(const ExperimentResult& result, Scheme baseline,
                                   Scheme candidate) {
  std::vector<int> values;
  for (const auto& c : result.cells)
    if (std::find(values.begin(), values.end(), c.value) == values.end()) values.push_back(c.value);
  std::vector<Improvement> out;
  for (int v : values) {
    const CellStats& b = result.cell(v, baseline);
    const CellStats& c = result.cell(v, candidate);
    out.push_back({v, b.mean, c.mean, b.mean == 0.0 ? 0.0 : (b.mean - c.mean) / b.mean});
  }
  return out;
}

void write_trials_csv(std::ostream& out, const ExperimentResult& result) {
  out << "sweep_field,sweep_value,scheme,trial,seed,delay_slots\n";
  const std::string field = to_string(result.field);
  for (const auto& r : result.trials)
    out << field << ',' << r.value << ',' << to_string(r.scheme) << ',' << r.trial << ','
        << r.seed << ',' << r.delay << '\n';
}

void write_summary_csv(std::ostream& out, const ExperimentResult& result) {
  using detail::format_double;
  out << "sweep_field,sweep_value,scheme,mean,std,min,max,n\n";
  const std::string field = to_string(result.field);
  for (const auto& c : result.cells)
    out << field << ',' << c.value << ',' << to_string(c.scheme) << ',' << format_double(c.mean)
        << ',' << format_double(c.std_dev) << ',' << c.min << ',' << c.max << ',' << c.count
        << '\n';
}

namespace {

std::vector<std::vector<std::string_view>> csv_rows(std::istream& in, std::string& storage,
                                                    std::string_view header, std::size_t width) {
  std::ostringstream buf;
  buf << in.rdbuf();
  storage = buf.str();
  std::vector<std::vector<std::string_view>> rows;
  bool first = true;
  for (auto line : detail::split(storage, '\n')) {
    line = detail::trim(line);
    if (line.empty()) continue;
    if (first) {
      if (line != header) throw std::invalid_argument("csv: unexpected header '" + std::string(line) + "'");
      first = false;
      continue;
    }
    auto fields = detail::split(line, ',');
    if (fields.size() != width) throw std::invalid_argument("csv: bad row '" + std::string(line) + "'");
    rows.push_back(std::move(fields));
  }
  if (first) throw std::invalid_argument("csv: missing header");
  return rows;
}

}  // namespace

ExperimentResult read_trials_csv(std::istream& in) {
  using detail::parse_number;
  std::string storage;
  ExperimentResult result;
  bool have_field = false;
  for (const auto& f :
       csv_rows(in, storage, "sweep_field,sweep_value,scheme,trial,seed,delay_slots", 6)) {
    const SweepField field = parse_sweep_field(std::string(f[0]));
    if (have_field && field != result.field) throw std::invalid_argument("csv: mixed sweep fields");
    result.field = field;
    have_field = true;
    result.trials.push_back({parse_number<int>(f[1], "sweep_value"),
                             parse_scheme(std::string(f[2])), parse_number<int>(f[3], "trial"),
                             parse_number<std::uint64_t>(f[4], "seed"),
                             parse_number<Slot>(f[5], "delay_slots")});
  }
  result.cells = compute_cells(result.trials);
  return result;
}

std::vector<CellStats> read_summary_csv(std::istream& in) {
  using detail::parse_number;
  std::string storage;
  std::vector<CellStats> cells;
  for (const auto& f : csv_rows(in, storage, "sweep_field,sweep_value,scheme,mean,std,min,max,n", 8)) {
    parse_sweep_field(std::string(f[0]));
    cells.push_back({parse_number<int>(f[1], "sweep_value"), parse_scheme(std::string(f[2])),
                     parse_number<double>(f[3], "mean"), parse_number<double>(f[4], "std"),
                     parse_number<Slot>(f[5], "min"), parse_number<Slot>(f[6], "max"),
                     parse_number<int>(f[7], "n")});
  }
  return cells;
}

void write_plotdata(std::ostream& out, const ExperimentResult& result) {
  std::vector<int> values;
  std::vector<Scheme> schemes;
  for (const auto& c : result.cells) {
    if (std::find(values.begin(), values.end(), c.value) == values.end()) values.push_back(c.value);
    if (std::find(schemes.begin(), schemes.end(), c.scheme) == schemes.end())
      schemes.push_back(c.scheme);
  }
  out << "# " << to_string(result.field);
  for (Scheme s : schemes) out << ' ' << to_string(s);
  out << '\n';
  for (int v : values) {
    out << v;
    for (Scheme s : schemes) out << ' ' << detail::format_double(result.cell(v, s).mean);
    out << '\n';
  }
}

SweepSpec parse_sweep_config(std::istream& in) {
  using detail::parse_number;
  SweepSpec spec;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = detail::trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
    const std::string key(detail::trim(view.substr(0, eq)));
    const std::string_view value = detail::trim(view.substr(eq + 1));
    Params& b = spec.base;
    if (key == "field") spec.field = parse_sweep_field(std::string(value));
    else if (key == "values") {
      spec.values.clear();
      for (auto v : detail::split(value, ',')) spec.values.push_back(parse_number<int>(detail::trim(v), "value"));
    } else if (key == "trials") spec.trials = parse_number<int>(value, "trials");
    else if (key == "schemes") {
      spec.schemes.clear();
      for (auto s : detail::split(value, ',')) spec.schemes.push_back(parse_scheme(std::string(detail::trim(s))));
    } else if (key == "nodes") b.node_count = parse_number<int>(value, "nodes");
    else if (key == "area") b.area_side = parse_number<double>(value, "area");
    else if (key == "range") b.comm_range = parse_number<double>(value, "range");
    else if (key == "irange") b.interference_range = parse_number<double>(value, "irange");
    else if (key == "period") b.period_length = parse_number<int>(value, "period");
    else if (key == "active") b.active_slot_count = parse_number<int>(value, "active");
    else if (key == "channels") b.channel_count = parse_number<int>(value, "channels");
    else if (key == "seed") b.rng_seed = parse_number<std::uint64_t>(value, "seed");
    else if (key == "sink") b.sink_placement = parse_sink_placement(std::string(value));
    else throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
  }
  validate(spec);
  return spec;
}

SweepSpec preset_sweep(const std::string& name, bool extended) {
  SweepSpec spec;
  spec.base.node_count = 200;
  spec.base.period_length = 20;
  spec.base.active_slot_count = 2;
  spec.base.channel_count = 3;
  spec.trials = 100;
  if (name == "fig2a") {
    spec.field = SweepField::kActiveSlotCount;
    spec.values = {1, 2, 3, 4, 5, 6, 7};
  } else if (name == "fig2b") {
    spec.field = SweepField::kPeriodLength;
    spec.values = {10, 20, 30, 40, 50, 60, 70};
  } else if (name == "fig3a") {
    spec.field = SweepField::kNodeCount;
    spec.values = {50, 100, 200, 400};
    if (extended) spec.values.push_back(800);
  } else if (name == "fig3b") {
    spec.field = SweepField::kChannelCount;
    spec.values = {2, 3, 4, 5, 6, 7};
  } else {
    throw std::invalid_argument("unknown preset: " + name + " (fig2a, fig2b, fig3a, fig3b)");
  }
  return spec;
}

}  // namespace dcagg
