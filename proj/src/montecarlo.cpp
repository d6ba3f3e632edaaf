#include "nrules/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "nrules/dynamics.hpp"
#include "nrules/errors.hpp"
#include "nrules/experience.hpp"
#include "nrules/rng.hpp"

namespace nrules {

namespace {

struct BufferedEvent {
  Event event;
  int cause_local = -1;  // buffer index of the causing event, for experience entries
};

// Per-trial mutable state around the superposition.
class TrialEngine {
 public:
  TrialEngine(const BuiltScenario& scenario, std::uint64_t seed, double dt,
              const RunOptions& options)
      : scenario_(scenario),
        options_(options),
        sup_(scenario.initial),
        rng_(splitmix64(seed)),
        dt_(dt) {
    trajectory_.scenario = scenario.spec.name;
    trajectory_.seed = seed;
    trajectory_.dt = dt;
    fired_.assign(scenario_.schedule.entries.size(), false);

    processes_.push_back(
        {Slot::mechanism, 0.0, scenario_.spec.mech_duration, false, false, false});
    processes_.push_back(
        {Slot::internal_clock, 0.0, scenario_.spec.internal_duration, false, false, true});
  }

  Trajectory run() {
    if (dt_ <= 0.0) throw DomainError("dt must be positive");
    record_initial_experiences();

    double t = 0.0;
    std::uint64_t steps = 0;
    while (!finished(t)) {
      step(t);
      t += dt_;
      if (++steps > 200'000'000ULL) throw DomainError("trial exceeded the step budget");
    }

    trajectory_.terminal_time = t;
    const Component* realized = unique_realized();
    trajectory_.terminal_labels = label_strings(*realized);
    return std::move(trajectory_);
  }

 private:
  bool finished(double t) const {
    for (std::size_t i = 0; i < fired_.size(); ++i) {
      if (!fired_[i] && !scenario_.schedule.entries[i].on_hit) return false;
    }
    for (const auto& edge : sup_.edges) {
      if (edge.active && t < std::min(edge.rate.cutoff, edge.active_until)) return false;
    }
    for (const auto& process : processes_) {
      if (process.running) return false;
    }
    if (observation_running_) return false;
    return true;
  }

  void step(double t) {
    step_buffer_.clear();
    fire_due_triggers(t);

    std::optional<HitEvent> hit = sample_hit(sup_, t, dt_, rng_);

    StepResult moved = advance(sup_, t, dt_, processes_);

    if (moved.clamped) {
      BufferedEvent warning;
      warning.event.t = t + dt_;
      warning.event.kind = EventKind::warning;
      warning.event.payload.emplace_back("reason", std::string("transfer clamped to source modulus"));
      warning.event.labels_after = realized_labels();
      step_buffer_.push_back(std::move(warning));
    }

    if (hit.has_value()) {
      apply_hit(*hit);
    }

    apply_completions(moved.completions);
    handle_observation(t);
    if (options_.prune) prune_now(t + dt_);
    if (options_.check_each_step) run_checks();

    flush_step_buffer();
  }

  void fire_due_triggers(double t) {
    for (std::size_t i = 0; i < scenario_.schedule.entries.size(); ++i) {
      const ScheduleEntry& entry = scenario_.schedule.entries[i];
      if (fired_[i] || entry.on_hit || entry.at > t) continue;
      fired_[i] = true;
      switch (entry.action) {
        case ScheduleAction::begin_internal_clock:
          internal_clock().start = entry.at;
          internal_clock().running = true;
          break;
        case ScheduleAction::begin_observation:
          begin_observation(entry.at);
          break;
        case ScheduleAction::cutoff:
          apply_cutoff(entry.at);
          break;
        case ScheduleAction::spawn_ready:
        case ScheduleAction::begin_mechanism:
          break;  // build-time / hit-triggered
      }
    }
  }

  void begin_observation(double t_look) {
    observation_running_ = true;
    observation_start_ = t_look;

    BufferedEvent start;
    start.event.t = t_look;
    start.event.kind = EventKind::observation_start;
    start.event.payload.emplace_back("t_look", t_look);
    start.event.payload.emplace_back("pi", *scenario_.spec.obs_pi);
    start.event.payload.emplace_back("straddles_cutoff", scenario_.observation_straddles_cutoff);
    start.event.labels_after = realized_labels();
    step_buffer_.push_back(std::move(start));

    // The pre-look ready component stops receiving vertical current: the
    // continuum's first live component takes its place as the edge target.
    Component* old_ready = nullptr;
    for (auto& component : sup_.components) {
      if (component.kind == Kind::ready) old_ready = &component;
    }
    if (old_ready == nullptr) return;  // already reduced; nothing to supersede

    Component fresh;
    fresh.id = sup_.next_id++;
    fresh.labels = old_ready->labels;
    fresh.modulus = 0.0;
    fresh.kind = Kind::ready;
    fresh.born_at = t_look;
    fresh.ready_symbols = old_ready->ready_symbols;
    const ComponentId old_id = old_ready->id;
    sup_.components.push_back(std::move(fresh));
    window_live_ = sup_.components.back().id;
    for (auto& edge : sup_.edges) {
      if (edge.to == old_id) edge.to = window_live_;
    }

    for (ComponentId id : phantomize(sup_, t_look)) record_phantomized(id, t_look, false);
  }

  void apply_cutoff(double at) {
    if (sup_.edges.empty()) return;  // already reduced
    bool any_live = false;
    for (auto& edge : sup_.edges) {
      if (at >= std::min(edge.rate.cutoff, edge.active_until)) edge.active = false;
      if (edge.active) any_live = true;
    }
    BufferedEvent cutoff;
    cutoff.event.t = at;
    cutoff.event.kind = EventKind::cutoff;
    cutoff.event.payload.emplace_back("detector_shut_off", !any_live);
    cutoff.event.labels_after = realized_labels();
    step_buffer_.push_back(std::move(cutoff));

    for (ComponentId id : phantomize(sup_, at)) record_phantomized(id, at, false);
  }

  void apply_hit(const HitEvent& hit) {
    reduce(sup_, hit);
    reduced_ = true;

    BufferedEvent event;
    event.event.t = hit.time;
    event.event.kind = EventKind::hit;
    event.event.payload.emplace_back("component", static_cast<std::int64_t>(hit.chosen));
    event.event.payload.emplace_back("rate_at_hit", hit.rate_at_hit);
    event.event.payload.emplace_back("modulus", sup_.components.front().modulus);
    event.event.labels_after = realized_labels();
    const int cause = static_cast<int>(step_buffer_.size());
    step_buffer_.push_back(std::move(event));

    for (std::size_t i = 0; i < scenario_.schedule.entries.size(); ++i) {
      const ScheduleEntry& entry = scenario_.schedule.entries[i];
      if (!fired_[i] && entry.on_hit && entry.action == ScheduleAction::begin_mechanism) {
        fired_[i] = true;
        mechanism().start = hit.time;
        mechanism().running = true;
      }
    }
    update_experiences(hit.time, cause);
  }

  void apply_completions(const std::vector<Slot>& completions) {
    // Applied in completion-time order when several land in one step.
    std::vector<std::pair<double, Slot>> ordered;
    for (Slot slot : completions) {
      const ClassicalProcess& process = slot == Slot::mechanism ? mechanism() : internal_clock();
      ordered.emplace_back(process.completion_time(), slot);
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    for (const auto& [at, slot] : ordered) {
      for (auto& component : sup_.components) {
        if (component.kind == Kind::phantom) continue;
        if (slot == Slot::mechanism) {
          if (component.kind != Kind::realized) continue;  // M runs on the chosen branch
          apply_mechanism_effect(component);
        } else {
          apply_internal_wake(component);
        }
      }
      BufferedEvent event;
      event.event.t = at;
      event.event.kind = EventKind::phase_complete;
      event.event.payload.emplace_back("process", to_string(slot));
      event.event.labels_after = realized_labels();
      const int cause = static_cast<int>(step_buffer_.size());
      step_buffer_.push_back(std::move(event));
      update_experiences(at, cause);
    }
  }

  void apply_mechanism_effect(Component& component) {
    switch (scenario_.mech_effect) {
      case MechEffect::flip_indicator:
        if (StateLabel* indicator = component.find_label(Slot::indicator)) {
          if (indicator->symbol == "i0") indicator->symbol = "i1";
          else if (indicator->symbol == "I0") indicator->symbol = "I1";
        }
        break;
      case MechEffect::cat_sleep:
        if (StateLabel* cat = component.find_label(Slot::cat)) cat->symbol = "U";
        break;
      case MechEffect::cat_wake:
        if (StateLabel* cat = component.find_label(Slot::cat)) cat->symbol = "C";
        break;
    }
    sync_brain(component);
  }

  void apply_internal_wake(Component& component) {
    if (StateLabel* cat = component.find_label(Slot::cat)) cat->symbol = "C";
    sync_brain(component);
  }

  // The on-board brain tracks what it observes; X stays untouched until the
  // physiological interaction completes.
  void sync_brain(Component& component) {
    StateLabel* observer = component.find_label(Slot::observer);
    if (observer == nullptr || observer->symbol == "X") return;
    if (scenario_.brain_binding == BrainBinding::indicator) {
      const StateLabel* indicator = component.find_label(Slot::indicator);
      if (indicator != nullptr) {
        observer->symbol = indicator->symbol == "I1" || indicator->symbol == "i1" ? "B1" : "B0";
      }
    } else if (scenario_.brain_binding == BrainBinding::cat) {
      const StateLabel* cat = component.find_label(Slot::cat);
      if (cat != nullptr) observer->symbol = cat->symbol == "C" ? "B_C" : "B_U";
    }
  }

  void apply_observation_morph(Component& component) {
    if (StateLabel* indicator = component.find_label(Slot::indicator)) {
      if (indicator->symbol == "i0") indicator->symbol = "I0";
      else if (indicator->symbol == "i1") indicator->symbol = "I1";
    }
    if (StateLabel* observer = component.find_label(Slot::observer)) {
      if (observer->symbol == "X") {
        observer->subsystem = Role::observer_brain;
        observer->symbol = "B?";
      }
    }
    sync_brain_from_scratch(component);
  }

  void sync_brain_from_scratch(Component& component) {
    StateLabel* observer = component.find_label(Slot::observer);
    if (observer == nullptr || observer->symbol == "X") return;
    if (scenario_.brain_binding == BrainBinding::indicator) {
      const StateLabel* indicator = component.find_label(Slot::indicator);
      observer->symbol =
          indicator != nullptr && (indicator->symbol == "I1" || indicator->symbol == "i1")
              ? "B1"
              : "B0";
    } else if (scenario_.brain_binding == BrainBinding::cat) {
      const StateLabel* cat = component.find_label(Slot::cat);
      observer->symbol = cat != nullptr && cat->symbol == "C" ? "B_C" : "B_U";
    }
  }

  void handle_observation(double t) {
    if (!observation_running_) return;
    const double t_ob = observation_start_ + *scenario_.spec.obs_pi;
    const double t_next = t + dt_;

    if (t_next >= t_ob) {
      // Physiological interaction complete: the morph lands on every live
      // component and the final window packet freezes into the pool.
      finish_window_component(t_ob);
      for (auto& component : sup_.components) {
        if (component.kind == Kind::phantom) continue;
        apply_observation_morph(component);
      }
      observation_running_ = false;

      BufferedEvent event;
      event.event.t = t_ob;
      event.event.kind = EventKind::observation_complete;
      event.event.payload.emplace_back("t_ob", t_ob);
      event.event.labels_after = realized_labels();
      const int cause = static_cast<int>(step_buffer_.size());
      step_buffer_.push_back(std::move(event));
      update_experiences(t_ob, cause);
      return;
    }

    rotate_window_component(t_next);
  }

  // Mid-window step: the live ready component ends its moment; its packet
  // freezes into the pool and it restarts at zero, one instant later.
  void rotate_window_component(double at) {
    Component* live = window_live_ != 0 ? sup_.find(window_live_) : nullptr;
    if (live == nullptr || live->kind != Kind::ready) return;
    const double frozen = supersede_window_component(sup_, window_live_, at);
    record_window_phantom(at, frozen);
  }

  void finish_window_component(double t_ob) {
    Component* live = window_live_ != 0 ? sup_.find(window_live_) : nullptr;
    if (live == nullptr || live->kind != Kind::ready) return;
    const double frozen = supersede_window_component(sup_, window_live_, t_ob);
    record_window_phantom(t_ob, frozen);
  }

  void record_window_phantom(double at, double frozen) {
    ++window_phantom_ordinal_;  // continuum ordinal; unaffected by pruning
    BufferedEvent event;
    event.event.t = at;
    event.event.kind = EventKind::phantomized;
    event.event.payload.emplace_back("window", true);
    event.event.payload.emplace_back("frozen_modulus", frozen);
    event.event.payload.emplace_back("pool_count",
                                     static_cast<std::int64_t>(window_phantom_ordinal_));
    event.event.labels_after = realized_labels();
    step_buffer_.push_back(std::move(event));
  }

  void record_phantomized(ComponentId id, double at, bool window) {
    const Component* component = sup_.find(id);
    BufferedEvent event;
    event.event.t = at;
    event.event.kind = EventKind::phantomized;
    event.event.payload.emplace_back("component", static_cast<std::int64_t>(id));
    event.event.payload.emplace_back("window", window);
    if (component != nullptr) {
      event.event.payload.emplace_back("frozen_modulus", component->modulus);
    }
    event.event.labels_after = realized_labels();
    step_buffer_.push_back(std::move(event));
  }

  void prune_now(double at) {
    const PruneResult result = prune_phantoms(sup_);
    if (result.removed.empty() && result.pool_dropped == 0) return;
    pruned_any_ = true;
    BufferedEvent event;
    event.event.t = at;
    event.event.kind = EventKind::pruned;
    event.event.payload.emplace_back("components",
                                     static_cast<std::int64_t>(result.removed.size()));
    event.event.payload.emplace_back("pool_dropped",
                                     static_cast<std::int64_t>(result.pool_dropped));
    event.event.payload.emplace_back("mass_dropped", result.mass_dropped);
    event.event.labels_after = realized_labels();
    step_buffer_.push_back(std::move(event));
  }

  void run_checks() {
    const auto violations = validate(sup_);
    if (!violations.empty()) {
      throw RuleViolationError("validate failed mid-trial: " + violations.front().code + " (" +
                               violations.front().message + ")");
    }
    if (!reduced_ && !pruned_any_) {
      if (std::abs(total_modulus(sup_) - 1.0) >= options_.conservation_tol) {
        throw RuleViolationError("square-modulus conservation broken");
      }
    }
  }

  void record_initial_experiences() {
    update_experiences(0.0, -1, /*direct=*/true);
  }

  // Emits an experience event per agent whose conscious token changed. Tokens
  // come from the unique realized component only.
  void update_experiences(double t, int cause_local, bool direct = false) {
    const Component* realized = unique_realized();

    if (const StateLabel* cat = realized->find_label(Slot::cat)) {
      push_experience_if_changed(Agent::cat, cat->symbol, t, cause_local, direct);
    }
    if (const StateLabel* observer = realized->find_label(Slot::observer)) {
      if (observer->symbol != "X") {
        std::string token = observer->symbol;
        if (scenario_.brain_binding == BrainBinding::indicator) {
          if (const StateLabel* indicator = realized->find_label(Slot::indicator)) {
            token += ":" + indicator->symbol;
          }
        }
        push_experience_if_changed(Agent::observer, token, t, cause_local, direct);
      }
    }
  }

  void push_experience_if_changed(Agent agent, const std::string& token, double t,
                                  int cause_local, bool direct) {
    std::optional<std::string>& current =
        agent == Agent::cat ? current_cat_ : current_observer_;
    if (current.has_value() && *current == token) return;
    current = token;

    BufferedEvent event;
    event.event.t = t;
    event.event.kind = EventKind::experience;
    event.event.payload.emplace_back("agent", to_string(agent));
    event.event.payload.emplace_back("state", token);
    event.event.payload.emplace_back("cause", static_cast<std::int64_t>(-1));
    event.cause_local = cause_local;
    event.event.labels_after = realized_labels();
    if (direct) {
      append_event(std::move(event.event));
    } else {
      step_buffer_.push_back(std::move(event));
    }
  }

  const Component* unique_realized() const {
    const Component* found = nullptr;
    for (const auto& component : sup_.components) {
      if (component.kind != Kind::realized) continue;
      if (found != nullptr) throw RuleViolationError("two realized components coexist");
      found = &component;
    }
    if (found == nullptr) throw RuleViolationError("no realized component");
    return found;
  }

  std::vector<std::string> realized_labels() const { return label_strings(*unique_realized()); }

  // Events within one step carry exact timestamps in [t, t+dt]; sort them,
  // then resolve experience cause references. Causes use a serial that skips
  // pruned entries, so logs with and without pruning reference identically.
  void flush_step_buffer() {
    std::vector<std::size_t> order(step_buffer_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return step_buffer_[a].event.t < step_buffer_[b].event.t;
    });

    std::vector<std::int64_t> serials(step_buffer_.size(), -1);
    std::int64_t next = event_serial_;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      if (step_buffer_[order[pos]].event.kind != EventKind::pruned) {
        serials[order[pos]] = next++;
      }
    }

    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      BufferedEvent& buffered = step_buffer_[order[pos]];
      if (buffered.cause_local >= 0) {
        for (auto& [key, value] : buffered.event.payload) {
          if (key == "cause") value = serials[static_cast<std::size_t>(buffered.cause_local)];
        }
      }
      append_event(std::move(buffered.event));
    }
    step_buffer_.clear();
  }

  void append_event(Event event) {
    // Keep the log time-ordered even when off-grid trigger times interleave.
    if (!trajectory_.events.empty() && event.t < trajectory_.events.back().t) {
      event.t = trajectory_.events.back().t;
    }
    if (event.kind != EventKind::pruned) ++event_serial_;
    trajectory_.events.push_back(std::move(event));
  }

  const BuiltScenario& scenario_;
  RunOptions options_;
  Superposition sup_;
  TrialRng rng_;
  double dt_;
  Trajectory trajectory_;

  std::vector<bool> fired_;
  std::vector<BufferedEvent> step_buffer_;
  std::vector<ClassicalProcess> processes_;  // [0] mechanism, [1] internal clock

  ClassicalProcess& mechanism() { return processes_[0]; }
  ClassicalProcess& internal_clock() { return processes_[1]; }
  const ClassicalProcess& mechanism() const { return processes_[0]; }
  const ClassicalProcess& internal_clock() const { return processes_[1]; }

  bool observation_running_ = false;
  double observation_start_ = 0.0;
  ComponentId window_live_ = 0;
  std::uint64_t window_phantom_ordinal_ = 0;
  std::int64_t event_serial_ = 0;
  bool reduced_ = false;
  bool pruned_any_ = false;

  std::optional<std::string> current_cat_;
  std::optional<std::string> current_observer_;
};

}  // namespace

Trajectory run_trial(const BuiltScenario& scenario, std::uint64_t seed, double dt,
                     const RunOptions& options) {
  TrialEngine engine(scenario, seed, dt, options);
  return engine.run();
}

Trajectory run_trial(const ScenarioSpec& spec, std::uint64_t seed, double dt,
                     const RunOptions& options) {
  return run_trial(build_scenario(spec), seed, dt, options);
}

double ks_test(std::vector<double> hit_times, double lambda, double cutoff) {
  if (hit_times.empty()) throw DomainError("ks_test needs at least one sample");
  if (!(lambda > 0.0) || !(cutoff > 0.0)) throw DomainError("ks_test needs lambda, cutoff > 0");
  std::sort(hit_times.begin(), hit_times.end());
  if (hit_times.front() < 0.0 || hit_times.back() > cutoff) {
    throw DomainError("hit time outside [0, cutoff]");
  }
  const double denom = 1.0 - std::exp(-lambda * cutoff);
  const double n = static_cast<double>(hit_times.size());
  double d = 0.0;
  for (std::size_t i = 0; i < hit_times.size(); ++i) {
    const double f = (1.0 - std::exp(-lambda * hit_times[i])) / denom;
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d = std::max({d, f - lo, hi - f});
  }
  return d;
}

unsigned resolve_thread_count(unsigned requested) {
  if (const char* env = std::getenv("NRULES_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed > 0) return static_cast<unsigned>(parsed);
  }
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

namespace {

struct TrialOutcome {
  bool hit = false;
  double hit_time = 0.0;
  std::string terminal;
  bool paradox_ok = true;
};

TrialOutcome summarize_trial(const BuiltScenario& built, const Trajectory& trajectory) {
  TrialOutcome outcome;
  if (const Event* hit = trajectory.first_of(EventKind::hit)) {
    outcome.hit = true;
    outcome.hit_time = hit->t;
  }
  std::string terminal;
  for (const auto& piece : trajectory.terminal_labels) {
    if (!terminal.empty()) terminal += " ";
    terminal += piece;
  }
  outcome.terminal = std::move(terminal);
  outcome.paradox_ok =
      check_no_paradox(extract_experiences(trajectory), built.spec.version).ok;
  return outcome;
}

}  // namespace

BatchSummary run_batch(const ScenarioSpec& spec, std::uint64_t n, std::uint64_t base_seed,
                       double dt, const RunOptions& options, unsigned threads,
                       std::size_t histogram_bins) {
  if (n < 1) throw DomainError("run_batch needs n >= 1");
  const BuiltScenario built = build_scenario(spec);

  std::vector<TrialOutcome> outcomes(n);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_thread_count(threads), n));

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const Trajectory trajectory = run_trial(built, split_seed(base_seed, i), dt, options);
      outcomes[i] = summarize_trial(built, trajectory);
    }
  };

  if (workers <= 1) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min<std::uint64_t>(n, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(work, begin, end);
    }
    for (auto& thread : pool) thread.join();
  }

  BatchSummary summary;
  summary.n_trials = n;
  summary.hit_time_histogram.lo = built.decay_start;
  summary.hit_time_histogram.hi = built.decay_end;
  summary.hit_time_histogram.counts.assign(histogram_bins, 0);

  std::vector<double> hit_times;
  for (const auto& outcome : outcomes) {
    if (outcome.hit) {
      ++summary.hits;
      hit_times.push_back(outcome.hit_time);
      const double span = built.decay_end - built.decay_start;
      if (span > 0.0 && histogram_bins > 0) {
        auto bin = static_cast<std::size_t>((outcome.hit_time - built.decay_start) / span *
                                            static_cast<double>(histogram_bins));
        bin = std::min(bin, histogram_bins - 1);
        ++summary.hit_time_histogram.counts[bin];
      }
    }
    ++summary.outcome_counts[outcome.terminal];
    if (!outcome.paradox_ok) ++summary.paradox_violations;
  }
  summary.hit_fraction = static_cast<double>(summary.hits) / static_cast<double>(n);
  if (!hit_times.empty()) {
    for (double& time : hit_times) time -= built.decay_start;
    summary.ks_statistic =
        ks_test(std::move(hit_times), spec.lambda, built.decay_end - built.decay_start);
  }
  return summary;
}

std::string BatchSummary::to_csv() const {
  std::string out = "key,value\n";
  out += "n_trials," + std::to_string(n_trials) + "\n";
  out += "hits," + std::to_string(hits) + "\n";
  out += "hit_fraction," + format_number(hit_fraction) + "\n";
  out += "ks_statistic," + format_number(ks_statistic) + "\n";
  out += "paradox_violations," + std::to_string(paradox_violations) + "\n";
  for (const auto& [labels, count] : outcome_counts) {
    out += "outcome[" + labels + "]," + std::to_string(count) + "\n";
  }
  return out;
}

std::string BatchSummary::histogram_csv() const {
  std::string out = "bin_lo,bin_hi,count\n";
  const double width = hit_time_histogram.bin_width();
  for (std::size_t i = 0; i < hit_time_histogram.counts.size(); ++i) {
    const double lo = hit_time_histogram.lo + width * static_cast<double>(i);
    out += format_number(lo) + "," + format_number(lo + width) + "," +
           std::to_string(hit_time_histogram.counts[i]) + "\n";
  }
  return out;
}

}  // namespace nrules
