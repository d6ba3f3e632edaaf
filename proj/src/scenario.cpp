#include "nrules/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "nrules/errors.hpp"

namespace nrules {

namespace {

constexpr double kLn2 = 0.6931471805599453;

SubsystemDecl detector_decl() { return {Slot::detector, {"d0", "d1"}}; }
SubsystemDecl mechanism_decl() { return {Slot::mechanism, {"M"}}; }
SubsystemDecl internal_clock_decl() { return {Slot::internal_clock, {"N"}}; }
SubsystemDecl indicator_decl() { return {Slot::indicator, {"i0", "i1", "I0", "I1"}}; }
SubsystemDecl cat_decl() { return {Slot::cat, {"C", "U"}}; }
SubsystemDecl observer_decl() { return {Slot::observer, {"X", "B0", "B1", "B_C", "B_U"}}; }

std::vector<SubsystemDecl> subsystems_for(Version version) {
  switch (version) {
    case Version::apparatus:
      return {detector_decl(), mechanism_decl(), indicator_decl()};
    case Version::apparatus_observer:
      return {detector_decl(), mechanism_decl(), indicator_decl(), observer_decl()};
    case Version::cat1:
    case Version::cat2:
      return {detector_decl(), mechanism_decl(), cat_decl()};
    case Version::cat1_observer:
    case Version::cat2_observer:
      return {detector_decl(), mechanism_decl(), cat_decl(), observer_decl()};
    case Version::cat2_natural:
      return {detector_decl(), mechanism_decl(), internal_clock_decl(), cat_decl()};
  }
  return {};
}

// Shared skeleton: realized start component with modulus 1, ready partner
// with the detector flipped, one decay edge.
BuiltScenario build_base(const ScenarioSpec& spec, std::vector<StateLabel> start_labels) {
  validate_spec(spec);
  BuiltScenario built;
  built.spec = spec;
  built.spec.subsystems = subsystems_for(spec.version);
  built.initial.subsystems = built.spec.subsystems;
  built.decay_start = 0.0;
  built.decay_end = spec.t_half;

  Component& origin =
      make_component(built.initial, std::move(start_labels), 1.0, Kind::realized);
  origin.born_at = 0.0;
  built.initial.total_s = 1.0;

  const RateFunction rate =
      exponential_decay_rate(spec.lambda, built.decay_start, built.decay_end);
  spawn_ready(built.initial, origin.id, {make_label(Role::detector, "d1")}, {"d1"}, rate);

  built.schedule.entries.push_back({true, 0.0, ScheduleAction::begin_mechanism});
  built.schedule.entries.push_back({false, built.decay_end, ScheduleAction::cutoff});
  return built;
}

void sort_schedule(InteractionSchedule& schedule) {
  std::stable_sort(schedule.entries.begin(), schedule.entries.end(),
                   [](const ScheduleEntry& a, const ScheduleEntry& b) {
                     if (a.on_hit != b.on_hit) return !a.on_hit;
                     return a.at < b.at;
                   });
}

}  // namespace

std::string to_string(Version version) {
  switch (version) {
    case Version::apparatus: return "apparatus";
    case Version::apparatus_observer: return "apparatus+observer";
    case Version::cat1: return "cat1";
    case Version::cat1_observer: return "cat1+observer";
    case Version::cat2: return "cat2";
    case Version::cat2_observer: return "cat2+observer";
    case Version::cat2_natural: return "cat2-natural";
  }
  return "?";
}

std::string to_string(Ordering ordering) {
  return ordering == Ordering::external_first ? "external-first" : "internal-first";
}

std::optional<Version> parse_version(const std::string& token) {
  for (Version v : {Version::apparatus, Version::apparatus_observer, Version::cat1,
                    Version::cat1_observer, Version::cat2, Version::cat2_observer,
                    Version::cat2_natural}) {
    if (to_string(v) == token) return v;
  }
  return std::nullopt;
}

std::optional<Ordering> parse_ordering(const std::string& token) {
  if (token == "external-first") return Ordering::external_first;
  if (token == "internal-first") return Ordering::internal_first;
  return std::nullopt;
}

bool ScenarioSpec::has_observer() const {
  return version == Version::apparatus_observer || version == Version::cat1_observer ||
         version == Version::cat2_observer;
}

ScenarioSpec builtin_spec(Version version, std::optional<Ordering> ordering) {
  ScenarioSpec spec;
  spec.name = to_string(version);
  spec.version = version;
  spec.t_half = 1.0;
  spec.lambda = kLn2 / spec.t_half;
  spec.mech_duration = 0.2;
  spec.internal_duration = 0.8;
  if (spec.has_observer()) {
    spec.obs_look_time = 0.3;
    spec.obs_pi = 0.05;
  }
  if (version == Version::cat2_natural) {
    spec.ordering = ordering.value_or(Ordering::external_first);
    spec.name += std::string("/") + to_string(*spec.ordering);
  }
  spec.subsystems = subsystems_for(version);
  return spec;
}

std::vector<std::string> builtin_names() {
  return {"apparatus", "apparatus+observer", "cat1", "cat1+observer",
          "cat2", "cat2+observer", "cat2-natural"};
}

void validate_spec(const ScenarioSpec& spec) {
  if (!(spec.lambda > 0.0)) throw SchemaError("missing or non-positive lambda");
  if (std::abs(spec.t_half * spec.lambda - kLn2) > 1e-12) {
    throw SchemaError("t_half and lambda inconsistent (t_half = ln2/lambda)");
  }
  if (!(spec.mech_duration > 0.0)) throw SchemaError("mech_duration must be positive");
  if (spec.obs_look_time.has_value() != spec.obs_pi.has_value()) {
    throw SchemaError("obs_look_time and obs_pi go together");
  }
  if (spec.has_observer()) {
    if (!spec.obs_look_time.has_value()) {
      throw SchemaError("observer scenario needs obs_look_time and obs_pi");
    }
    if (*spec.obs_look_time < 0.0) throw SchemaError("observation cannot begin before t0");
    if (!(*spec.obs_pi > 0.0)) throw SchemaError("obs_pi must be positive");
  }
  if (spec.version == Version::cat2_natural) {
    if (!spec.ordering.has_value()) throw SchemaError("cat2-natural needs an ordering");
    if (!(spec.internal_duration > 0.0)) {
      throw SchemaError("internal_duration must be positive");
    }
  }
}

std::string to_string(ScheduleAction action) {
  switch (action) {
    case ScheduleAction::spawn_ready: return "spawn-ready";
    case ScheduleAction::begin_observation: return "begin-observation";
    case ScheduleAction::begin_internal_clock: return "begin-internal-clock";
    case ScheduleAction::begin_mechanism: return "begin-mechanism";
    case ScheduleAction::cutoff: return "cutoff";
  }
  return "?";
}

BuiltScenario build_apparatus(const ScenarioSpec& spec) {
  if (spec.version != Version::apparatus && spec.version != Version::apparatus_observer) {
    throw SchemaError("build_apparatus expects an apparatus version");
  }
  ScenarioSpec base = spec;
  const bool with_observer = spec.version == Version::apparatus_observer;

  BuiltScenario built = [&] {
    ScenarioSpec inner = base;
    std::vector<StateLabel> labels{make_label(Role::detector, "d0"),
                                   make_phased_label(Role::mechanism, "M", 0.0),
                                   make_label(Role::indicator, "i0")};
    if (with_observer) labels.push_back(make_label(Role::observer_raw, "X"));
    return build_base(inner, std::move(labels));
  }();
  built.mech_effect = MechEffect::flip_indicator;
  built.brain_binding = with_observer ? BrainBinding::indicator : BrainBinding::none;
  if (with_observer) {
    built = attach_observer(std::move(built), *spec.obs_look_time, *spec.obs_pi);
  }
  sort_schedule(built.schedule);
  return built;
}

BuiltScenario attach_observer(BuiltScenario base, double t_look, double pi) {
  if (t_look < 0.0) throw SchemaError("observation cannot begin before t0");
  if (!(pi > 0.0)) throw SchemaError("physiological interaction length must be positive");
  if (base.initial.find_subsystem(Slot::observer) == nullptr) {
    throw SchemaError("scenario has no observer subsystem");
  }
  base.spec.obs_look_time = t_look;
  base.spec.obs_pi = pi;
  // The paper never treats a window that straddles the cutoff; permitted but
  // flagged on the trajectory.
  base.observation_straddles_cutoff = t_look < base.decay_end && t_look + pi >= base.decay_end;
  base.schedule.entries.push_back({false, t_look, ScheduleAction::begin_observation});
  sort_schedule(base.schedule);
  return base;
}

BuiltScenario build_cat_v1(const ScenarioSpec& spec, bool with_observer) {
  const Version expected = with_observer ? Version::cat1_observer : Version::cat1;
  if (spec.version != expected) throw SchemaError("spec version does not match build_cat_v1");

  std::vector<StateLabel> labels{make_label(Role::detector, "d0"),
                                 make_phased_label(Role::mechanism, "M", 0.0),
                                 make_label(Role::cat, "C")};
  if (with_observer) labels.push_back(make_label(Role::observer_raw, "X"));
  BuiltScenario built = build_base(spec, std::move(labels));
  built.mech_effect = MechEffect::cat_sleep;
  built.brain_binding = with_observer ? BrainBinding::cat : BrainBinding::none;
  if (with_observer) {
    built = attach_observer(std::move(built), *spec.obs_look_time, *spec.obs_pi);
  }
  sort_schedule(built.schedule);
  return built;
}

BuiltScenario build_cat_v2(const ScenarioSpec& spec, bool with_observer) {
  const Version expected = with_observer ? Version::cat2_observer : Version::cat2;
  if (spec.version != expected) throw SchemaError("spec version does not match build_cat_v2");

  std::vector<StateLabel> labels{make_label(Role::detector, "d0"),
                                 make_phased_label(Role::mechanism, "M", 0.0),
                                 make_label(Role::cat, "U")};
  if (with_observer) labels.push_back(make_label(Role::observer_raw, "X"));
  BuiltScenario built = build_base(spec, std::move(labels));
  built.mech_effect = MechEffect::cat_wake;
  built.brain_binding = with_observer ? BrainBinding::cat : BrainBinding::none;
  if (with_observer) {
    built = attach_observer(std::move(built), *spec.obs_look_time, *spec.obs_pi);
  }
  sort_schedule(built.schedule);
  return built;
}

BuiltScenario build_natural_wakeup(const ScenarioSpec& spec, Ordering ordering) {
  if (spec.version != Version::cat2_natural) {
    throw SchemaError("spec version does not match build_natural_wakeup");
  }
  ScenarioSpec fixed = spec;
  fixed.ordering = ordering;
  validate_spec(fixed);

  std::vector<StateLabel> labels{make_label(Role::detector, "d0"),
                                 make_phased_label(Role::mechanism, "M", 0.0),
                                 make_phased_label(Role::internal_clock, "N", 0.0),
                                 make_label(Role::cat, "U")};
  BuiltScenario built = build_base(fixed, std::move(labels));
  built.mech_effect = MechEffect::cat_wake;
  built.has_internal_clock = true;

  // The ordering fixes which event can come first: external-first confines the
  // exposure to before the internal clock completes; internal-first opens a
  // full half-life exposure after it.
  const double t_ff = fixed.internal_duration;
  if (ordering == Ordering::external_first) {
    built.decay_start = 0.0;
    built.decay_end = std::min(fixed.t_half, t_ff);
  } else {
    built.decay_start = t_ff;
    built.decay_end = t_ff + fixed.t_half;
  }
  for (auto& edge : built.initial.edges) {
    edge.rate.start = built.decay_start;
    edge.rate.cutoff = built.decay_end;
    edge.active_until = built.decay_end;
  }
  for (auto& entry : built.schedule.entries) {
    if (!entry.on_hit && entry.action == ScheduleAction::cutoff) entry.at = built.decay_end;
  }
  built.schedule.entries.push_back({false, 0.0, ScheduleAction::begin_internal_clock});
  sort_schedule(built.schedule);
  return built;
}

BuiltScenario build_scenario(const ScenarioSpec& spec) {
  switch (spec.version) {
    case Version::apparatus:
    case Version::apparatus_observer:
      return build_apparatus(spec);
    case Version::cat1:
      return build_cat_v1(spec, false);
    case Version::cat1_observer:
      return build_cat_v1(spec, true);
    case Version::cat2:
      return build_cat_v2(spec, false);
    case Version::cat2_observer:
      return build_cat_v2(spec, true);
    case Version::cat2_natural:
      if (!spec.ordering.has_value()) throw SchemaError("cat2-natural needs an ordering");
      return build_natural_wakeup(spec, *spec.ordering);
  }
  throw SchemaError("unknown scenario version");
}

}  // namespace nrules
