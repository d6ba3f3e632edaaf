#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nrules/dynamics.hpp"
#include "nrules/model.hpp"

namespace nrules {

enum class Version {
  apparatus,
  apparatus_observer,
  cat1,
  cat1_observer,
  cat2,
  cat2_observer,
  cat2_natural,
};

enum class Ordering { external_first, internal_first };

std::string to_string(Version version);
std::string to_string(Ordering ordering);
std::optional<Version> parse_version(const std::string& token);
std::optional<Ordering> parse_ordering(const std::string& token);

// Declarative description of one experimental configuration. lambda and
// t_half are a derived pair (t_half = ln2 / lambda).
struct ScenarioSpec {
  std::string name;
  Version version = Version::apparatus;
  double lambda = 0.0;
  double t_half = 0.0;
  double mech_duration = 0.2;
  double internal_duration = 0.8;
  std::optional<double> obs_look_time;
  std::optional<double> obs_pi;
  std::optional<Ordering> ordering;
  std::vector<SubsystemDecl> subsystems;

  bool has_observer() const;
};

// Built-in configuration for a version, using the default parameters
// (t_half = 1 s, mech 0.2 s, look 0.3 s, pi 0.05 s, internal 0.8 s).
ScenarioSpec builtin_spec(Version version, std::optional<Ordering> ordering = std::nullopt);
std::vector<std::string> builtin_names();

// Checks field presence/consistency for the version; throws SchemaError.
void validate_spec(const ScenarioSpec& spec);

enum class ScheduleAction { spawn_ready, begin_observation, begin_internal_clock, begin_mechanism, cutoff };

std::string to_string(ScheduleAction action);

// Time- or event-triggered interaction list. Event-triggered entries (the
// mechanism starting on a hit) carry on_hit = true and no time.
struct ScheduleEntry {
  bool on_hit = false;
  double at = 0.0;
  ScheduleAction action = ScheduleAction::cutoff;
};

struct InteractionSchedule {
  std::vector<ScheduleEntry> entries;  // time entries sorted by trigger time
};

// What the mechanism's completion does to the labels it is wired to.
enum class MechEffect { flip_indicator, cat_sleep, cat_wake };

// Which subsystem the observer's brain state mirrors once on board.
enum class BrainBinding { none, indicator, cat };

// A scenario wired for execution: the initial superposition (already holding
// the ready partner component), the schedule, and the label-morph bindings.
struct BuiltScenario {
  ScenarioSpec spec;
  Superposition initial;
  InteractionSchedule schedule;
  double decay_start = 0.0;
  double decay_end = 0.0;
  MechEffect mech_effect = MechEffect::flip_indicator;
  BrainBinding brain_binding = BrainBinding::none;
  bool has_internal_clock = false;
  bool observation_straddles_cutoff = false;
};

// Eq.-1 style apparatus: detector + mechanism + indicator, two components,
// one decay edge cut off at the half-life.
BuiltScenario build_apparatus(const ScenarioSpec& spec);

// Adds the observer: at t_look both rows begin the physiological morph over
// pi; the ready row becomes the discretized window continuum.
BuiltScenario attach_observer(BuiltScenario base, double t_look, double pi);

BuiltScenario build_cat_v1(const ScenarioSpec& spec, bool with_observer);
BuiltScenario build_cat_v2(const ScenarioSpec& spec, bool with_observer);
BuiltScenario build_natural_wakeup(const ScenarioSpec& spec, Ordering ordering);

// Dispatch on spec.version.
BuiltScenario build_scenario(const ScenarioSpec& spec);

}  // namespace nrules
