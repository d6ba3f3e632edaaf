#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nrules/rate_function.hpp"

namespace nrules {

// Role of the subsystem a label describes. observer_raw is the unknown
// pre-interaction state X; observer_brain covers the B states. Both occupy
// the same declared slot (an observer has exactly one label at a time).
enum class Role {
  detector,
  mechanism,
  internal_clock,
  indicator,
  cat,
  observer_brain,
  observer_raw,
};

// Declared subsystem positions. Components carry exactly one label per
// declared slot; slot order fixes label order everywhere (logs, label sets).
enum class Slot {
  detector,
  mechanism,
  internal_clock,
  indicator,
  cat,
  observer,
};

Slot slot_of(Role role);
std::string to_string(Role role);
std::string to_string(Slot slot);

// One subsystem's state symbol. Mechanisms and internal clocks carry a phase
// in [0,1]: 0 is the start configuration, 1 the completed one.
struct StateLabel {
  Role subsystem = Role::detector;
  std::string symbol;
  std::optional<double> phase;

  bool operator==(const StateLabel&) const = default;
};

StateLabel make_label(Role role, std::string symbol);
StateLabel make_phased_label(Role role, std::string symbol, double phase);

// Rendered form, e.g. "d0", "M(t0)", "M(t)", "M(tf)", "N(tff)", "B_C".
// Ready symbols get a trailing '*' when rendered through a Component.
std::string label_text(const StateLabel& label);

enum class Kind { realized, ready, phantom };

std::string to_string(Kind kind);

using ComponentId = std::uint32_t;

// A product of state labels carrying a square modulus. ready_symbols lists
// the symbols that are underlined ready states (the reduction basis).
struct Component {
  ComponentId id = 0;
  std::vector<StateLabel> labels;
  double modulus = 0.0;
  Kind kind = Kind::realized;
  double born_at = 0.0;
  std::vector<std::string> ready_symbols;

  bool has_ready_symbol(const std::string& symbol) const;
  const StateLabel* find_label(Slot slot) const;
  StateLabel* find_label(Slot slot);
};

// Labels of a component rendered in slot order, ready states marked with '*'.
std::vector<std::string> label_strings(const Component& component);
std::string label_set_text(const Component& component);

// One-way probability current between two components.
struct CurrentEdge {
  ComponentId from = 0;
  ComponentId to = 0;
  RateFunction rate;
  double active_until = 0.0;
  bool active = true;
};

struct SubsystemDecl {
  Slot slot = Slot::detector;
  std::vector<std::string> alphabet;
};

// The live set of components plus the current edges between them.
//
// The observation-window continuum is discretized as one live ready
// component plus an aggregate pool of superseded (phantom) mass:
// pool_count/pool_mass. prune bookkeeping keeps pruned_mass so conserved
// quantities remain reconstructible after phantoms are dropped.
struct Superposition {
  std::vector<SubsystemDecl> subsystems;
  std::vector<Component> components;
  std::vector<CurrentEdge> edges;
  double total_s = 0.0;
  std::uint64_t pool_count = 0;
  double pool_mass = 0.0;
  double pruned_mass = 0.0;
  ComponentId next_id = 1;

  Component* find(ComponentId id);
  const Component* find(ComponentId id) const;
  const SubsystemDecl* find_subsystem(Slot slot) const;

  // Sum of moduli over realized components (the mass not frozen in ready or
  // phantom branches).
  double realized_mass() const;
};

// Creates a component in `sup` with a fresh id and appends it. `marked_ready`
// names the underlined symbols; it must be nonempty exactly when kind is
// ready. Throws SchemaError / DomainError on malformed input.
Component& make_component(Superposition& sup, std::vector<StateLabel> labels, double modulus,
                          Kind kind, std::vector<std::string> marked_ready = {});

// Sum of component moduli, phantoms (and pooled window phantoms) included
// until pruned.
double total_modulus(const Superposition& sup);

struct Violation {
  std::string code;
  std::string message;
  ComponentId component = 0;  // 0 when not tied to one component
};

// Structural check of all model invariants plus the rule-4 edge direction.
// Violations are data, not faults.
std::vector<Violation> validate(const Superposition& sup);

}  // namespace nrules
