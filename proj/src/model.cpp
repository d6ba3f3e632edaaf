#include "nrules/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "nrules/errors.hpp"

namespace nrules {

Slot slot_of(Role role) {
  switch (role) {
    case Role::detector: return Slot::detector;
    case Role::mechanism: return Slot::mechanism;
    case Role::internal_clock: return Slot::internal_clock;
    case Role::indicator: return Slot::indicator;
    case Role::cat: return Slot::cat;
    case Role::observer_brain:
    case Role::observer_raw: return Slot::observer;
  }
  return Slot::detector;
}

std::string to_string(Role role) {
  switch (role) {
    case Role::detector: return "detector";
    case Role::mechanism: return "mechanism";
    case Role::internal_clock: return "internal-clock";
    case Role::indicator: return "indicator";
    case Role::cat: return "cat";
    case Role::observer_brain: return "observer-brain";
    case Role::observer_raw: return "observer-raw";
  }
  return "?";
}

std::string to_string(Slot slot) {
  switch (slot) {
    case Slot::detector: return "detector";
    case Slot::mechanism: return "mechanism";
    case Slot::internal_clock: return "internal-clock";
    case Slot::indicator: return "indicator";
    case Slot::cat: return "cat";
    case Slot::observer: return "observer";
  }
  return "?";
}

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::realized: return "realized";
    case Kind::ready: return "ready";
    case Kind::phantom: return "phantom";
  }
  return "?";
}

StateLabel make_label(Role role, std::string symbol) {
  return StateLabel{role, std::move(symbol), std::nullopt};
}

StateLabel make_phased_label(Role role, std::string symbol, double phase) {
  return StateLabel{role, std::move(symbol), phase};
}

std::string label_text(const StateLabel& label) {
  if (!label.phase.has_value()) return label.symbol;
  const double p = *label.phase;
  std::string stage;
  if (p <= 0.0) {
    stage = "t0";
  } else if (p >= 1.0) {
    stage = label.subsystem == Role::internal_clock ? "tff" : "tf";
  } else {
    stage = "t";
  }
  return label.symbol + "(" + stage + ")";
}

bool Component::has_ready_symbol(const std::string& symbol) const {
  return std::find(ready_symbols.begin(), ready_symbols.end(), symbol) != ready_symbols.end();
}

const StateLabel* Component::find_label(Slot slot) const {
  for (const auto& label : labels) {
    if (slot_of(label.subsystem) == slot) return &label;
  }
  return nullptr;
}

StateLabel* Component::find_label(Slot slot) {
  for (auto& label : labels) {
    if (slot_of(label.subsystem) == slot) return &label;
  }
  return nullptr;
}

std::vector<std::string> label_strings(const Component& component) {
  std::vector<std::string> out;
  out.reserve(component.labels.size());
  for (const auto& label : component.labels) {
    std::string text = label_text(label);
    if (component.has_ready_symbol(label.symbol)) text += "*";
    out.push_back(std::move(text));
  }
  return out;
}

std::string label_set_text(const Component& component) {
  std::string out;
  for (const auto& piece : label_strings(component)) {
    if (!out.empty()) out += " ";
    out += piece;
  }
  return out;
}

Component* Superposition::find(ComponentId id) {
  for (auto& component : components) {
    if (component.id == id) return &component;
  }
  return nullptr;
}

const Component* Superposition::find(ComponentId id) const {
  for (const auto& component : components) {
    if (component.id == id) return &component;
  }
  return nullptr;
}

const SubsystemDecl* Superposition::find_subsystem(Slot slot) const {
  for (const auto& subsystem : subsystems) {
    if (subsystem.slot == slot) return &subsystem;
  }
  return nullptr;
}

double Superposition::realized_mass() const {
  double mass = 0.0;
  for (const auto& component : components) {
    if (component.kind == Kind::realized) mass += component.modulus;
  }
  return mass;
}

namespace {

void check_labels_against_declaration(const Superposition& sup,
                                      const std::vector<StateLabel>& labels) {
  if (labels.size() != sup.subsystems.size()) {
    throw SchemaError("component must carry exactly one label per declared subsystem");
  }
  std::set<Slot> seen;
  for (const auto& label : labels) {
    const Slot slot = slot_of(label.subsystem);
    if (!seen.insert(slot).second) {
      throw SchemaError("duplicate label for subsystem " + to_string(slot));
    }
    const SubsystemDecl* decl = sup.find_subsystem(slot);
    if (decl == nullptr) {
      throw SchemaError("label for undeclared subsystem " + to_string(slot));
    }
    if (std::find(decl->alphabet.begin(), decl->alphabet.end(), label.symbol) ==
        decl->alphabet.end()) {
      throw SchemaError("symbol '" + label.symbol + "' not in alphabet of " + to_string(slot));
    }
    const bool phased = slot == Slot::mechanism || slot == Slot::internal_clock;
    if (phased != label.phase.has_value()) {
      throw SchemaError("phase must be present exactly on mechanism/internal-clock labels");
    }
    if (label.phase.has_value() && (*label.phase < 0.0 || *label.phase > 1.0)) {
      throw DomainError("phase outside [0,1]");
    }
  }
}

}  // namespace

Component& make_component(Superposition& sup, std::vector<StateLabel> labels, double modulus,
                          Kind kind, std::vector<std::string> marked_ready) {
  if (modulus < 0.0) throw DomainError("negative square modulus");
  check_labels_against_declaration(sup, labels);
  for (const auto& symbol : marked_ready) {
    const bool present = std::any_of(labels.begin(), labels.end(), [&](const StateLabel& label) {
      return label.symbol == symbol;
    });
    if (!present) throw SchemaError("ready mark '" + symbol + "' names no label");
  }
  if (kind == Kind::ready && marked_ready.empty()) {
    throw SchemaError("ready component needs at least one marked ready state");
  }
  if (kind == Kind::realized && !marked_ready.empty()) {
    throw SchemaError("realized component cannot carry ready marks");
  }

  Component component;
  component.id = sup.next_id++;
  component.labels = std::move(labels);
  component.modulus = modulus;
  component.kind = kind;
  component.ready_symbols = std::move(marked_ready);
  sup.components.push_back(std::move(component));
  return sup.components.back();
}

double total_modulus(const Superposition& sup) {
  double total = sup.pool_mass;
  for (const auto& component : sup.components) total += component.modulus;
  return total;
}

std::vector<Violation> validate(const Superposition& sup) {
  std::vector<Violation> violations;
  std::set<ComponentId> ids;

  for (const auto& component : sup.components) {
    if (!ids.insert(component.id).second) {
      violations.push_back({"duplicate-id", "component id repeats", component.id});
    }
    if (component.modulus < 0.0) {
      violations.push_back({"negative-modulus", "square modulus below zero", component.id});
    }
    const bool marked = !component.ready_symbols.empty();
    if (component.kind == Kind::ready && !marked) {
      violations.push_back({"ready-unmarked", "ready component without ready states", component.id});
    }
    if (component.kind == Kind::realized && marked) {
      violations.push_back({"realized-marked", "realized component carries ready states", component.id});
    }

    // one label per declared subsystem, symbols from the alphabet
    if (component.labels.size() != sup.subsystems.size()) {
      violations.push_back({"label-count", "label count differs from declared subsystems", component.id});
    }
    std::set<Slot> seen;
    for (const auto& label : component.labels) {
      const Slot slot = slot_of(label.subsystem);
      if (!seen.insert(slot).second) {
        violations.push_back({"duplicate-subsystem", "two labels share a subsystem", component.id});
      }
      const SubsystemDecl* decl = sup.find_subsystem(slot);
      if (decl == nullptr) {
        violations.push_back({"undeclared-subsystem", "label for undeclared subsystem", component.id});
        continue;
      }
      if (std::find(decl->alphabet.begin(), decl->alphabet.end(), label.symbol) ==
          decl->alphabet.end()) {
        violations.push_back({"unknown-symbol", "symbol '" + label.symbol + "' not in alphabet",
                              component.id});
      }
      const bool phased = slot == Slot::mechanism || slot == Slot::internal_clock;
      if (phased != label.phase.has_value()) {
        violations.push_back({"phase-presence", "phase present on wrong subsystem", component.id});
      } else if (label.phase.has_value() && (*label.phase < 0.0 || *label.phase > 1.0)) {
        violations.push_back({"phase-range", "phase outside [0,1]", component.id});
      }
    }
  }

  for (const auto& edge : sup.edges) {
    const Component* from = sup.find(edge.from);
    const Component* to = sup.find(edge.to);
    if (from == nullptr || to == nullptr) {
      violations.push_back({"dangling-edge", "edge endpoint missing", 0});
      continue;
    }
    if (edge.rate.param < 0.0) {
      violations.push_back({"negative-rate", "edge rate function is negative", 0});
    }
    // nRule (4): ready (and phantom) components are current sinks.
    if (from->kind != Kind::realized) {
      violations.push_back({"ready-emits-current",
                            "ready component emits current (rule-4 sink property)", from->id});
    }
  }

  const double sum = total_modulus(sup);
  const double tol = 1e-9 * std::max(1.0, std::abs(sup.total_s));
  if (std::abs(sum - sup.total_s) > tol) {
    violations.push_back({"mass-accounting",
                          "sum of moduli differs from total_s beyond tolerance", 0});
  }
  return violations;
}

}  // namespace nrules
