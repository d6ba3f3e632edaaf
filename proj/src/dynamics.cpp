#include "nrules/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "nrules/errors.hpp"

namespace nrules {

namespace {

// Midpoint-rule mass moved by one edge over [t, t+dt], clipped to the edge's
// active window.
double step_transfer(const CurrentEdge& edge, double t, double dt) {
  if (!edge.active) return 0.0;
  const double lo = std::max(t, edge.rate.start);
  const double hi = std::min({t + dt, edge.rate.cutoff, edge.active_until});
  if (hi <= lo) return 0.0;
  const double mid = 0.5 * (lo + hi);
  return edge.rate(mid) * (hi - lo);
}

}  // namespace

StepResult advance(Superposition& sup, double t, double dt,
                   std::vector<ClassicalProcess>& processes) {
  if (dt <= 0.0) throw DomainError("advance needs dt > 0");
  StepResult result;

  for (auto& edge : sup.edges) {
    if (!edge.active) continue;
    const double amount = step_transfer(edge, t, dt);
    if (amount > 0.0) {
      Component* from = sup.find(edge.from);
      Component* to = sup.find(edge.to);
      if (from == nullptr || to == nullptr) throw RuleViolationError("edge endpoint missing");
      if (from->kind != Kind::realized) {
        throw RuleViolationError("current leaving a non-realized component (rule 4)");
      }
      double moved = amount;
      if (moved > from->modulus) {  // tolerance accumulation only
        moved = from->modulus;
        result.clamped = true;
      }
      from->modulus -= moved;
      to->modulus += moved;
      result.transfers.push_back({edge.to, moved});
    }
    if (t + dt >= std::min(edge.rate.cutoff, edge.active_until)) edge.active = false;
  }

  const double t_next = t + dt;
  for (auto& process : processes) {
    if (!process.running || process.completed) continue;
    const double phase =
        std::clamp((t_next - process.start) / process.duration, 0.0, 1.0);
    for (auto& component : sup.components) {
      if (component.kind == Kind::phantom) continue;
      if (component.kind == Kind::ready && !process.applies_to_ready) continue;
      if (StateLabel* label = component.find_label(process.slot)) label->phase = phase;
    }
    if (t_next >= process.completion_time()) {
      process.completed = true;
      process.running = false;
      result.completions.push_back(process.slot);
    }
  }
  return result;
}

double hit_rate(const Superposition& sup, double t) {
  const double s = sup.total_s;
  if (s <= 0.0) throw DomainError("hit rate undefined for zero total square modulus");

  double sum = 0.0;
  for (const auto& component : sup.components) {
    if (component.kind != Kind::ready) continue;
    double current = 0.0;
    for (const auto& edge : sup.edges) {
      if (edge.to != component.id || !edge.active) continue;
      if (t >= edge.rate.start && t < std::min(edge.rate.cutoff, edge.active_until)) {
        current += edge.rate(t);
      }
    }
    if (current > 0.0) sum += current;
  }
  return sum / s;
}

std::optional<HitEvent> sample_hit(const Superposition& sup, double t, double dt, TrialRng& rng) {
  if (hit_rate(sup, t) * dt >= 0.1) {
    throw StepSizeError("hit_rate*dt >= 0.1; reduce dt");
  }

  // Prospective per-component transfers for this step.
  struct Candidate {
    ComponentId id;
    double mass;
    double t_mid;
  };
  std::vector<Candidate> candidates;
  double total_packet = 0.0;
  double window_hi = t + dt;
  for (const auto& edge : sup.edges) {
    const double amount = step_transfer(edge, t, dt);
    if (amount <= 0.0) continue;
    const Component* to = sup.find(edge.to);
    if (to == nullptr || to->kind != Kind::ready) continue;
    const double hi = std::min({t + dt, edge.rate.cutoff, edge.active_until});
    window_hi = std::min(window_hi, hi);
    auto it = std::find_if(candidates.begin(), candidates.end(),
                           [&](const Candidate& c) { return c.id == edge.to; });
    if (it == candidates.end()) {
      candidates.push_back({edge.to, amount, 0.0});
    } else {
      it->mass += amount;
    }
    total_packet += amount;
  }

  const double u = rng.uniform();  // always consumed: one draw per step
  if (candidates.empty() || total_packet <= 0.0) return std::nullopt;

  // Conditional per-step probability = packet / surviving (realized) mass at
  // step start. Telescoping over steps makes the unconditional hit density
  // J(t)/s, so the total hit probability equals the total transferred current.
  const double survivor = sup.realized_mass();
  if (survivor <= 0.0) return std::nullopt;
  const double p = total_packet / survivor;
  if (u >= p) return std::nullopt;

  ComponentId chosen = candidates.front().id;
  if (candidates.size() > 1) {
    // Among simultaneous ready receivers, draw proportional to each J_n.
    double pick = rng.uniform() * total_packet;
    for (const auto& candidate : candidates) {
      if (pick < candidate.mass) {
        chosen = candidate.id;
        break;
      }
      pick -= candidate.mass;
      chosen = candidate.id;
    }
  }

  HitEvent hit;
  hit.time = 0.5 * (t + window_hi);
  hit.chosen = chosen;
  const double conserved = total_modulus(sup) + sup.pruned_mass;
  hit.rate_at_hit = conserved > 0.0 ? hit_rate(sup, hit.time) * sup.total_s / conserved : 0.0;
  return hit;
}

Component& spawn_ready(Superposition& sup, ComponentId source, std::vector<StateLabel> new_labels,
                       std::vector<std::string> marked_new, RateFunction rate) {
  Component* origin = sup.find(source);
  if (origin == nullptr) throw SchemaError("spawn source missing");
  if (origin->kind != Kind::realized) {
    throw RuleViolationError("only realized components can initiate interactions (rule 4)");
  }
  if (marked_new.empty()) {
    throw SchemaError("all new states of a discontinuous interaction are ready (rule 2)");
  }
  for (const auto& label : new_labels) {
    const bool marked = std::find(marked_new.begin(), marked_new.end(), label.symbol) !=
                        marked_new.end();
    if (!marked) {
      throw SchemaError("new state '" + label.symbol + "' not marked ready (rule 2)");
    }
  }

  std::vector<StateLabel> labels = origin->labels;
  for (const auto& incoming : new_labels) {
    bool replaced = false;
    for (auto& label : labels) {
      if (slot_of(label.subsystem) == slot_of(incoming.subsystem)) {
        label = incoming;
        replaced = true;
        break;
      }
    }
    if (!replaced) throw SchemaError("new label for undeclared subsystem");
  }

  Component& spawned = make_component(sup, std::move(labels), 0.0, Kind::ready,
                                      std::move(marked_new));
  spawned.born_at = rate.start;
  sup.edges.push_back({source, spawned.id, rate, rate.cutoff, true});
  return spawned;
}

void reduce(Superposition& sup, const HitEvent& hit) {
  Component* chosen = sup.find(hit.chosen);
  if (chosen == nullptr || chosen->kind != Kind::ready) {
    throw RuleViolationError("reduction target must be a ready component");
  }
  chosen->kind = Kind::realized;
  chosen->ready_symbols.clear();

  const ComponentId keep = chosen->id;
  std::erase_if(sup.components, [&](const Component& component) { return component.id != keep; });
  sup.edges.clear();
  sup.pool_count = 0;
  sup.pool_mass = 0.0;
  sup.total_s = sup.components.front().modulus;
}

std::vector<ComponentId> phantomize(Superposition& sup, double t) {
  std::vector<ComponentId> changed;
  for (auto& component : sup.components) {
    if (component.kind != Kind::ready) continue;
    bool may_still_receive = false;
    for (const auto& edge : sup.edges) {
      if (edge.to != component.id) continue;
      // An edge that has not started yet still counts as a future source; only
      // expired or deactivated edges are dead.
      const double end = std::min(edge.rate.cutoff, edge.active_until);
      if (edge.active && t < end) {
        may_still_receive = true;
        break;
      }
    }
    if (!may_still_receive) {
      component.kind = Kind::phantom;
      changed.push_back(component.id);
    }
  }
  return changed;
}

double supersede_window_component(Superposition& sup, ComponentId live, double t) {
  Component* component = sup.find(live);
  if (component == nullptr || component->kind != Kind::ready) {
    throw RuleViolationError("window rotation expects a live ready component");
  }
  const double frozen = component->modulus;
  sup.pool_mass += frozen;
  sup.pool_count += 1;
  component->modulus = 0.0;
  component->born_at = t;
  return frozen;
}

PruneResult prune_phantoms(Superposition& sup) {
  PruneResult result;
  for (const auto& component : sup.components) {
    if (component.kind == Kind::phantom) {
      result.removed.push_back(component.id);
      result.mass_dropped += component.modulus;
    }
  }
  result.pool_dropped = sup.pool_count;
  result.mass_dropped += sup.pool_mass;
  if (result.removed.empty() && result.pool_dropped == 0) return result;

  std::erase_if(sup.components,
                [](const Component& component) { return component.kind == Kind::phantom; });
  std::erase_if(sup.edges, [&](const CurrentEdge& edge) {
    return sup.find(edge.from) == nullptr || sup.find(edge.to) == nullptr;
  });
  sup.pool_count = 0;
  sup.pool_mass = 0.0;
  sup.pruned_mass += result.mass_dropped;

  double total = 0.0;
  for (const auto& component : sup.components) total += component.modulus;
  sup.total_s = total;
  return result;
}

}  // namespace nrules
