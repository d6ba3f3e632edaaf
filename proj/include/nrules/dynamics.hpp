#pragma once

#include <optional>
#include <vector>

#include "nrules/model.hpp"
#include "nrules/rng.hpp"

namespace nrules {

class TrialRng;

// A classical process running on a subsystem's phase: the mechanism M after a
// hit, the internal clock N, and (handled by the engine) the physiological
// interaction window. Ready components share the internal clock's phase (the
// clock is an unentangled classical factor); the mechanism advances only on
// realized components.
struct ClassicalProcess {
  Slot slot = Slot::mechanism;
  double start = 0.0;
  double duration = 0.0;
  bool running = false;
  bool completed = false;
  bool applies_to_ready = false;

  double completion_time() const { return start + duration; }
};

// Stochastic choice of a ready component.
struct HitEvent {
  double time = 0.0;
  ComponentId chosen = 0;
  double rate_at_hit = 0.0;  // instantaneous (sum J_n)/s at the hit
};

struct Transfer {
  ComponentId to = 0;
  double amount = 0.0;
};

struct StepResult {
  std::vector<Transfer> transfers;  // mass moved into ready components
  bool clamped = false;             // a transfer hit the source's remaining mass
  std::vector<Slot> completions;    // classical processes that reached phase 1
};

// One integration step: moves integral(J dt) along each active edge (midpoint
// rule, clipped to the edge window), advances classical phases, deactivates
// edges past their cutoff. Phantom moduli and labels are never touched.
StepResult advance(Superposition& sup, double t, double dt,
                   std::vector<ClassicalProcess>& processes);

// (sum of J_n into ready components with positive net incoming current) / s.
// Throws DomainError when total_s is zero.
double hit_rate(const Superposition& sup, double t);

// Per-step stochastic choice. The per-step probability is the prospective
// transferred mass divided by the realized (still unfrozen) mass, which makes
// the unconditional hit density equal J(t)/s: the accumulated hit probability
// equals the accumulated current transfer. Call before advance() for the same
// step. Enforces hit_rate * dt < 0.1; consumes exactly one uniform, plus one
// more only when several ready components receive current.
std::optional<HitEvent> sample_hit(const Superposition& sup, double t, double dt, TrialRng& rng);

// nRule (2): adds a zero-modulus ready component copying `source` except for
// new_labels, and an edge carrying current from source to it. All new states
// must be marked ready.
Component& spawn_ready(Superposition& sup, ComponentId source, std::vector<StateLabel> new_labels,
                       std::vector<std::string> marked_new, RateFunction rate);

// nRule (3): realizes the chosen component's ready states and removes every
// other component (their moduli drop to zero). total_s becomes the chosen
// modulus; edges are cleared.
void reduce(Superposition& sup, const HitEvent& hit);

// Ready components whose every feeding edge has expired (not merely not yet
// started) become phantoms with frozen moduli. Returns their ids.
std::vector<ComponentId> phantomize(Superposition& sup, double t);

// Footnote-2 window discretization: freezes the live window component's mass
// into the phantom pool and restarts it at zero modulus with born_at = t.
// Returns the frozen mass.
double supersede_window_component(Superposition& sup, ComponentId live, double t);

struct PruneResult {
  std::vector<ComponentId> removed;
  std::uint64_t pool_dropped = 0;
  double mass_dropped = 0.0;
};

// Drops phantom components and the window pool; total_s is recomputed over
// the survivors.
PruneResult prune_phantoms(Superposition& sup);

}  // namespace nrules
