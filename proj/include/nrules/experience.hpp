#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nrules/scenario.hpp"
#include "nrules/trajectory.hpp"

namespace nrules {

enum class Agent { cat, observer };

std::string to_string(Agent agent);

// One conscious-state change. Indicator awareness is a compound token
// ("B0:I0", "B1:I1"); cat observation uses "B_C"/"B_U"; the cat itself uses
// "C"/"U". The unknown pre-interaction state X carries no experience.
struct ExperienceRecord {
  double time = 0.0;
  Agent agent = Agent::cat;
  std::string state;
  std::int64_t cause = -1;  // index of the causing event, -1 for the initial state
};

// Per-agent timelines, read off the trajectory's experience events (which the
// engine emits only for realized-component label changes).
std::vector<ExperienceRecord> extract_experiences(const Trajectory& trajectory);

struct ParadoxCheck {
  bool ok = true;
  std::string message;
};

// ok iff no agent shows two distinct states at one timestamp and each agent's
// sequence follows the scenario's allowed transition order (C->U for cat1,
// U->C for cat2, B_C->B_U, B_U->B_C, B0:I0->B1:I1).
ParadoxCheck check_no_paradox(const std::vector<ExperienceRecord>& records, Version version);

}  // namespace nrules
