#pragma once

#include <string>

#include "nrules/scenario.hpp"

namespace nrules {

// Parses the key = value scenario format:
//
//   version        (required: apparatus | apparatus+observer | cat1 |
//                   cat1+observer | cat2 | cat2+observer | cat2-natural)
//   lambda | t_half (at least one; if both, they must satisfy
//                   t_half = ln2/lambda to 1e-9 relative)
//   mech_duration
//   internal_duration
//   obs_look_time, obs_pi   (both or neither)
//   ordering       (required for cat2-natural: external-first | internal-first)
//
// '#' starts a comment; blank lines are ignored; unknown keys are rejected
// with their line number.
ScenarioSpec parse_scenario_text(const std::string& text, const std::string& name);

// Reads and parses a scenario file. Throws IoError when unreadable,
// ParseError (with line) on schema violations.
ScenarioSpec parse_scenario_file(const std::string& path);

}  // namespace nrules
