#include "nrules/experience.hpp"

#include <algorithm>
#include <map>

namespace nrules {

std::string to_string(Agent agent) { return agent == Agent::cat ? "cat" : "observer"; }

std::vector<ExperienceRecord> extract_experiences(const Trajectory& trajectory) {
  std::vector<ExperienceRecord> records;
  for (const auto& event : trajectory.events) {
    if (event.kind != EventKind::experience) continue;
    ExperienceRecord record;
    record.time = event.t;
    for (const auto& [key, value] : event.payload) {
      if (key == "agent") {
        record.agent = std::get<std::string>(value) == "cat" ? Agent::cat : Agent::observer;
      } else if (key == "state") {
        record.state = std::get<std::string>(value);
      } else if (key == "cause") {
        record.cause = std::get<std::int64_t>(value);
      }
    }
    records.push_back(std::move(record));
  }
  return records;
}

namespace {

// Allowed per-agent state chains; an agent's observed sequence must be an
// order-preserving subsequence of its chain.
std::vector<std::string> allowed_chain(Agent agent, Version version) {
  switch (version) {
    case Version::apparatus:
      return {};
    case Version::apparatus_observer:
      return agent == Agent::observer ? std::vector<std::string>{"B0:I0", "B1:I1"}
                                      : std::vector<std::string>{};
    case Version::cat1:
      return agent == Agent::cat ? std::vector<std::string>{"C", "U"}
                                 : std::vector<std::string>{};
    case Version::cat1_observer:
      return agent == Agent::cat ? std::vector<std::string>{"C", "U"}
                                 : std::vector<std::string>{"B_C", "B_U"};
    case Version::cat2:
      return agent == Agent::cat ? std::vector<std::string>{"U", "C"}
                                 : std::vector<std::string>{};
    case Version::cat2_observer:
      return agent == Agent::cat ? std::vector<std::string>{"U", "C"}
                                 : std::vector<std::string>{"B_U", "B_C"};
    case Version::cat2_natural:
      return agent == Agent::cat ? std::vector<std::string>{"U", "C"}
                                 : std::vector<std::string>{};
  }
  return {};
}

}  // namespace

ParadoxCheck check_no_paradox(const std::vector<ExperienceRecord>& records, Version version) {
  std::map<Agent, std::vector<const ExperienceRecord*>> by_agent;
  for (const auto& record : records) by_agent[record.agent].push_back(&record);

  for (const auto& [agent, sequence] : by_agent) {
    const std::vector<std::string> chain = allowed_chain(agent, version);
    std::size_t chain_pos = 0;

    for (std::size_t i = 0; i < sequence.size(); ++i) {
      const ExperienceRecord& record = *sequence[i];
      if (i > 0) {
        const ExperienceRecord& previous = *sequence[i - 1];
        if (record.time < previous.time) {
          return {false, to_string(agent) + " timeline runs backwards"};
        }
        if (record.time == previous.time && record.state != previous.state) {
          return {false, to_string(agent) + " holds two states at t=" +
                             format_number(record.time) + " (" + previous.state + ", " +
                             record.state + ")"};
        }
        if (record.state == previous.state) continue;  // repeat, not a transition
      }

      if (chain.empty()) {
        return {false, to_string(agent) + " has no experience states in this scenario"};
      }
      auto it = std::find(chain.begin() + static_cast<std::ptrdiff_t>(chain_pos), chain.end(),
                          record.state);
      if (it == chain.end()) {
        const bool known =
            std::find(chain.begin(), chain.end(), record.state) != chain.end();
        return {false, to_string(agent) + (known ? " transitions out of order to '"
                                                 : " reaches unknown state '") +
                           record.state + "'"};
      }
      chain_pos = static_cast<std::size_t>(it - chain.begin()) + 1;
    }
  }
  return {true, ""};
}

}  // namespace nrules
