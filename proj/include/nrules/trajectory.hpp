#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nrules {

enum class EventKind {
  hit,
  phase_complete,
  phantomized,
  pruned,
  cutoff,
  experience,
  observation_start,
  observation_complete,
  warning,
};

std::string to_string(EventKind kind);

using PayloadValue = std::variant<std::int64_t, double, std::string, bool>;

// Key/value payload; serialization sorts keys, so insertion order is free.
using Payload = std::vector<std::pair<std::string, PayloadValue>>;

struct Event {
  double t = 0.0;
  EventKind kind = EventKind::hit;
  Payload payload;
  std::vector<std::string> labels_after;  // realized-side labels after the event
};

// Ordered, timestamped record of one trial.
struct Trajectory {
  std::string scenario;
  std::uint64_t seed = 0;
  double dt = 0.0;
  std::vector<Event> events;
  std::vector<std::string> terminal_labels;
  double terminal_time = 0.0;

  bool has_hit() const;
  const Event* first_of(EventKind kind) const;
};

// Canonical number formatting used by every serializer: %.12g, with the same
// bytes for the same double on every run.
std::string format_number(double value);

// JSON Lines, one object per event with keys (kind, labels_after, payload, t)
// emitted in sorted key order. Identical trajectories serialize to identical
// bytes.
std::string to_jsonl(const Trajectory& trajectory);

// Flattened per-event CSV rows: t,kind,labels_after,payload.
std::string to_csv(const Trajectory& trajectory);

}  // namespace nrules
