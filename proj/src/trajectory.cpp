#include "nrules/trajectory.hpp"

#include <algorithm>
#include <cstdio>

namespace nrules {

std::string to_string(EventKind kind) {
  switch (kind) {
    case EventKind::hit: return "hit";
    case EventKind::phase_complete: return "phase-complete";
    case EventKind::phantomized: return "phantomized";
    case EventKind::pruned: return "pruned";
    case EventKind::cutoff: return "cutoff";
    case EventKind::experience: return "experience";
    case EventKind::observation_start: return "observation-start";
    case EventKind::observation_complete: return "observation-complete";
    case EventKind::warning: return "warning";
  }
  return "?";
}

bool Trajectory::has_hit() const { return first_of(EventKind::hit) != nullptr; }

const Event* Trajectory::first_of(EventKind kind) const {
  for (const auto& event : events) {
    if (event.kind == kind) return &event;
  }
  return nullptr;
}

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

namespace {

std::string escape_json(const std::string& text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string payload_value_json(const PayloadValue& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&value)) return format_number(*d);
  if (const auto* s = std::get_if<std::string>(&value)) return "\"" + escape_json(*s) + "\"";
  return std::get<bool>(value) ? "true" : "false";
}

std::string payload_value_text(const PayloadValue& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&value)) return format_number(*d);
  if (const auto* s = std::get_if<std::string>(&value)) return *s;
  return std::get<bool>(value) ? "true" : "false";
}

Payload sorted_payload(const Payload& payload) {
  Payload sorted = payload;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return sorted;
}

}  // namespace

std::string to_jsonl(const Trajectory& trajectory) {
  std::string out;
  for (const auto& event : trajectory.events) {
    out += "{\"kind\":\"" + to_string(event.kind) + "\",\"labels_after\":[";
    for (std::size_t i = 0; i < event.labels_after.size(); ++i) {
      if (i > 0) out += ",";
      out += "\"" + escape_json(event.labels_after[i]) + "\"";
    }
    out += "],\"payload\":{";
    const Payload payload = sorted_payload(event.payload);
    for (std::size_t i = 0; i < payload.size(); ++i) {
      if (i > 0) out += ",";
      out += "\"" + escape_json(payload[i].first) + "\":" + payload_value_json(payload[i].second);
    }
    out += "},\"t\":" + format_number(event.t) + "}\n";
  }
  return out;
}

std::string to_csv(const Trajectory& trajectory) {
  std::string out = "t,kind,labels_after,payload\n";
  for (const auto& event : trajectory.events) {
    out += format_number(event.t) + "," + to_string(event.kind) + ",";
    std::string labels;
    for (std::size_t i = 0; i < event.labels_after.size(); ++i) {
      if (i > 0) labels += " ";
      labels += event.labels_after[i];
    }
    out += labels + ",";
    const Payload payload = sorted_payload(event.payload);
    std::string flat;
    for (std::size_t i = 0; i < payload.size(); ++i) {
      if (i > 0) flat += " ";
      flat += payload[i].first + "=" + payload_value_text(payload[i].second);
    }
    out += flat + "\n";
  }
  return out;
}

}  // namespace nrules
