#include "nrules/scenario_file.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "nrules/errors.hpp"

namespace nrules {

namespace {

constexpr double kLn2 = 0.6931471805599453;

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

double parse_number(const std::string& value, const std::string& key, int line,
                    bool require_positive) {
  try {
    std::size_t used = 0;
    const double parsed = std::stod(value, &used);
    if (used != value.size()) throw ParseError(key + " is not a number: '" + value + "'", line);
    if (!std::isfinite(parsed) || (require_positive ? !(parsed > 0.0) : parsed < 0.0)) {
      throw ParseError(key + (require_positive ? " must be a positive number"
                                               : " must be a non-negative number"),
                       line);
    }
    return parsed;
  } catch (const std::invalid_argument&) {
    throw ParseError(key + " is not a number: '" + value + "'", line);
  } catch (const std::out_of_range&) {
    throw ParseError(key + " is out of range", line);
  }
}

double parse_positive_number(const std::string& value, const std::string& key, int line) {
  return parse_number(value, key, line, /*require_positive=*/true);
}

}  // namespace

ScenarioSpec parse_scenario_text(const std::string& text, const std::string& name) {
  std::map<std::string, std::pair<std::string, int>> entries;  // key -> (value, line)
  std::istringstream stream(text);
  std::string raw;
  int line = 0;
  while (std::getline(stream, raw)) {
    ++line;
    const auto comment = raw.find('#');
    if (comment != std::string::npos) raw = raw.substr(0, comment);
    const std::string stripped = trim(raw);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected 'key = value', got '" + stripped + "'", line);
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty()) throw ParseError("empty key or value", line);
    if (entries.count(key) != 0) throw ParseError("duplicate key '" + key + "'", line);

    static const std::map<std::string, int> known = {
        {"version", 0},        {"lambda", 0},       {"t_half", 0}, {"mech_duration", 0},
        {"internal_duration", 0}, {"obs_look_time", 0}, {"obs_pi", 0}, {"ordering", 0}};
    if (known.count(key) == 0) throw ParseError("unknown key '" + key + "'", line);
    entries[key] = {value, line};
  }

  auto lookup = [&](const std::string& key) -> std::optional<std::pair<std::string, int>> {
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    return it->second;
  };

  const auto version_entry = lookup("version");
  if (!version_entry) throw ParseError("missing required key 'version'", 0);
  const auto version = parse_version(version_entry->first);
  if (!version) {
    throw ParseError("unknown version '" + version_entry->first + "'", version_entry->second);
  }

  ScenarioSpec spec = builtin_spec(*version);
  spec.name = name;

  const auto lambda_entry = lookup("lambda");
  const auto t_half_entry = lookup("t_half");
  if (!lambda_entry && !t_half_entry) {
    throw ParseError("one of lambda or t_half is required", 0);
  }
  if (lambda_entry) {
    spec.lambda = parse_positive_number(lambda_entry->first, "lambda", lambda_entry->second);
    spec.t_half = kLn2 / spec.lambda;
  }
  if (t_half_entry) {
    const double t_half =
        parse_positive_number(t_half_entry->first, "t_half", t_half_entry->second);
    if (lambda_entry) {
      // Both are allowed only when they agree: t_half = ln2/lambda.
      if (std::abs(t_half - spec.t_half) > 1e-9 * spec.t_half) {
        throw ParseError("lambda and t_half conflict (t_half must equal ln2/lambda)",
                         t_half_entry->second);
      }
    } else {
      spec.t_half = t_half;
      spec.lambda = kLn2 / t_half;
    }
  }
  // Keep the derived pair consistent to machine precision.
  spec.t_half = kLn2 / spec.lambda;

  if (const auto entry = lookup("mech_duration")) {
    spec.mech_duration = parse_positive_number(entry->first, "mech_duration", entry->second);
  }
  if (const auto entry = lookup("internal_duration")) {
    spec.internal_duration =
        parse_positive_number(entry->first, "internal_duration", entry->second);
  }

  const auto look_entry = lookup("obs_look_time");
  const auto pi_entry = lookup("obs_pi");
  if (look_entry.has_value() != pi_entry.has_value()) {
    const auto& present = look_entry ? *look_entry : *pi_entry;
    throw ParseError("obs_look_time and obs_pi must be given together", present.second);
  }
  if (look_entry) {
    spec.obs_look_time =
        parse_number(look_entry->first, "obs_look_time", look_entry->second,
                     /*require_positive=*/false);
    spec.obs_pi = parse_positive_number(pi_entry->first, "obs_pi", pi_entry->second);
  }
  if ((look_entry || pi_entry) && !spec.has_observer()) {
    throw ParseError("observation keys given for a scenario without an observer",
                     (look_entry ? *look_entry : *pi_entry).second);
  }

  if (const auto entry = lookup("ordering")) {
    if (*version != Version::cat2_natural) {
      throw ParseError("ordering applies only to cat2-natural", entry->second);
    }
    const auto ordering = parse_ordering(entry->first);
    if (!ordering) throw ParseError("unknown ordering '" + entry->first + "'", entry->second);
    spec.ordering = ordering;
  } else if (*version == Version::cat2_natural) {
    throw ParseError("cat2-natural requires an ordering", 0);
  }

  try {
    validate_spec(spec);
  } catch (const SchemaError& error) {
    throw ParseError(error.what(), 0);
  }
  return spec;
}

ScenarioSpec parse_scenario_file(const std::string& path) {
  std::ifstream input(path);
  if (!input) throw IoError("cannot read scenario file '" + path + "'");
  std::ostringstream content;
  content << input.rdbuf();
  return parse_scenario_text(content.str(), std::filesystem::path(path).stem().string());
}

}  // namespace nrules
