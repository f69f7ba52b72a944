#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "navecon/logs/record.hpp"

// Episode log file format: UTF-8, one record per line, each line a flat JSON
// object with exactly the EpisodeRecord fields:
//
//   episode_id, scenario_id, policy_id, seed, termination, duration_s,
//   distance_m, collision_impulse_ns, mean_power_w, max_power_w, energy_wh
//
// The writer emits keys in that order with shortest round-trip numbers, so a
// canonical file survives read -> write byte-identically.

namespace navecon::logs {

struct ReadOptions {
  // strict rejects unknown keys; lenient ignores them through warn()
  bool strict = true;
  // enables the "Timeout implies duration >= timeout" check
  std::optional<double> scenario_timeout_s;
  // sink for lenient-mode warnings; defaults to stderr
  std::function<void(const std::string&)> warn;
};

// Parse and invariant-check a log, preserving record order. Malformed lines
// raise ValidationError naming the 1-based line number and offending field;
// a missing or unreadable file raises IoError.
std::vector<EpisodeRecord> read_log(const std::filesystem::path& path,
                                    const ReadOptions& options = {});
std::vector<EpisodeRecord> read_log(std::istream& in, const ReadOptions& options = {});

// Canonical one-line serialization (no trailing newline).
std::string to_line(const EpisodeRecord& record);

void write_log(std::ostream& out, std::span<const EpisodeRecord> records);
void write_log(const std::filesystem::path& path, std::span<const EpisodeRecord> records);

}  // namespace navecon::logs
