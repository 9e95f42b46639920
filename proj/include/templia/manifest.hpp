#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace templia {

inline constexpr const char* kToolVersion = "0.1.0";

/// Everything needed to reproduce a run. Serialized as UTF-8 `key=value` lines
/// in sorted key order, outputs listed as output.0, output.1, ...
struct RunManifest {
  std::string tool_version = kToolVersion;
  std::string subcommand;
  std::map<std::string, std::string> parameters;
  std::vector<std::string> outputs;
  double wall_clock_seconds = 0.0;

  void set(const std::string& key, const std::string& value) { parameters[key] = value; }
};

std::string format_manifest(const RunManifest& manifest);
void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);

}  // namespace templia
