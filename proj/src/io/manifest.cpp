#include "templia/manifest.hpp"

#include "templia/netpbm.hpp"
#include "templia/table.hpp"

namespace templia {

std::string format_manifest(const RunManifest& manifest) {
  std::map<std::string, std::string> fields = manifest.parameters;
  fields["tool_version"] = manifest.tool_version;
  fields["subcommand"] = manifest.subcommand;
  fields["output_count"] = std::to_string(manifest.outputs.size());
  for (std::size_t i = 0; i < manifest.outputs.size(); ++i) {
    fields["output." + std::to_string(i)] = manifest.outputs[i];
  }
  fields["wall_clock_seconds"] = format_csv_real(manifest.wall_clock_seconds);

  std::string out;
  for (const auto& [key, value] : fields) out += key + "=" + value + "\n";
  return out;
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
  write_file(path, format_manifest(manifest));
}

}  // namespace templia
