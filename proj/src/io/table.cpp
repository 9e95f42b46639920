#include "templia/table.hpp"

#include <cstdio>
#include <stdexcept>

#include "templia/netpbm.hpp"

namespace templia {

std::string format_csv_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_table(const FixedMapSamples& samples) {
  if (samples.samples.empty()) throw std::invalid_argument("empty fixed-map table");
  std::string out = "a,F\n";
  for (const auto& s : samples.samples) out += format_csv_real(s.a) + "," + std::to_string(s.f) + "\n";
  return out;
}

std::string format_table(const ConvergenceCurve& curve) {
  if (curve.entries.empty()) throw std::invalid_argument("empty convergence curve");
  std::string out = "n,hausdorff_distance\n";
  for (const auto& e : curve.entries) {
    // A failed entry leaves the distance field empty.
    out += std::to_string(e.root_length) + "," + (e.distance ? format_csv_real(*e.distance) : "") + "\n";
  }
  return out;
}

std::string format_table(const DimensionEstimate& estimate) {
  if (estimate.table.empty()) throw std::invalid_argument("empty box-count table");
  std::string out = "epsilon,count\n";
  for (const auto& b : estimate.table) out += format_csv_real(b.epsilon) + "," + std::to_string(b.count) + "\n";
  return out;
}

std::string format_table(const HybridRaster& raster) {
  if (raster.counts.empty()) throw std::invalid_argument("empty hybrid raster");
  std::string out = "c1_re,c1_im,count\n";
  for (int y = 0; y < raster.grid.pixels_y; ++y) {
    for (int x = 0; x < raster.grid.pixels_x; ++x) {
      const ComplexPoint c = raster.grid.pixel_center(x, y);
      out += format_csv_real(c.re) + "," + format_csv_real(c.im) + "," + std::to_string(raster.at(x, y)) + "\n";
    }
  }
  return out;
}

template <class Table>
void write_table(const Table& table, const std::filesystem::path& path) {
  write_file(path, format_table(table));
}

template void write_table(const FixedMapSamples&, const std::filesystem::path&);
template void write_table(const ConvergenceCurve&, const std::filesystem::path&);
template void write_table(const DimensionEstimate&, const std::filesystem::path&);
template void write_table(const HybridRaster&, const std::filesystem::path&);

}  // namespace templia
