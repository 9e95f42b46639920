#pragma once

#include <filesystem>
#include <string>

#include "templia/box_counting.hpp"
#include "templia/experiments.hpp"
#include "templia/fixed_map.hpp"
#include "templia/hybrid.hpp"

namespace templia {

/// CSV with a header row, "\n" line endings and reals printed with 17
/// significant digits.
std::string format_table(const FixedMapSamples& samples);     // a,F
std::string format_table(const ConvergenceCurve& curve);      // n,hausdorff_distance
std::string format_table(const DimensionEstimate& estimate);  // epsilon,count
std::string format_table(const HybridRaster& raster);         // c1_re,c1_im,count

/// Throws std::invalid_argument on an empty table and std::runtime_error on
/// an unwritable path.
template <class Table>
void write_table(const Table& table, const std::filesystem::path& path);

std::string format_csv_real(double x);

}  // namespace templia
