#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "templia/grid.hpp"
#include "templia/hybrid.hpp"
#include "templia/palette.hpp"

namespace templia {

/// Binary PGM: "P5\n<w> <h>\n255\n" then one byte per pixel, top row first.
/// Prisoner pixels are 0; escapes use escape_gray.
std::string encode_pgm(const EscapeGrid& cells, std::size_t max_iter);

/// Binary PPM ("P6") through a palette.
std::string encode_ppm(const EscapeGrid& cells, std::size_t max_iter, const Palette& palette);

/// Hybrid counts as PPM: color = palette.fraction_color(count / total).
std::string encode_ppm(const HybridRaster& raster, const Palette& palette);

/// Writes bytes; throws std::runtime_error if the path cannot be written.
void write_file(const std::filesystem::path& path, const std::string& bytes);

void write_raster_image(const EscapeGrid& cells, std::size_t max_iter, const std::filesystem::path& path);
void write_raster_image(const EscapeGrid& cells, std::size_t max_iter, const Palette& palette,
                        const std::filesystem::path& path);
void write_raster_image(const HybridRaster& raster, const Palette& palette, const std::filesystem::path& path);

struct DecodedImage {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::uint8_t> pixels;
};

/// Reads back P5/P6 files written by this module (maxval 255, no comments).
DecodedImage decode_netpbm(const std::string& bytes);
DecodedImage read_netpbm(const std::filesystem::path& path);

}  // namespace templia
