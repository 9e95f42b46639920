#include "templia/netpbm.hpp"

#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace templia {

namespace {

std::string header(const char* magic, int w, int h) {
  return std::string(magic) + "\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
}

}  // namespace

std::string encode_pgm(const EscapeGrid& cells, std::size_t max_iter) {
  if (cells.cells().empty()) throw std::invalid_argument("cannot encode an empty raster");
  std::string out = header("P5", cells.width(), cells.height());
  out.reserve(out.size() + cells.cells().size());
  for (std::int32_t e : cells.cells()) out.push_back(static_cast<char>(escape_gray(e, max_iter)));
  return out;
}

std::string encode_ppm(const EscapeGrid& cells, std::size_t max_iter, const Palette& palette) {
  if (cells.cells().empty()) throw std::invalid_argument("cannot encode an empty raster");
  std::string out = header("P6", cells.width(), cells.height());
  out.reserve(out.size() + 3 * cells.cells().size());
  for (std::int32_t e : cells.cells()) {
    for (std::uint8_t v : palette.escape_color(e, max_iter)) out.push_back(static_cast<char>(v));
  }
  return out;
}

std::string encode_ppm(const HybridRaster& raster, const Palette& palette) {
  if (raster.counts.empty()) throw std::invalid_argument("cannot encode an empty raster");
  std::string out = header("P6", raster.grid.pixels_x, raster.grid.pixels_y);
  const auto total = static_cast<double>(raster.total_templates);
  for (std::uint64_t c : raster.counts) {
    for (std::uint8_t v : palette.fraction_color(static_cast<double>(c) / total)) out.push_back(static_cast<char>(v));
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("failed writing '" + path.string() + "'");
}

void write_raster_image(const EscapeGrid& cells, std::size_t max_iter, const std::filesystem::path& path) {
  write_file(path, encode_pgm(cells, max_iter));
}

void write_raster_image(const EscapeGrid& cells, std::size_t max_iter, const Palette& palette,
                        const std::filesystem::path& path) {
  write_file(path, encode_ppm(cells, max_iter, palette));
}

void write_raster_image(const HybridRaster& raster, const Palette& palette, const std::filesystem::path& path) {
  write_file(path, encode_ppm(raster, palette));
}

DecodedImage decode_netpbm(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string magic;
  int maxval = 0;
  DecodedImage img;
  in >> magic >> img.width >> img.height >> maxval;
  if (!in || (magic != "P5" && magic != "P6") || maxval != 255 || img.width < 1 || img.height < 1) {
    throw std::invalid_argument("not a binary netpbm image with maxval 255");
  }
  in.get();  // the single whitespace byte after maxval
  img.channels = magic == "P6" ? 3 : 1;
  const std::size_t n = static_cast<std::size_t>(img.width) * img.height * img.channels;
  img.pixels.resize(n);
  in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) throw std::invalid_argument("truncated netpbm pixel data");
  return img;
}

DecodedImage read_netpbm(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "'");
  return decode_netpbm(std::string(std::istreambuf_iterator<char>(f), {}));
}

}  // namespace templia
