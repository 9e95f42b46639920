#include "templia/connectivity.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace templia {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

  std::size_t size_of_root(std::size_t r) const { return size_[r]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

std::string_view to_string(Connectivity c) {
  switch (c) {
    case Connectivity::Connected: return "Connected";
    case Connectivity::Disconnected: return "Disconnected";
    case Connectivity::Dust: return "Dust";
    case Connectivity::Empty: return "Empty";
  }
  return "?";
}

namespace {

enum Cover : std::uint8_t { kOutside = 0, kJoin = 1, kBody = 2 };

std::vector<std::size_t> masked_component_sizes(const std::vector<std::uint8_t>& mask, int w, int h) {
  const auto at = [&](int x, int y) { return static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + x; };
  DisjointSets sets(mask.size());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = at(x, y);
      if (mask[i] == kOutside) continue;
      // Previously visited half of the 8-neighbourhood.
      if (x > 0 && mask[at(x - 1, y)] != kOutside) sets.unite(i, at(x - 1, y));
      if (y > 0) {
        if (mask[at(x, y - 1)] != kOutside) sets.unite(i, at(x, y - 1));
        if (x > 0 && mask[at(x - 1, y - 1)] != kOutside) sets.unite(i, at(x - 1, y - 1));
        if (x + 1 < w && mask[at(x + 1, y - 1)] != kOutside) sets.unite(i, at(x + 1, y - 1));
      }
    }
  }
  std::vector<std::size_t> body(mask.size(), 0);
  std::vector<bool> is_root(mask.size(), false);
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] == kOutside) continue;
    const std::size_t r = sets.find(i);
    is_root[r] = true;
    if (mask[i] == kBody) ++body[r];
  }
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (is_root[i]) sizes.push_back(body[i]);
  }
  return sizes;
}

std::vector<std::uint8_t> bounded_mask(const EscapeGrid& cells) {
  std::vector<std::uint8_t> mask(cells.cells().size(), kOutside);
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (cells.cells()[i] == EscapeGrid::kBounded) mask[i] = kBody;
  }
  return mask;
}

std::vector<std::uint8_t> covering_mask(const ClassifiedRaster& raster) {
  std::vector<std::uint8_t> mask = bounded_mask(raster.cells);
  for (int y = 0; y < raster.cells.height(); ++y) {
    for (int x = 0; x < raster.cells.width(); ++x) {
      if (raster.near_set(x, y)) mask[raster.cells.index(x, y)] = kJoin;
    }
  }
  return mask;
}

ConnectivityReport classify_sizes(const std::vector<std::size_t>& sizes, std::size_t dust_threshold) {
  if (dust_threshold < 1) throw std::invalid_argument("dust threshold must be >= 1");
  ConnectivityReport report;
  report.dust_threshold = dust_threshold;
  report.component_count = sizes.size();
  if (sizes.empty()) {
    report.verdict = Connectivity::Empty;
    return report;
  }
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  report.largest_component_size = *std::max_element(sizes.begin(), sizes.end());
  if (total > 0) {
    report.largest_component_fraction =
        static_cast<double>(report.largest_component_size) / static_cast<double>(total);
  }
  if (sizes.size() == 1) {
    report.verdict = Connectivity::Connected;
  } else if (report.largest_component_size <= dust_threshold) {
    report.verdict = Connectivity::Dust;
  } else {
    report.verdict = Connectivity::Disconnected;
  }
  return report;
}

}  // namespace

std::vector<std::size_t> component_sizes(const EscapeGrid& cells) {
  return masked_component_sizes(bounded_mask(cells), cells.width(), cells.height());
}

std::vector<std::size_t> component_sizes(const ClassifiedRaster& raster) {
  return masked_component_sizes(covering_mask(raster), raster.cells.width(), raster.cells.height());
}

ConnectivityReport classify_connectivity(const EscapeGrid& cells, std::size_t dust_threshold) {
  return classify_sizes(component_sizes(cells), dust_threshold);
}

ConnectivityReport classify_connectivity(const ClassifiedRaster& raster, std::size_t dust_threshold) {
  return classify_sizes(component_sizes(raster), dust_threshold);
}

}  // namespace templia
