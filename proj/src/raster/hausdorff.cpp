#include "templia/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace templia {

namespace {

/// Points bucketed into square cells for exact nearest-neighbour queries.
class BucketGrid {
 public:
  explicit BucketGrid(std::span<const ComplexPoint> pts) {
    double min_x = pts[0].re, max_x = pts[0].re, min_y = pts[0].im, max_y = pts[0].im;
    for (const auto& p : pts) {
      min_x = std::min(min_x, p.re);
      max_x = std::max(max_x, p.re);
      min_y = std::min(min_y, p.im);
      max_y = std::max(max_y, p.im);
    }
    origin_x_ = min_x;
    origin_y_ = min_y;
    const double extent = std::max({max_x - min_x, max_y - min_y, 1e-300});
    // About two points per occupied cell along a curve-like set.
    const double cells_per_side = std::clamp(std::sqrt(static_cast<double>(pts.size())) * 2.0, 1.0, 2048.0);
    cell_ = extent / cells_per_side;
    nx_ = static_cast<int>((max_x - min_x) / cell_) + 1;
    ny_ = static_cast<int>((max_y - min_y) / cell_) + 1;

    std::vector<std::size_t> counts(static_cast<std::size_t>(nx_) * ny_ + 1, 0);
    for (const auto& p : pts) ++counts[cell_index(cell_x(p.re), cell_y(p.im)) + 1];
    for (std::size_t i = 1; i < counts.size(); ++i) counts[i] += counts[i - 1];
    start_ = counts;
    points_.resize(pts.size());
    for (const auto& p : pts) points_[counts[cell_index(cell_x(p.re), cell_y(p.im))]++] = p;
  }

  /// Squared distance from q to its nearest bucketed point.
  double nearest_sq(ComplexPoint q) const {
    // Clamping keeps far queries finite; rings from r_start still reach every cell.
    constexpr double kFar = 1e12;
    const long qx = static_cast<long>(std::clamp(std::floor((q.re - origin_x_) / cell_), -kFar, kFar));
    const long qy = static_cast<long>(std::clamp(std::floor((q.im - origin_y_) / cell_), -kFar, kFar));
    const long dx_out = qx < 0 ? -qx : (qx >= nx_ ? qx - nx_ + 1 : 0);
    const long dy_out = qy < 0 ? -qy : (qy >= ny_ ? qy - ny_ + 1 : 0);
    const long r_start = std::max(dx_out, dy_out);
    const long r_end = r_start + std::max<long>(nx_, ny_);

    double best = std::numeric_limits<double>::infinity();
    const auto scan = [&](long x, long y) {
      const std::size_t c = cell_index(static_cast<int>(x), static_cast<int>(y));
      for (std::size_t k = start_[c]; k < start_[c + 1]; ++k) {
        const double dx = points_[k].re - q.re;
        const double dy = points_[k].im - q.im;
        best = std::min(best, dx * dx + dy * dy);
      }
    };
    for (long r = r_start; r <= r_end; ++r) {
      const long x_lo = std::max(0L, qx - r);
      const long x_hi = std::min<long>(nx_ - 1, qx + r);
      for (long y = std::max(0L, qy - r); y <= std::min<long>(ny_ - 1, qy + r); ++y) {
        if (y == qy - r || y == qy + r) {
          for (long x = x_lo; x <= x_hi; ++x) scan(x, y);
        } else {
          if (qx - r >= 0 && qx - r < nx_) scan(qx - r, y);
          if (r > 0 && qx + r >= 0 && qx + r < nx_) scan(qx + r, y);
        }
      }
      // Anything not yet visited lies at least r cells away.
      const double reach = static_cast<double>(r) * cell_;
      if (best <= reach * reach) break;
    }
    return best;
  }

 private:
  int cell_x(double x) const { return std::clamp(static_cast<int>((x - origin_x_) / cell_), 0, nx_ - 1); }
  int cell_y(double y) const { return std::clamp(static_cast<int>((y - origin_y_) / cell_), 0, ny_ - 1); }
  std::size_t cell_index(int x, int y) const { return static_cast<std::size_t>(y) * nx_ + x; }

  double origin_x_ = 0.0;
  double origin_y_ = 0.0;
  double cell_ = 1.0;
  int nx_ = 1;
  int ny_ = 1;
  std::vector<std::size_t> start_;
  std::vector<ComplexPoint> points_;
};

void require_nonempty(std::span<const ComplexPoint> a, std::span<const ComplexPoint> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("Hausdorff distance of an empty point set");
}

}  // namespace

double directed_hausdorff(std::span<const ComplexPoint> from, std::span<const ComplexPoint> to) {
  require_nonempty(from, to);
  const BucketGrid index(to);
  const long n = static_cast<long>(from.size());
  double worst = 0.0;
#pragma omp parallel for schedule(dynamic, 256) reduction(max : worst)
  for (long i = 0; i < n; ++i) worst = std::max(worst, index.nearest_sq(from[static_cast<std::size_t>(i)]));
  return std::sqrt(worst);
}

double hausdorff_distance(std::span<const ComplexPoint> a, std::span<const ComplexPoint> b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double hausdorff_distance(const BoundaryPointSet& a, const BoundaryPointSet& b) {
  return hausdorff_distance(std::span<const ComplexPoint>(a.points), std::span<const ComplexPoint>(b.points));
}

double hausdorff_distance_brute(std::span<const ComplexPoint> a, std::span<const ComplexPoint> b) {
  require_nonempty(a, b);
  auto directed = [](std::span<const ComplexPoint> from, std::span<const ComplexPoint> to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to) {
        const double dx = p.re - q.re;
        const double dy = p.im - q.im;
        best = std::min(best, dx * dx + dy * dy);
      }
      worst = std::max(worst, best);
    }
    return std::sqrt(worst);
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace templia
