#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "templia/boundary.hpp"
#include "templia/box_counting.hpp"
#include "templia/connectivity.hpp"
#include "templia/hausdorff.hpp"
#include "templia/orbit.hpp"
#include "templia/raster.hpp"

using namespace templia;

namespace {

GridSpec square(double side, int px) { return GridSpec::checked({0, 0}, side, side, px, px); }

EscapeGrid all_escape(int px) {
  EscapeGrid g(square(1.0, px));
  std::fill(g.cells().begin(), g.cells().end(), 0);
  return g;
}

void paint_disk(EscapeGrid& g, int cx, int cy, int r) {
  for (int y = cy - r; y <= cy + r; ++y) {
    for (int x = cx - r; x <= cx + r; ++x) {
      if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r) g.at(x, y) = EscapeGrid::kBounded;
    }
  }
}

const ClassifiedRaster& unit_disk() {
  static const ClassifiedRaster r =
      render_julia({{0, 0}, {0, 0}}, SymbolicTemplate::periodic({0}), square(4.0, 512), 200);
  return r;
}

std::vector<ComplexPoint> random_points(std::mt19937_64& rng, std::size_t n, double spread) {
  std::uniform_real_distribution<double> coord(-spread, spread);
  std::vector<ComplexPoint> pts(n);
  for (auto& p : pts) p = {coord(rng), coord(rng)};
  return pts;
}

}  // namespace

TEST_CASE("grid geometry") {
  const GridSpec g = square(4.0, 4);
  const ComplexPoint top_left = g.pixel_center(0, 0);
  CHECK(top_left.re == -1.5);
  CHECK(top_left.im == 1.5);
  const auto p = g.pixel_of({1.9, -1.9});
  REQUIRE(p.has_value());
  CHECK(p->x == 3);
  CHECK(p->y == 3);
  CHECK_FALSE(g.pixel_of({2.5, 0}).has_value());
  CHECK(g.contains(square(2.0, 16)));
  CHECK_FALSE(square(2.0, 16).contains(g));
  CHECK_THROWS_AS(GridSpec::checked({0, 0}, 0.0, 1.0, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::checked({0, 0}, 1.0, 1.0, 1, 4), std::invalid_argument);
  const GridSpec d = GridSpec::default_for_radius(2.0);
  CHECK(d.width == doctest::Approx(4.2));
  CHECK(d.pixels_x == 512);
}

TEST_CASE("zero pair renders the closed unit disk") {
  const ClassifiedRaster& r = unit_disk();
  const double pixel = r.grid().pixel_width();
  std::size_t violations = 0;
  for (int y = 0; y < 512; ++y) {
    for (int x = 0; x < 512; ++x) {
      const double m = r.grid().pixel_center(x, y).abs();
      if (m <= 1 - 2 * pixel && !r.prisoner(x, y)) ++violations;
      if (m >= 1 + 2 * pixel && r.prisoner(x, y)) ++violations;
    }
  }
  CHECK(violations == 0);
  CHECK(classify_connectivity(r).verdict == Connectivity::Connected);
  CHECK(classify_connectivity(r.cells).verdict == Connectivity::Connected);
}

TEST_CASE("render rejects short templates") {
  CHECK_THROWS(render_julia({{0, 0}, {0, 0}}, SymbolicTemplate::finite({1, 1}), square(4.0, 8), 3));
  CHECK_THROWS(render_julia({{0, 0}, {0, 0}}, SymbolicTemplate::periodic({1}), square(4.0, 8), 0));
}

TEST_CASE("constant template matches the classical renderer") {
  const ComplexPoint c{-0.75, 0};
  const GridSpec g = square(3.0, 128);
  const ClassifiedRaster r = render_julia({c, c}, SymbolicTemplate::periodic({0, 1, 1}), g, 200);
  const double R = 2.0;
  for (int y = 0; y < 128; ++y) {
    for (int x = 0; x < 128; ++x) {
      ComplexPoint z = g.pixel_center(x, y);
      std::int32_t k = z.norm_sq() > R * R ? 0 : -1;
      for (int n = 0; k < 0 && n < 200; ++n) {
        z = step(z, c);
        if (z.norm_sq() > R * R) k = n + 1;
      }
      CHECK(r.cells.at(x, y) == k);
    }
  }
}

TEST_CASE("parallel render matches the serial reference for every thread count") {
  const ParameterPair pair{{0, 0}, {-0.62, -0.432}};
  const auto t = SymbolicTemplate::periodic({0, 1, 1});
  const GridSpec g = GridSpec::default_for_radius(escape_radius(pair), 200);
  const ClassifiedRaster ref = render_julia_serial(pair, t, g, 200);
  const int saved = thread_count();
  for (int threads : {1, 2, 4, 8}) {
    set_thread_count(threads);
    const ClassifiedRaster r = render_julia(pair, t, g, 200);
    CHECK(r.cells == ref.cells);
    CHECK(r.distance_bound == ref.distance_bound);
  }
  set_thread_count(saved);
}

TEST_CASE("prisoner set shrinks as the budget grows") {
  const ParameterPair pair{{0, 0}, {-0.117, -0.856}};
  const auto t = SymbolicTemplate::random(21, 200);
  const GridSpec g = GridSpec::default_for_radius(2.0, 160);
  const ClassifiedRaster coarse = render_julia(pair, t, g, 20);
  const ClassifiedRaster fine = render_julia(pair, t, g, 200);
  std::size_t revoked = 0;
  for (int y = 0; y < 160; ++y) {
    for (int x = 0; x < 160; ++x) revoked += fine.prisoner(x, y) && !coarse.prisoner(x, y);
  }
  CHECK(revoked == 0);
  CHECK(fine.cells.bounded_count() < coarse.cells.bounded_count());
}

TEST_CASE("distance estimate bounds the distance to the unit disk") {
  const ClassifiedRaster& r = unit_disk();
  for (int y = 0; y < 512; y += 7) {
    for (int x = 0; x < 512; x += 7) {
      if (r.prisoner(x, y)) continue;
      const double d = r.grid().pixel_center(x, y).abs() - 1.0;
      const double b = r.distance_bound[r.cells.index(x, y)];
      // For z^2 the estimate is 2|z| ln|z| / (1 + ...) ~ 2 d near the circle.
      CHECK(b >= d * 0.99);
      CHECK(b <= 4.0 * std::max(d, 1e-12) * std::max(1.0, r.grid().pixel_center(x, y).abs()));
    }
  }
}

TEST_CASE("boundary extraction") {
  EscapeGrid full(square(1.0, 6));
  const BoundaryPointSet frame = extract_boundary(full);
  CHECK(frame.size() == 20);
  CHECK(extract_boundary(all_escape(6)).empty());

  const ClassifiedRaster& r = unit_disk();
  const BoundaryPointSet circle = extract_boundary(r.cells);
  REQUIRE_FALSE(circle.empty());
  const double pixel = r.grid().pixel_width();
  for (const ComplexPoint& p : circle.points) CHECK(std::abs(p.abs() - 1.0) <= 2 * pixel);
  REQUIRE(circle.source_grid.has_value());
  CHECK(*circle.source_grid == r.grid());
}

TEST_CASE("connectivity verdicts on painted rasters") {
  EscapeGrid one = all_escape(64);
  paint_disk(one, 32, 32, 10);
  CHECK(classify_connectivity(one).verdict == Connectivity::Connected);

  EscapeGrid two = all_escape(128);
  paint_disk(two, 32, 64, 12);  // about 450 pixels each
  paint_disk(two, 96, 64, 12);
  const std::vector<std::size_t> sizes = component_sizes(two);
  REQUIRE(sizes.size() == 2);
  CHECK(sizes[0] >= 400);
  const ConnectivityReport two_report = classify_connectivity(two, 16);
  CHECK(two_report.verdict == Connectivity::Disconnected);
  CHECK(two_report.component_count == 2);
  CHECK(two_report.largest_component_fraction == doctest::Approx(0.5));

  EscapeGrid specks = all_escape(64);
  for (int i = 0; i < 50; ++i) specks.at(2 + (i % 10) * 6, 2 + (i / 10) * 6) = EscapeGrid::kBounded;
  const ConnectivityReport dust = classify_connectivity(specks, 16);
  CHECK(dust.verdict == Connectivity::Dust);
  CHECK(dust.component_count == 50);
  CHECK(dust.largest_component_size == 1);

  const ConnectivityReport empty = classify_connectivity(all_escape(8));
  CHECK(empty.verdict == Connectivity::Empty);
  CHECK(empty.component_count == 0);

  EscapeGrid diagonal = all_escape(8);
  for (int i = 0; i < 8; ++i) diagonal.at(i, i) = EscapeGrid::kBounded;
  CHECK(classify_connectivity(diagonal).verdict == Connectivity::Connected);

  CHECK_THROWS_AS(classify_connectivity(one, 0), std::invalid_argument);
}

TEST_CASE("connectivity report invariants hold on rendered sets") {
  const ParameterPair pair{{0, 0}, {-1, -0.55}};
  for (const char* block : {"011", "001", "101"}) {
    BitWord w;
    for (const char* p = block; *p; ++p) w.push_back(static_cast<Bit>(*p - '0'));
    const ClassifiedRaster r =
        render_julia(pair, SymbolicTemplate::periodic(w), GridSpec::default_for_radius(2.0, 256), 200);
    const ConnectivityReport rep = classify_connectivity(r, 16);
    const std::vector<std::size_t> sizes = component_sizes(r);
    CHECK(rep.component_count == sizes.size());
    CHECK(rep.largest_component_fraction >= 0.0);
    CHECK(rep.largest_component_fraction <= 1.0);
    if (rep.verdict == Connectivity::Connected) CHECK(rep.component_count == 1);
    if (rep.verdict == Connectivity::Dust) {
      for (std::size_t s : sizes) CHECK(s <= 16);
    }
    if (rep.verdict == Connectivity::Empty) CHECK(r.cells.bounded_count() == 0);
  }
}

TEST_CASE("connectivity is invariant under whole-pixel translation") {
  const ParameterPair pair{{0, 0}, {-0.62, -0.432}};
  const auto t = SymbolicTemplate::periodic({0, 1, 1});
  const GridSpec base = GridSpec::default_for_radius(2.0, 256);
  const ConnectivityReport ref = classify_connectivity(render_julia(pair, t, base, 200));
  for (int shift = 1; shift <= 3; ++shift) {
    GridSpec moved = base;
    moved.center = {base.center.re + shift * base.pixel_width(), base.center.im - 2 * shift * base.pixel_height()};
    const ConnectivityReport rep = classify_connectivity(render_julia(pair, t, moved, 200));
    CHECK(rep.verdict == ref.verdict);
  }

  EscapeGrid a = all_escape(64);
  EscapeGrid b = all_escape(64);
  for (int i = 0; i < 20; ++i) {
    paint_disk(a, 10 + (i * 7) % 40, 10 + (i * 13) % 40, 1 + i % 3);
    paint_disk(b, 13 + (i * 7) % 40, 8 + (i * 13) % 40, 1 + i % 3);
  }
  const ConnectivityReport ra = classify_connectivity(a);
  const ConnectivityReport rb = classify_connectivity(b);
  CHECK(ra.verdict == rb.verdict);
  CHECK(ra.component_count == rb.component_count);
}

TEST_CASE("hausdorff distance examples") {
  const std::vector<ComplexPoint> origin{{0, 0}};
  const std::vector<ComplexPoint> far{{3, 4}};
  const std::vector<ComplexPoint> pair{{0, 0}, {1, 0}};
  CHECK(hausdorff_distance(origin, origin) == 0.0);
  CHECK(hausdorff_distance(origin, far) == 5.0);
  CHECK(hausdorff_distance(pair, origin) == 1.0);
  CHECK(hausdorff_distance(origin, pair) == 1.0);
  CHECK(directed_hausdorff(origin, pair) == 0.0);
  CHECK_THROWS_AS(hausdorff_distance(std::vector<ComplexPoint>{}, origin), std::invalid_argument);
}

TEST_CASE("hausdorff distance matches brute force and is a metric") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_points(rng, 1 + trial * 17 % 300, 1.0 + trial % 3);
    const auto b = random_points(rng, 1 + trial * 29 % 400, 1.5);
    const auto c = random_points(rng, 1 + trial * 11 % 200, 0.5);
    const double ab = hausdorff_distance(a, b);
    CHECK(ab == hausdorff_distance_brute(a, b));
    CHECK(ab == hausdorff_distance(b, a));
    CHECK(hausdorff_distance(a, a) == 0.0);
    CHECK(ab <= hausdorff_distance(a, c) + hausdorff_distance(c, b) + 1e-12);
  }
  const BoundaryPointSet circle = extract_boundary(unit_disk().cells);
  std::vector<ComplexPoint> shifted = circle.points;
  for (auto& p : shifted) p.re += 0.05;
  CHECK(hausdorff_distance(circle.points, shifted) == hausdorff_distance_brute(circle.points, shifted));
}

TEST_CASE("box counting on known sets") {
  std::vector<ComplexPoint> segment;
  for (int i = 0; i < 4096; ++i) segment.push_back({i / 4095.0, 0.3 * i / 4095.0});
  const DimensionEstimate line = box_counting_dimension(segment, std::ldexp(1.0, -9), std::ldexp(1.0, -3), 7);
  CHECK(std::abs(line.dimension - 1.0) <= 0.1);
  CHECK(line.table.size() == 7);
  CHECK(line.table.front().epsilon > line.table.back().epsilon);

  // Left endpoints of the level-10 middle-thirds intervals, built by brute force.
  std::vector<double> left{0.0};
  double width = 1.0;
  for (int level = 0; level < 10; ++level) {
    width /= 3.0;
    std::vector<double> next;
    for (double x : left) {
      next.push_back(x);
      next.push_back(x + 2.0 * width);
    }
    left = next;
  }
  std::vector<ComplexPoint> cantor;
  for (double x : left) cantor.push_back({x, 0.0});
  const DimensionEstimate dust = box_counting_dimension(cantor, std::pow(3.0, -8), std::pow(3.0, -2), 7);
  CHECK(std::abs(dust.dimension - std::log(2.0) / std::log(3.0)) <= 0.05);

  const DimensionEstimate circle = box_counting_dimension(extract_boundary(unit_disk().cells));
  CHECK(std::abs(circle.dimension - 1.0) <= 0.1);

  CHECK_THROWS_AS(box_counting_dimension(segment, 0.1, 0.05, 4), std::invalid_argument);
  CHECK_THROWS_AS(box_counting_dimension(segment, 0.01, 0.1, 2), std::invalid_argument);
  CHECK_THROWS_AS(box_counting_dimension(std::vector<ComplexPoint>{}, 0.01, 0.1, 4), std::invalid_argument);
  const std::vector<ComplexPoint> single{{0.5, 0.5}};
  CHECK_THROWS_AS(box_counting_dimension(single, 0.01, 0.1, 4), std::invalid_argument);
}

TEST_CASE("shifted template rasters agree through one step") {
  const ParameterPair pair{{0, 0}, {-0.62, -0.432}};
  const auto t = SymbolicTemplate::periodic({0, 1, 1});
  const GridSpec g = GridSpec::default_for_radius(escape_radius(pair), 256);
  const ClassifiedRaster a = render_julia(pair, t, g, 200);
  const ClassifiedRaster b = render_julia(pair, shift(t, 1), g, 200);
  const auto near_change = [&](int x, int y) {
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        const int nx = x + dx;
        const int ny = y + dy;
        if (nx < 0 || ny < 0 || nx >= b.cells.width() || ny >= b.cells.height()) return true;
        if (b.prisoner(nx, ny) != b.prisoner(x, y)) return true;
      }
    }
    return false;
  };
  std::size_t compared = 0;
  std::size_t agreed = 0;
  for (int y = 0; y < 256; ++y) {
    for (int x = 0; x < 256; ++x) {
      const ComplexPoint z = g.pixel_center(x, y);
      if (z.abs() > escape_radius(pair)) continue;
      const auto image = g.pixel_of(step(z, pair.select(t.symbol(0))));
      if (!image || near_change(image->x, image->y)) continue;
      ++compared;
      agreed += a.prisoner(x, y) == b.prisoner(image->x, image->y);
    }
  }
  REQUIRE(compared > 1000);
  CHECK(static_cast<double>(agreed) / compared >= 0.99);
}
