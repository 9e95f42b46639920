#include "templia/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "templia/boundary.hpp"
#include "templia/box_counting.hpp"
#include "templia/connectivity.hpp"
#include "templia/experiments.hpp"
#include "templia/fixed_map.hpp"
#include "templia/hausdorff.hpp"
#include "templia/hybrid.hpp"
#include "templia/mandel_slice.hpp"
#include "templia/manifest.hpp"
#include "templia/netpbm.hpp"
#include "templia/raster.hpp"
#include "templia/table.hpp"
#include "templia/template_spec.hpp"

namespace templia {

namespace {

namespace fs = std::filesystem;

/// Raised while turning flags into validated parameters; maps to kExitUsage.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class F>
auto validated(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

ComplexPoint complex_flag(const std::string& flag, const std::string& text) {
  return validated(flag, [&] { return parse_complex(text); });
}

SymbolicTemplate template_flag(const std::string& text) {
  return validated("--template", [&] { return parse_template_spec(text); });
}

std::string zero_pad(std::size_t v, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*zu", width, v);
  return buf;
}

LatticeAxis axis_flag(const std::string& flag, const std::string& text) {
  // lo:step:hi
  return validated(flag, [&] {
    const std::size_t a = text.find(':');
    const std::size_t b = a == std::string::npos ? a : text.find(':', a + 1);
    if (b == std::string::npos) throw std::invalid_argument("expected lo:step:hi, got '" + text + "'");
    LatticeAxis axis{std::stod(text.substr(0, a)), std::stod(text.substr(a + 1, b - a - 1)), std::stod(text.substr(b + 1))};
    axis.values();
    return axis;
  });
}

/// Window flags shared by every raster subcommand.
struct GridFlags {
  std::string center = "0";
  double width = 0.0;   // 0 selects the subcommand default
  double height = 0.0;  // 0 selects the width
  int px = 512;
  int py = 0;  // 0 selects px

  void add(CLI::App* app, const std::string& width_default) {
    app->add_option("--center", center, "Window center a+bi")->capture_default_str();
    app->add_option("--width", width, "Window width (default: " + width_default + ")");
    app->add_option("--height", height, "Window height (default: the width)");
    app->add_option("--px", px, "Pixels across")->capture_default_str();
    app->add_option("--py", py, "Pixels down (default: --px)");
  }

  GridSpec build(double default_width) const {
    const double w = width > 0.0 ? width : default_width;
    const double h = height > 0.0 ? height : w;
    const ComplexPoint c = complex_flag("--center", center);
    return validated("grid", [&] { return GridSpec::checked(c, w, h, px, py > 0 ? py : px); });
  }
};

void echo_grid(RunManifest& m, const GridSpec& g, const std::string& prefix = "grid") {
  m.set(prefix + ".center", format_complex(g.center));
  m.set(prefix + ".width", format_real(g.width));
  m.set(prefix + ".height", format_real(g.height));
  m.set(prefix + ".pixels_x", std::to_string(g.pixels_x));
  m.set(prefix + ".pixels_y", std::to_string(g.pixels_y));
}

void echo_pair(RunManifest& m, const ParameterPair& pair) {
  m.set("c0", format_complex(pair.c0));
  m.set("c1", format_complex(pair.c1));
}

void echo_template(RunManifest& m, const SymbolicTemplate& t, const std::string& key = "template") {
  m.set(key, t.descriptor());
  if (const auto* r = std::get_if<RandomTemplate>(&t.variant())) m.set(key + ".seed", std::to_string(r->seed));
}

std::vector<std::size_t> positive_list(const std::string& flag, const std::vector<std::size_t>& values) {
  if (values.empty()) throw UsageError(flag + ": needs at least one value");
  for (std::size_t v : values) {
    if (v < 1) throw UsageError(flag + ": values must be >= 1");
  }
  return values;
}

/// State shared by the subcommand callbacks of one invocation.
struct Session {
  std::ostream& out;
  std::ostream& err;
  std::string out_dir = ".";
  int threads = 0;
  RunManifest manifest;

  fs::path path(const std::string& name) {
    manifest.outputs.push_back(name);
    return fs::path(out_dir) / name;
  }
};

using Action = std::function<void(Session&)>;

/// Builds the subcommand's action from its parsed flags. Runs after parsing;
/// UsageError thrown here means invalid configuration.
using Planner = std::function<Action()>;

struct Subcommand {
  CLI::App* app;
  Planner plan;
};

Subcommand add_julia(CLI::App& root) {
  auto* app = root.add_subcommand("julia", "Render a template Julia set (prisoner/escape raster)");
  struct Flags {
    std::string c0 = "0", c1 = "0", tmpl = "periodic:1", palette;
    std::size_t iters = 200;
    GridFlags grid;
  };
  auto f = std::make_shared<Flags>();
  app->add_option("--c0", f->c0, "Parameter of the map selected by symbol 0")->capture_default_str();
  app->add_option("--c1", f->c1, "Parameter of the map selected by symbol 1")->capture_default_str();
  app->add_option("--template", f->tmpl, "Template spec")->capture_default_str();
  app->add_option("--iters", f->iters, "Iteration budget")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--palette", f->palette, "Also write a color PPM (gray|spectrum)");
  f->grid.add(app, "2R+0.2 around 0");
  return {app, [f] {
            const ParameterPair pair = ParameterPair::checked(complex_flag("--c0", f->c0), complex_flag("--c1", f->c1));
            const SymbolicTemplate t = template_flag(f->tmpl);
            if (!t.is_periodic() && t.length() < f->iters) throw UsageError("--template: shorter than --iters");
            const GridSpec grid = f->grid.build(2.0 * escape_radius(pair) + 0.2);
            std::optional<Palette> palette;
            if (!f->palette.empty()) palette = validated("--palette", [&] { return Palette::named(f->palette); });
            const std::size_t iters = f->iters;
            return Action([=](Session& s) {
              echo_pair(s.manifest, pair);
              echo_template(s.manifest, t);
              echo_grid(s.manifest, grid);
              s.manifest.set("maxIter", std::to_string(iters));
              const ClassifiedRaster r = render_julia(pair, t, grid, iters);
              write_raster_image(r.cells, iters, s.path("julia.pgm"));
              if (palette) {
                s.manifest.set("palette", palette->name);
                write_raster_image(r.cells, iters, *palette, s.path("julia.ppm"));
              }
              s.out << "prisoner pixels: " << r.cells.bounded_count() << " of " << grid.pixel_count() << "\n";
            });
          }};
}

Subcommand add_mandel_slice(CLI::App& root) {
  auto* app = root.add_subcommand("mandel-slice", "Fixed-template Mandelbrot slice over the c1 plane");
  struct Flags {
    std::string c0 = "0", tmpl = "periodic:1";
    std::size_t iters = 200;
    GridFlags grid;
  };
  auto f = std::make_shared<Flags>();
  app->add_option("--c0", f->c0, "Fixed c0")->capture_default_str();
  app->add_option("--template", f->tmpl, "Template spec")->capture_default_str();
  app->add_option("--iters", f->iters, "Iteration budget")->capture_default_str()->check(CLI::PositiveNumber);
  f->grid.add(app, "4, i.e. c1 in [-2,2]^2");
  return {app, [f] {
            const ComplexPoint c0 = complex_flag("--c0", f->c0);
            const SymbolicTemplate t = template_flag(f->tmpl);
            if (!t.is_periodic() && t.length() < f->iters) throw UsageError("--template: shorter than --iters");
            const GridSpec grid = f->grid.build(4.0);
            const std::size_t iters = f->iters;
            return Action([=](Session& s) {
              s.manifest.set("c0", format_complex(c0));
              echo_template(s.manifest, t);
              echo_grid(s.manifest, grid);
              s.manifest.set("maxIter", std::to_string(iters));
              const MandelSliceRaster r = mandel_slice(t, c0, grid, iters);
              write_raster_image(r.cells, iters, s.path("slice.pgm"));
              s.out << "bounded pixels: " << r.cells.bounded_count() << " of " << grid.pixel_count() << "\n";
            });
          }};
}

Subcommand add_mandel_lattice(CLI::App& root) {
  auto* app = root.add_subcommand("mandel-lattice", "Mandelbrot slices for a lattice of c0 values");
  struct Flags {
    std::string tmpl = "periodic:011", re = "-0.6:0.2:0.6", im = "0:0.2:0.8";
    std::size_t iters = 200;
    GridFlags grid;
  };
  auto f = std::make_shared<Flags>();
  f->grid.px = 256;
  app->add_option("--template", f->tmpl, "Template spec")->capture_default_str();
  app->add_option("--re", f->re, "Real c0 range lo:step:hi")->capture_default_str();
  app->add_option("--im", f->im, "Imaginary c0 range lo:step:hi")->capture_default_str();
  app->add_option("--iters", f->iters, "Iteration budget")->capture_default_str()->check(CLI::PositiveNumber);
  f->grid.add(app, "4, i.e. c1 in [-2,2]^2");
  return {app, [f] {
            const SymbolicTemplate t = template_flag(f->tmpl);
            if (!t.is_periodic() && t.length() < f->iters) throw UsageError("--template: shorter than --iters");
            const LatticeAxis re = axis_flag("--re", f->re);
            const LatticeAxis im = axis_flag("--im", f->im);
            const GridSpec grid = f->grid.build(4.0);
            const std::size_t iters = f->iters;
            return Action([=](Session& s) {
              echo_template(s.manifest, t);
              echo_grid(s.manifest, grid);
              s.manifest.set("maxIter", std::to_string(iters));
              s.manifest.set("lattice.re", format_real(re.lo) + ":" + format_real(re.step) + ":" + format_real(re.hi));
              s.manifest.set("lattice.im", format_real(im.lo) + ":" + format_real(im.step) + ":" + format_real(im.hi));
              const auto slices = slice_lattice(t, re, im, grid, iters);
              std::string index = "index,c0_re,c0_im,file\n";
              for (std::size_t i = 0; i < slices.size(); ++i) {
                const std::string name = "slice_" + zero_pad(i, 3) + ".pgm";
                write_raster_image(slices[i].slice.cells, iters, s.path(name));
                index += std::to_string(i) + "," + format_csv_real(slices[i].c0.re) + "," +
                         format_csv_real(slices[i].c0.im) + "," + name + "\n";
              }
              write_file(s.path("lattice.csv"), index);
              s.out << slices.size() << " slices\n";
            });
          }};
}

GridSpec parse_window(const std::string& text, int px) {
  // cx+cyi,width[,height]
  return validated("--window", [&] {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("expected center,width[,height]");
    const double w = std::stod(parts[1]);
    const double h = parts.size() == 3 ? std::stod(parts[2]) : w;
    return GridSpec::checked(parse_complex(parts[0]), w, h, px, px);
  });
}

Subcommand add_zoom(CLI::App& root) {
  auto* app = root.add_subcommand("zoom", "Nested Mandelbrot-slice windows with boundary box-counting estimates");
  struct Flags {
    std::string c0 = "-0.2+0.6i", tmpl = "periodic:011";
    std::vector<std::string> windows;
    std::size_t iters = 200;
    int px = 512;
  };
  auto f = std::make_shared<Flags>();
  app->add_option("--c0", f->c0, "Fixed c0")->capture_default_str();
  app->add_option("--template", f->tmpl, "Template spec")->capture_default_str();
  app->add_option("--window", f->windows, "Window center,width[,height]; repeat for each zoom level")->required();
  app->add_option("--iters", f->iters, "Iteration budget")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--px", f->px, "Pixels per side")->capture_default_str();
  return {app, [f] {
            const ComplexPoint c0 = complex_flag("--c0", f->c0);
            const SymbolicTemplate t = template_flag(f->tmpl);
            if (!t.is_periodic() && t.length() < f->iters) throw UsageError("--template: shorter than --iters");
            std::vector<GridSpec> windows;
            for (const auto& w : f->windows) windows.push_back(parse_window(w, f->px));
            const std::size_t iters = f->iters;
            return Action([=](Session& s) {
              s.manifest.set("c0", format_complex(c0));
              echo_template(s.manifest, t);
              s.manifest.set("maxIter", std::to_string(iters));
              for (std::size_t i = 0; i < windows.size(); ++i) echo_grid(s.manifest, windows[i], "window." + std::to_string(i));
              const ZoomResult zoom = zoom_sequence(t, c0, windows, iters);
              for (const auto& w : zoom.warnings) s.err << "warning: " << w << "\n";
              std::string summary = "level,center_re,center_im,width,height,dimension,error\n";
              for (std::size_t i = 0; i < zoom.levels.size(); ++i) {
                const auto& level = zoom.levels[i];
                const std::string stem = "zoom_" + zero_pad(i, 2);
                write_raster_image(level.slice.cells, iters, s.path(stem + ".pgm"));
                if (level.dimension) write_table(*level.dimension, s.path(stem + "_boxcount.csv"));
                const GridSpec& g = level.slice.grid();
                summary += std::to_string(i) + "," + format_csv_real(g.center.re) + "," + format_csv_real(g.center.im) +
                           "," + format_csv_real(g.width) + "," + format_csv_real(g.height) + "," +
                           (level.dimension ? format_csv_real(level.dimension->dimension) : "") + "," + level.error + "\n";
                s.out << "level " << i << ": "
                      << (level.dimension ? "dimension " + format_real(level.dimension->dimension) : level.error) << "\n";
              }
              write_file(s.path("zoom.csv"), summary);
            });
          }};
}

Subcommand add_fixed_map(CLI::App& root) {
  auto* app = root.add_subcommand("fixed-map", "Fixed-map indicator F on [0,1] via binary expansions");
  struct Flags {
    std::string c0 = "0", c1 = "0";
    std::size_t length = 15, resolution = 4096;
  };
  auto f = std::make_shared<Flags>();
  app->add_option("--c0", f->c0, "Parameter of the map selected by symbol 0")->capture_default_str();
  app->add_option("--c1", f->c1, "Parameter of the map selected by symbol 1")->capture_default_str();
  app->add_option("--L", f->length, "Expansion length (also the iteration budget)")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--resolution", f->resolution, "Number of samples a = i/(resolution-1)")->capture_default_str()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 26));
  return {app, [f] {
            const ParameterPair pair = ParameterPair::checked(complex_flag("--c0", f->c0), complex_flag("--c1", f->c1));
            const std::size_t length = f->length, resolution = f->resolution;
            return Action([=](Session& s) {
              echo_pair(s.manifest, pair);
              s.manifest.set("L", std::to_string(length));
              s.manifest.set("resolution", std::to_string(resolution));
              const FixedMapSamples samples = fixed_map_F(pair, length, resolution);
              write_table(samples, s.path("fixed_map.csv"));
              std::size_t ones = 0;
              for (const auto& x : samples.samples) ones += static_cast<std::size_t>(x.f);
              s.out << "F = 1 at " << ones << " of " << resolution << " samples\n";
            });
          }};
}

Subcommand add_hybrid(CLI::App& root) {
  auto* app = root.add_subcommand("hybrid", "Per-c1 count of length-L templates with a bounded orbit of 0");
  struct Flags {
    std::string c0 = "0", mode = "exact", palette = "spectrum";
    std::size_t length = 10, samples = 4096;
    std::optional<std::uint64_t> seed;
    GridFlags grid;
  };
  auto f = std::make_shared<Flags>();
  f->grid.px = 256;
  app->add_option("--c0", f->c0, "Fixed c0")->capture_default_str();
  app->add_option("--L", f->length, "Template length (also the iteration budget)")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--mode", f->mode, "exact | montecarlo")->capture_default_str()->check(CLI::IsMember({"exact", "montecarlo"}));
  app->add_option("--samples", f->samples, "Monte Carlo word count")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--seed", f->seed, "Monte Carlo seed (required for montecarlo)");
  app->add_option("--palette", f->palette, "gray | spectrum")->capture_default_str();
  f->grid.add(app, "4, i.e. c1 in [-2,2]^2");
  return {app, [f] {
            const ComplexPoint c0 = complex_flag("--c0", f->c0);
            const GridSpec grid = f->grid.build(4.0);
            const Palette palette = validated("--palette", [&] { return Palette::named(f->palette); });
            const bool exact = f->mode == "exact";
            if (exact && f->length > kHybridExactMaxLength) {
              throw UsageError("--L: exact mode supports L <= " + std::to_string(kHybridExactMaxLength));
            }
            if (!exact && !f->seed) throw UsageError("--seed: required in montecarlo mode");
            const std::size_t length = f->length, samples = f->samples;
            const std::uint64_t seed = f->seed.value_or(0);
            return Action([=](Session& s) {
              s.manifest.set("c0", format_complex(c0));
              echo_grid(s.manifest, grid);
              s.manifest.set("L", std::to_string(length));
              s.manifest.set("mode", exact ? "exact" : "montecarlo");
              s.manifest.set("palette", palette.name);
              if (!exact) {
                s.manifest.set("samples", std::to_string(samples));
                s.manifest.set("seed", std::to_string(seed));
              }
              if (exact && length > kHybridExactCostWarningLength) {
                s.err << "warning: exact enumeration of 2^" << length << " words per pixel is slow\n";
              }
              const HybridRaster r = exact ? hybrid_mandelbrot(c0, grid, length, HybridExact{})
                                           : hybrid_mandelbrot(c0, grid, length, HybridMonteCarlo{samples, seed});
              write_raster_image(r, palette, s.path("hybrid.ppm"));
              write_table(r, s.path("hybrid.csv"));
              s.out << "templates per pixel: " << r.total_templates << "\n";
            });
          }};
}

Subcommand add_error_sweep(CLI::App& root) {
  auto* app = root.add_subcommand("error-sweep", "Julia sets of the all-ones template with one error at position k");
  struct Flags {
    std::string c0 = "0", c1 = "-0.62-0.432i";
    std::vector<std::size_t> positions{1, 2, 3, 4, 5, 10, 30, 200};
    std::size_t length = 200;
    GridFlags grid;
  };
  auto f = std::make_shared<Flags>();
  app->add_option("--c0", f->c0, "Error map parameter (symbol 0)")->capture_default_str();
  app->add_option("--c1", f->c1, "Intended map parameter (symbol 1)")->capture_default_str();
  app->add_option("--positions", f->positions, "1-based error positions")->delimiter(',')->capture_default_str();
  app->add_option("--N", f->length, "Template length and iteration budget")->capture_default_str()->check(CLI::PositiveNumber);
  f->grid.add(app, "2R+0.2 around 0");
  return {app, [f] {
            const ParameterPair pair = ParameterPair::checked(complex_flag("--c0", f->c0), complex_flag("--c1", f->c1));
            const std::vector<std::size_t> positions = positive_list("--positions", f->positions);
            for (std::size_t k : positions) {
              if (k > f->length) throw UsageError("--positions: " + std::to_string(k) + " exceeds --N");
            }
            const GridSpec grid = f->grid.build(2.0 * escape_radius(pair) + 0.2);
            const std::size_t length = f->length;
            return Action([=](Session& s) {
              echo_pair(s.manifest, pair);
              echo_grid(s.manifest, grid);
              s.manifest.set("N", std::to_string(length));
              s.manifest.set("maxIter", std::to_string(length));
              std::string list;
              for (std::size_t k : positions) list += (list.empty() ? "" : ",") + std::to_string(k);
              s.manifest.set("positions", list);
              for (const auto& frame : error_sweep(pair.c1, pair.c0, positions, length, grid)) {
                write_raster_image(frame.raster.cells, length, s.path("error_k" + zero_pad(frame.error_position, 4) + ".pgm"));
              }
              s.out << positions.size() << " frames\n";
            });
          }};
}

Subcommand add_converge(CLI::App& root) {
  auto* app = root.add_subcommand("converge", "Hausdorff distance of truncated-root Julia boundaries to the reference");
  struct Flags {
    std::string c0 = "0", c1 = "-0.8", tmpl = "random:seed=1,N=200,p=0.5", against;
    std::vector<std::size_t> roots{1, 5, 10, 25, 50, 100, 200};
    std::size_t reference = 200;
    GridFlags grid;
  };
  auto f = std::make_shared<Flags>();
  app->add_option("--c0", f->c0, "Parameter of the map selected by symbol 0")->capture_default_str();
  app->add_option("--c1", f->c1, "Parameter of the map selected by symbol 1")->capture_default_str();
  app->add_option("--template", f->tmpl, "Template spec")->capture_default_str();
  app->add_option("--roots", f->roots, "Root lengths n, increasing")->delimiter(',')->capture_default_str();
  app->add_option("--reference", f->reference, "Reference length (iteration budget of the reference raster)")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--against", f->against, "Also report the boundary distance to this second template");
  f->grid.add(app, "2R+0.2 around 0");
  return {app, [f] {
            const ParameterPair pair = ParameterPair::checked(complex_flag("--c0", f->c0), complex_flag("--c1", f->c1));
            const SymbolicTemplate t = template_flag(f->tmpl);
            if (!t.is_periodic() && t.length() < f->reference) throw UsageError("--template: shorter than --reference");
            std::optional<SymbolicTemplate> other;
            if (!f->against.empty()) {
              other = validated("--against", [&] { return parse_template_spec(f->against); });
              if (!other->is_periodic() && other->length() < f->reference) throw UsageError("--against: shorter than --reference");
            }
            const std::vector<std::size_t> roots = positive_list("--roots", f->roots);
            for (std::size_t i = 0; i < roots.size(); ++i) {
              if (roots[i] > f->reference) throw UsageError("--roots: " + std::to_string(roots[i]) + " exceeds --reference");
              if (i > 0 && roots[i] <= roots[i - 1]) throw UsageError("--roots: must be strictly increasing");
            }
            const GridSpec grid = f->grid.build(2.0 * escape_radius(pair) + 0.2);
            const std::size_t reference = f->reference;
            return Action([=](Session& s) {
              echo_pair(s.manifest, pair);
              echo_template(s.manifest, t);
              echo_grid(s.manifest, grid);
              s.manifest.set("reference", std::to_string(reference));
              std::string list;
              for (std::size_t n : roots) list += (list.empty() ? "" : ",") + std::to_string(n);
              s.manifest.set("roots", list);
              const ConvergenceCurve curve = convergence_experiment(pair, t, roots, reference, grid);
              write_table(curve, s.path("convergence.csv"));
              for (const auto& e : curve.entries) {
                s.out << "n=" << e.root_length << " " << (e.distance ? format_real(*e.distance) : e.error) << "\n";
              }
              if (other) {
                echo_template(s.manifest, *other, "against");
                const double d = julia_boundary_distance(pair, t, *other, reference, grid);
                write_file(s.path("against.csv"), "template_a,template_b,hausdorff_distance\n" + t.descriptor() + "," +
                                                     other->descriptor() + "," + format_csv_real(d) + "\n");
                s.out << "distance to " << other->descriptor() << ": " << format_real(d) << "\n";
              }
            });
          }};
}

Subcommand add_classify(CLI::App& root) {
  auto* app = root.add_subcommand("classify", "Connectivity verdict of a template Julia raster");
  struct Flags {
    std::string c0 = "0", c1 = "0", tmpl = "periodic:1";
    std::size_t iters = 200, dust = 16;
    GridFlags grid;
  };
  auto f = std::make_shared<Flags>();
  app->add_option("--c0", f->c0, "Parameter of the map selected by symbol 0")->capture_default_str();
  app->add_option("--c1", f->c1, "Parameter of the map selected by symbol 1")->capture_default_str();
  app->add_option("--template", f->tmpl, "Template spec")->capture_default_str();
  app->add_option("--iters", f->iters, "Iteration budget")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--dust-threshold", f->dust, "Most prisoner pixels a component may hold and still count as dust")->capture_default_str()->check(CLI::PositiveNumber);
  f->grid.add(app, "2R+0.2 around 0");
  return {app, [f] {
            const ParameterPair pair = ParameterPair::checked(complex_flag("--c0", f->c0), complex_flag("--c1", f->c1));
            const SymbolicTemplate t = template_flag(f->tmpl);
            if (!t.is_periodic() && t.length() < f->iters) throw UsageError("--template: shorter than --iters");
            const GridSpec grid = f->grid.build(2.0 * escape_radius(pair) + 0.2);
            const std::size_t iters = f->iters, dust = f->dust;
            return Action([=](Session& s) {
              echo_pair(s.manifest, pair);
              echo_template(s.manifest, t);
              echo_grid(s.manifest, grid);
              s.manifest.set("maxIter", std::to_string(iters));
              s.manifest.set("dustThreshold", std::to_string(dust));
              const ClassifiedRaster r = render_julia(pair, t, grid, iters);
              const ConnectivityReport rep = classify_connectivity(r, dust);
              std::string text = "verdict=" + std::string(to_string(rep.verdict)) + "\n" +
                                 "component_count=" + std::to_string(rep.component_count) + "\n" +
                                 "largest_component_fraction=" + format_csv_real(rep.largest_component_fraction) + "\n" +
                                 "largest_component_pixels=" + std::to_string(rep.largest_component_size) + "\n" +
                                 "prisoner_pixels=" + std::to_string(r.cells.bounded_count()) + "\n" +
                                 "dust_threshold=" + std::to_string(dust) + "\n";
              write_file(s.path("classify.txt"), text);
              s.out << text;
            });
          }};
}

Subcommand add_dimension(CLI::App& root) {
  auto* app = root.add_subcommand("dimension", "Box-counting dimension of a template Julia boundary");
  struct Flags {
    std::string c0 = "0", c1 = "0", tmpl = "periodic:1";
    std::size_t iters = 200;
    double min_scale = 0.0, max_scale = 0.0;
    int levels = 6;
    GridFlags grid;
  };
  auto f = std::make_shared<Flags>();
  app->add_option("--c0", f->c0, "Parameter of the map selected by symbol 0")->capture_default_str();
  app->add_option("--c1", f->c1, "Parameter of the map selected by symbol 1")->capture_default_str();
  app->add_option("--template", f->tmpl, "Template spec")->capture_default_str();
  app->add_option("--iters", f->iters, "Iteration budget")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--min-scale", f->min_scale, "Smallest box size (default: 2 pixels)");
  app->add_option("--max-scale", f->max_scale, "Largest box size (default: 1/8 of the window)");
  app->add_option("--levels", f->levels, "Number of geometric scales")->capture_default_str();
  f->grid.add(app, "2R+0.2 around 0");
  return {app, [f] {
            const ParameterPair pair = ParameterPair::checked(complex_flag("--c0", f->c0), complex_flag("--c1", f->c1));
            const SymbolicTemplate t = template_flag(f->tmpl);
            if (!t.is_periodic() && t.length() < f->iters) throw UsageError("--template: shorter than --iters");
            const GridSpec grid = f->grid.build(2.0 * escape_radius(pair) + 0.2);
            const double min_scale = f->min_scale > 0.0 ? f->min_scale : 2.0 * std::max(grid.pixel_width(), grid.pixel_height());
            const double max_scale = f->max_scale > 0.0 ? f->max_scale : std::min(grid.width, grid.height) / 8.0;
            if (f->levels < 3) throw UsageError("--levels: must be >= 3");
            if (!(min_scale < max_scale)) throw UsageError("--min-scale: must be below --max-scale");
            const std::size_t iters = f->iters;
            const int levels = f->levels;
            return Action([=](Session& s) {
              echo_pair(s.manifest, pair);
              echo_template(s.manifest, t);
              echo_grid(s.manifest, grid);
              s.manifest.set("maxIter", std::to_string(iters));
              s.manifest.set("minScale", format_real(min_scale));
              s.manifest.set("maxScale", format_real(max_scale));
              s.manifest.set("levels", std::to_string(levels));
              const BoundaryPointSet boundary = extract_boundary(render_julia(pair, t, grid, iters).cells);
              const DimensionEstimate est = box_counting_dimension(boundary, min_scale, max_scale, levels);
              write_table(est, s.path("dimension.csv"));
              write_file(s.path("dimension.txt"), "dimension=" + format_csv_real(est.dimension) + "\n");
              s.out << "box-counting dimension: " << format_real(est.dimension) << "\n";
            });
          }};
}

/// "--c1 -0.62-0.432i" would otherwise be read as an unknown short flag.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) == 0 && a.find('=') == std::string::npos && i + 1 < args.size()) {
      const std::string& next = args[i + 1];
      if (next.size() >= 2 && next[0] == '-' && (std::isdigit(static_cast<unsigned char>(next[1])) || next[1] == '.' || next[1] == 'i')) {
        out.push_back(a + "=" + next);
        ++i;
        continue;
      }
    }
    out.push_back(a);
  }
  return out;
}

int default_threads() {
  if (const char* env = std::getenv("TEMPLIA_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("TEMPLIA_THREADS: expected a positive integer, got '") + env + "'");
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"templia: symbolic-template iteration of two complex quadratic maps"};
  app.name("templia");
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_dir = ".";
  int threads = 0;
  app.add_option("--out", out_dir, "Output directory (created if missing)")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads (default: TEMPLIA_THREADS, else all cores)")
      ->check(CLI::PositiveNumber);
  app.set_version_flag("--version", kToolVersion);

  std::vector<Subcommand> subcommands{add_julia(app),      add_mandel_slice(app), add_mandel_lattice(app),
                                      add_zoom(app),       add_fixed_map(app),    add_hybrid(app),
                                      add_error_sweep(app), add_converge(app),    add_classify(app),
                                      add_dimension(app)};

  std::vector<std::string> args = glue_negative_values(raw_args);
  std::vector<const char*> argv{"templia"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    err << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Session session{out, err, ".", 0, {}};
  session.out_dir = out_dir;
  session.manifest.subcommand = chosen->get_name();
  Action action;
  try {
    session.threads = threads > 0 ? threads : default_threads();
    for (const auto& sub : subcommands) {
      if (sub.app == chosen) action = sub.plan();
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << chosen->help();
    return kExitUsage;
  }

  try {
    fs::create_directories(out_dir);
    set_thread_count(session.threads);
    session.manifest.set("threads", std::to_string(session.threads));
    const auto start = std::chrono::steady_clock::now();
    action(session);
    session.manifest.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_manifest(session.manifest, fs::path(out_dir) / "manifest.txt");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace templia
