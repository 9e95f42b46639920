#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "templia/commands.hpp"
#include "templia/template_spec.hpp"

using namespace templia;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "templia_test_cli" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string parse_error(std::string_view text) {
  try {
    parse_template_spec(text);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("template specs") {
  CHECK(parse_template_spec("periodic:011").prefix(6) == BitWord{0, 1, 1, 0, 1, 1});
  CHECK(parse_template_spec("periodic:011").is_periodic());
  CHECK(parse_template_spec("word:0110").prefix(4) == BitWord{0, 1, 1, 0});

  const SymbolicTemplate err = parse_template_spec("error:k=30,N=200");
  CHECK(err.length() == 200);
  CHECK(err.symbol(29) == 0);
  CHECK(err.symbol(28) == 1);
  CHECK(err.symbol(30) == 1);

  CHECK(parse_template_spec("random:seed=42,N=200,p=0.5").prefix(200) == random_word(42, 200, 0.5));
  CHECK(parse_template_spec("random:seed=42,N=200").prefix(200) == random_word(42, 200, 0.5));
  CHECK(parse_template_spec("binary:a=0.5,L=4").prefix(4) == BitWord{0, 1, 1, 1});
  CHECK(parse_template_spec("binary:a=0.375,L=15").length() == 15);

  for (const char* spec : {"periodic:011", "word:10", "error:k=3,N=9", "random:seed=7,N=20,p=0.25", "binary:a=0.375,L=15"}) {
    CHECK(parse_template_spec(spec).descriptor() == spec);
  }

  CHECK(parse_error("periodic:012").find("012") != std::string::npos);
  CHECK(parse_error("cyclic:01").find("cyclic") != std::string::npos);
  CHECK(parse_error("error:k=0,N=200").find("k") != std::string::npos);
  CHECK(parse_error("error:k=201,N=200").find("201") != std::string::npos);
  CHECK(parse_error("random:seed=x,N=200").find("x") != std::string::npos);
  CHECK(parse_error("random:N=200").find("seed") != std::string::npos);
  CHECK(parse_error("binary:a=1.5,L=4").find("1.5") != std::string::npos);
  CHECK(parse_error("binary:a=0.5,L=4,q=1").find("q") != std::string::npos);
  CHECK(parse_error("binary:a=0.5,a=0.25,L=4").find("a") != std::string::npos);
  CHECK_FALSE(parse_error("").empty());
  CHECK_FALSE(parse_error("periodic:").empty());
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"julia", "--c1", "bogus"}).code == kExitUsage);
  CHECK(run({"julia", "--template", "periodic:2"}).code == kExitUsage);
  CHECK(run({"julia", "--iters", "0"}).code == kExitUsage);
  CHECK(run({"julia", "--template", "word:0101", "--iters", "200"}).code == kExitUsage);
  CHECK(run({"hybrid", "--mode", "montecarlo"}).code == kExitUsage);
  CHECK(run({"hybrid", "--L", "21"}).code == kExitUsage);
  CHECK(run({"classify", "--dust-threshold", "0"}).code == kExitUsage);
  CHECK(run({"--threads", "0", "--out", fresh_dir("threads0").string(), "julia", "--px", "8"}).code == kExitUsage);
  const Run bad = run({"julia", "--c1", "bogus"});
  CHECK(bad.err.find("bogus") != std::string::npos);
}

TEST_CASE("help lists flags with their defaults") {
  const Run top = run({"--help"});
  CHECK(top.code == kExitOk);
  for (const char* sub : {"julia", "mandel-slice", "mandel-lattice", "zoom", "fixed-map", "hybrid", "error-sweep",
                          "converge", "classify", "dimension"}) {
    CHECK(top.out.find(sub) != std::string::npos);
    CHECK(run({sub, "--help"}).code == kExitOk);
  }
  CHECK(top.out.find("--threads") != std::string::npos);
  CHECK(top.out.find("--out") != std::string::npos);
  const std::string julia = run({"julia", "--help"}).out;
  CHECK(julia.find("[200]") != std::string::npos);
  CHECK(julia.find("[512]") != std::string::npos);
  const std::string classify = run({"classify", "--help"}).out;
  CHECK(classify.find("--dust-threshold") != std::string::npos);
  CHECK(classify.find("[16]") != std::string::npos);
  const std::string fixed = run({"fixed-map", "--help"}).out;
  CHECK(fixed.find("[15]") != std::string::npos);
  CHECK(fixed.find("[4096]") != std::string::npos);
  const std::string lattice = run({"mandel-lattice", "--help"}).out;
  CHECK(lattice.find("-0.6:0.2:0.6") != std::string::npos);
  CHECK(lattice.find("0:0.2:0.8") != std::string::npos);
}

TEST_CASE("julia writes an image and a manifest") {
  const fs::path dir = fresh_dir("julia");
  const Run r = run({"--out", dir.string(), "julia", "--c0", "0", "--c1", "-0.62-0.432i", "--template", "periodic:011",
                     "--iters", "200", "--px", "64"});
  REQUIRE(r.code == kExitOk);
  CHECK(fs::exists(dir / "julia.pgm"));
  const std::string manifest = slurp(dir / "manifest.txt");
  CHECK(manifest.find("maxIter=200\n") != std::string::npos);
  CHECK(manifest.find("template=periodic:011\n") != std::string::npos);
  CHECK(manifest.find("c1=-0.62-0.432i\n") != std::string::npos);
  CHECK(slurp(dir / "julia.pgm").rfind("P5\n64 64\n255\n", 0) == 0);
}

TEST_CASE("every subcommand runs and is repeatable") {
  const std::vector<std::vector<std::string>> commands = {
      {"julia", "--c1", "-0.117-0.76i", "--px", "48", "--palette", "spectrum"},
      {"mandel-slice", "--template", "periodic:011", "--c0", "-0.2+0.6i", "--px", "48"},
      {"mandel-lattice", "--px", "16", "--iters", "50"},
      {"zoom", "--template", "periodic:011", "--window", "0,4", "--window", "0.5+0.5i,1", "--px", "64"},
      {"fixed-map", "--c0", "-0.5622-0.62i", "--c1", "-0.117-0.76i", "--L", "15", "--resolution", "256"},
      {"hybrid", "--L", "8", "--px", "16", "--center", "-0.5", "--width", "2"},
      {"hybrid", "--L", "8", "--px", "16", "--mode", "montecarlo", "--samples", "256", "--seed", "3"},
      {"error-sweep", "--positions", "1,5,30", "--px", "48"},
      {"converge", "--px", "48", "--roots", "1,10,200", "--against", "random:seed=2,N=200"},
      {"classify", "--c1", "-0.75", "--px", "64"},
      {"dimension", "--px", "128"},
  };
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::vector<fs::path> dirs;
    for (int repeat = 0; repeat < 2; ++repeat) {
      dirs.push_back(fresh_dir("repeat_" + std::to_string(i) + "_" + std::to_string(repeat)));
      std::vector<std::string> args{"--out", dirs.back().string()};
      args.insert(args.end(), commands[i].begin(), commands[i].end());
      const Run r = run(args);
      INFO(commands[i][0], " stderr: ", r.err);
      REQUIRE(r.code == kExitOk);
    }
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dirs[0])) {
      if (entry.path().filename() == "manifest.txt") continue;
      ++files;
      INFO(entry.path().filename().string());
      CHECK(slurp(entry.path()) == slurp(dirs[1] / entry.path().filename()));
    }
    CHECK(files >= 1);
    CHECK(fs::exists(dirs[0] / "manifest.txt"));
  }
  CHECK(fs::exists(fresh_dir("probe").parent_path() / "repeat_2_0" / "slice_034.pgm"));
}

TEST_CASE("outputs do not depend on the thread count") {
  for (const std::vector<std::string>& command :
       {std::vector<std::string>{"julia", "--c1", "-0.62-0.432i", "--template", "periodic:011", "--px", "128"},
        std::vector<std::string>{"mandel-slice", "--template", "periodic:011", "--c0", "-0.2+0.6i", "--px", "128"}}) {
    std::string reference;
    for (const char* threads : {"1", "4", "8"}) {
      const fs::path dir = fresh_dir(command[0] + threads);
      std::vector<std::string> args{"--threads", threads, "--out", dir.string()};
      args.insert(args.end(), command.begin(), command.end());
      REQUIRE(run(args).code == kExitOk);
      const std::string image = slurp(dir / (command[0] == "julia" ? "julia.pgm" : "slice.pgm"));
      if (reference.empty()) reference = image;
      CHECK(image == reference);
    }
  }
}

TEST_CASE("runtime failures exit with code 1") {
  const fs::path blocker = fresh_dir("blocked") / "file";
  { std::ofstream(blocker) << "x"; }
  CHECK(run({"--out", (blocker / "sub").string(), "julia", "--px", "8"}).code == kExitFailure);
}
