// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <unistd.h>

#include "doctest.h"
#include "test_support.hpp"
#include "tfq/errors.hpp"
#include "tfq/io.hpp"
#include "tfq/synth.hpp"

using namespace tfq;
using namespace tfq::testing;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("tfq_io_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

}  // namespace

TEST_SUITE("io_synth") {
  TEST_CASE("signal CSV round trip is exact") {
    TempDir d;
    std::mt19937_64 rng(301);
    const auto f = random_band_limited(rng, 128, 0.125);
    write_signal(d.file("f.csv"), f);
    CHECK(fs::exists(d.file("f.csv.json")));
    const auto g = read_signal(d.file("f.csv"));
    CHECK(g.n() == f.n());
    CHECK(g.x0() == f.x0());
    CHECK(g.dx() == f.dx());
    CHECK(g.samples() == f.samples());
  }

  TEST_CASE("matrix round trip is exact") {
    TempDir d;
    std::mt19937_64 rng(303);
    const auto m = random_smooth_matrix(rng, make_phase_space_grid(32, -2.0, 0.125), 2, DomainTag::ambiguity);
    write_matrix(d.file("m.bin"), m);
    CHECK(fs::file_size(d.file("m.bin")) == 32 * 32 * 16);
    const auto r = read_matrix(d.file("m.bin"));
    CHECK(r.grid() == m.grid());
    CHECK(r.domain_tag() == DomainTag::ambiguity);
    CHECK(r.values() == m.values());
  }

  TEST_CASE("malformed inputs raise IoError") {
    TempDir d;
    CHECK_THROWS_AS(read_signal(d.file("missing.csv")), IoError);
    write_text(d.file("bad.csv"), "index,re,im\n0,1.0\n");
    write_text(d.file("bad.csv.json"), R"({"x0": 0.0, "dx": 0.125})");
    CHECK_THROWS_AS(read_signal(d.file("bad.csv")), IoError);
    write_text(d.file("nohdr.csv"), "0,1,0\n");
    CHECK_THROWS_AS(read_signal(d.file("nohdr.csv")), IoError);
    write_text(d.file("m.bin"), "short");
    write_text(d.file("m.bin.json"), R"({"format": "tfq-matrix", "version": 1})");
    CHECK_THROWS_AS(read_matrix(d.file("m.bin")), IoError);
    const auto m = TFMatrix(make_phase_space_grid(8, -0.5, 0.125), DomainTag::phase_space);
    write_matrix(d.file("ok.bin"), m);
    write_text(d.file("ok.bin"), "truncated");
    CHECK_THROWS_AS(read_matrix(d.file("ok.bin")), IoError);
  }

  TEST_CASE("gaussian recipe matches the closed form") {
    SignalRecipe r;
    r.lambda = 2.0;
    r.n = 128;
    r.dx = 0.0625;
    const auto f = synth(r);
    CHECK(f.x0() == -4.0);
    for (std::size_t k = 0; k < f.n(); ++k) {
      const double x = f.x(k);
      CHECK(f[k] == cplx(std::exp(-pi * 2.0 * x * x), 0.0));
    }
  }

  TEST_CASE("atoms carry unit energy") {
    const auto a = gabor_atom(0.5, 1.0, 3.0, 512, 1.0 / 32.0);
    CHECK(a.energy() == doctest::Approx(1.0).epsilon(1e-12));
    SignalRecipe r;
    r.kind = SignalRecipe::Kind::two_atoms;
    r.n = 512;
    const auto f = synth(r);
    // cross term of atoms 4 apart is exp(-pi * 16 / 2)
    CHECK(f.energy() == doctest::Approx(2.0 + 2.0 * std::exp(-8.0 * pi)).epsilon(1e-12));
  }

  TEST_CASE("two-tone and chirp recipes") {
    SignalRecipe r;
    r.kind = SignalRecipe::Kind::two_tone;
    r.n = 512;
    r.seed = 11;
    const auto a = synth(r);
    const auto b = synth(r);
    CHECK(a.samples() == b.samples());
    r.seed = 12;
    CHECK(synth(r).samples() != a.samples());
    r.kind = SignalRecipe::Kind::chirp;
    r.rate = 2.0;
    const auto c = synth(r);
    CHECK(std::abs(std::abs(c[256]) - 1.0) < 1e-15);
  }

  TEST_CASE("from_file recipe round trip and generation errors") {
    TempDir d;
    const auto a = gabor_atom(0.0, 0.5, 2.0, 256, 0.0625);
    write_signal(d.file("a.csv"), a);
    SignalRecipe r;
    r.kind = SignalRecipe::Kind::from_file;
    r.path = d.file("a.csv");
    CHECK(synth(r).samples() == a.samples());
    write_signal(d.file("edge.csv"), gabor_atom(7.0, 0.0, 2.0, 256, 0.0625));
    r.path = d.file("edge.csv");
    CHECK_THROWS_AS(synth(r), GenerationError);
    SignalRecipe g;
    g.kind = SignalRecipe::Kind::gabor_atom;
    g.t0 = 6.0;
    CHECK_THROWS_AS(synth(g), GenerationError);
    g.t0 = 0.0;
    g.n = 100;
    CHECK_THROWS_AS(synth(g), GenerationError);
    CHECK(parse_recipe_kind("chirp") == SignalRecipe::Kind::chirp);
    CHECK_THROWS_AS(parse_recipe_kind("noise"), DomainError);
  }
}
