// JSON serialization: exact rational text forms and round trips for every
// on-disk schema.

#include <catch2/catch_amalgamated.hpp>
#include <hermrank/gen.hpp>
#include <hermrank/io.hpp>
#include <hermrank/numcheck.hpp>
#include <hermrank/pairs.hpp>

#include <cstdio>
#include <filesystem>
#include <string>

using hermrank::BiForm;
using hermrank::GaussianRational;
using hermrank::GQMatrix;
using hermrank::Monomial;
using hermrank::MultiPoly;
using hermrank::PolyMapPair;
using hermrank::Rational;
using hermrank::Signature;
namespace io = hermrank::io;

namespace {

GaussianRational gq(long re, long im = 0) {
  return GaussianRational(Rational(re), Rational(im));
}

}  // namespace

TEST_CASE("rationals serialize as exact fraction strings", "[io]") {
  CHECK(io::to_json(Rational(3, 4)) == io::json("3/4"));
  CHECK(io::to_json(Rational(-7)) == io::json("-7"));
  CHECK(io::rational_from_json(io::json("3/4")) == Rational(3, 4));
  CHECK(io::rational_from_json(io::json(5)) == Rational(5));
  CHECK_THROWS_AS(io::rational_from_json(io::json("x/y")), hermrank::parse_error);
  CHECK_THROWS_AS(io::rational_from_json(io::json(1.5)), hermrank::parse_error);

  const auto g = io::to_json(gq(1, -2));
  CHECK(g.at("re") == io::json("1"));
  CHECK(g.at("im") == io::json("-2"));
  CHECK(io::gq_from_json(g) == gq(1, -2));
  // Bare scalars are accepted as real values.
  CHECK(io::gq_from_json(io::json("2/3")) ==
        GaussianRational(Rational(2, 3)));
  CHECK(io::gq_from_json(io::json(4)) == gq(4));
}

TEST_CASE("signatures and matrices round trip", "[io]") {
  const Signature sig(2, 1, 3);
  CHECK(io::signature_from_json(io::to_json(sig)) == sig);
  CHECK_THROWS_AS(io::signature_from_json(io::json{{"r", 1}}),
                  hermrank::parse_error);

  GQMatrix m(2, 3);
  m(0, 0) = gq(1, 1);
  m(1, 2) = GaussianRational(Rational(-1, 2));
  CHECK(io::matrix_from_json(io::to_json(m)) == m);
}

TEST_CASE("polynomials and biforms round trip", "[io]") {
  const MultiPoly p = MultiPoly::variable(3, 0) * MultiPoly::variable(3, 1) +
                      gq(0, 1) * MultiPoly::variable(3, 2) +
                      MultiPoly::constant(3, GaussianRational(Rational(5, 7)));
  CHECK(io::poly_from_json(io::to_json(p), 3) == p);

  BiForm b(2);
  b.add_term(Monomial::unit(2, 0), Monomial::unit(2, 1), gq(2, -3));
  b.add_term(Monomial({1, 1}), Monomial({0, 2}), GaussianRational(Rational(1, 3)));
  CHECK(io::biform_from_json(io::to_json(b), 2) == b);

  const auto bf = io::biform_file(b);
  CHECK(bf.at("nvars") == io::json(2));
  CHECK(io::biform_from_json(bf.at("terms"), 2) == b);
}

TEST_CASE("pairs and decompositions round trip", "[io]") {
  hermrank::GenConfig cfg;
  cfg.seed = 97u;
  cfg.source = Signature(2, 1, 0);
  auto [pair, witness] = hermrank::quasi_standard(cfg, 2);

  const auto pj = io::to_json(pair);
  const PolyMapPair back = io::pair_from_json(pj);
  CHECK(back.phi == pair.phi);
  CHECK(back.psi == pair.psi);
  CHECK(back.source == pair.source);
  CHECK(back.target == pair.target);

  const auto wj = io::to_json(witness);
  const auto wback = io::decomposition_from_json(wj, pair.source.n());
  CHECK(wback.b == witness.b);
  CHECK(wback.c == witness.c);
  CHECK(wback.h1 == witness.h1);
  CHECK(wback.h2 == witness.h2);
  CHECK(wback.phi_extra == witness.phi_extra);
  CHECK(wback.psi_extra == witness.psi_extra);
  CHECK(wback.lambda == witness.lambda);
  // The reloaded witness still certifies the reloaded pair.
  CHECK(hermrank::check_decomposition(back, wback));
}

TEST_CASE("reports serialize with their seeds", "[io]") {
  const auto rep = hermrank::numeric_verify(hermrank::whitney(1, 1), 10, 1e-9, 5u);
  const auto j = io::to_json(rep);
  CHECK(j.at("trials") == io::json(10));
  CHECK(j.at("failures") == io::json(0));
  CHECK(j.at("seed") == io::json(5));

  hermrank::GenConfig cfg;
  cfg.seed = 2u;
  cfg.source = Signature(2, 0, 0);
  auto [pair, witness] = hermrank::quasi_standard(cfg, 1);
  (void)witness;
  const auto ext = hermrank::extend_with_null_vars(pair, 1);
  const auto rrep = hermrank::restriction_classify(ext, 4, 6u);
  const auto rj = io::to_json(rrep);
  CHECK(rj.at("direct") == io::json("QuasiStandard"));
  CHECK(rj.at("counts").at("quasi_standard") == io::json(4));
  CHECK(rj.at("seed") == io::json(6));
}

TEST_CASE("files round trip through disk", "[io]") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "hermrank_io_test";
  fs::create_directories(dir);
  const std::string path = (dir / "pair.json").string();

  const auto wh = hermrank::whitney(2, 1);
  io::save_file(path, io::to_json(wh));
  const auto loaded = io::pair_from_json(io::load_file(path));
  CHECK(loaded.phi == wh.phi);
  CHECK(loaded.psi == wh.psi);

  const std::string badpath = (dir / "broken.json").string();
  {
    std::FILE* f = std::fopen(badpath.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("{ not json", f);
    std::fclose(f);
  }
  CHECK_THROWS_AS(io::load_file(badpath), hermrank::parse_error);
  CHECK_THROWS_AS(io::load_file((dir / "missing.json").string()),
                  hermrank::parse_error);
  fs::remove_all(dir);
}
