// Floating-point cross-validation of the symbolic pipeline.

#include <catch2/catch_amalgamated.hpp>
#include <hermrank/gen.hpp>
#include <hermrank/numcheck.hpp>
#include <hermrank/pairs.hpp>

#include <cmath>
#include <complex>

using hermrank::MultiPoly;
using hermrank::Signature;

namespace {

double incidence_residual(const Signature& sig, const hermrank::CPoint& x,
                          const hermrank::CPoint& y) {
  std::complex<double> acc{0.0, 0.0};
  double nx = 0.0, ny = 0.0;
  for (std::size_t k = 0; k < sig.n(); ++k) {
    acc += double(sig.weight(k)) * x[k] * std::conj(y[k]);
    nx += std::norm(x[k]);
    ny += std::norm(y[k]);
  }
  return std::abs(acc) / (std::sqrt(nx) * std::sqrt(ny));
}

}  // namespace

TEST_CASE("incidence samples satisfy the orthogonality constraint", "[numcheck]") {
  for (const Signature sig :
       {Signature(2, 0, 0), Signature(1, 1, 0), Signature(1, 1, 2)}) {
    hermrank::SplitMix64 rng(42u);
    for (int t = 0; t < 50; ++t) {
      auto [x, y] = hermrank::sample_incidence(sig, rng);
      REQUIRE(x.size() == sig.n());
      REQUIRE(y.size() == sig.n());
      CHECK(incidence_residual(sig, x, y) <= 1e-12);
    }
  }

  hermrank::SplitMix64 rng(1u);
  CHECK_THROWS_AS(hermrank::sample_incidence(Signature(0, 0, 2), rng),
                  hermrank::degenerate_norm);
}

TEST_CASE("exactly orthogonal pairs pass the numeric check", "[numcheck]") {
  const auto wh = hermrank::whitney(2, 1);
  const auto rep = hermrank::numeric_verify(wh, 100, 1e-9, 7u);
  CHECK(rep.trials == 100);
  CHECK(rep.failures == 0);
  CHECK(rep.max_residual < 1e-9);

  // Null pairs evaluate to zero up to rounding.
  hermrank::GenConfig cfg;
  cfg.seed = 21u;
  cfg.source = Signature(2, 1, 0);
  cfg.target = Signature(2, 0, 1);
  const auto nrep = hermrank::numeric_verify(hermrank::null_pair(cfg), 100, 1e-9, 3u);
  CHECK(nrep.failures == 0);
}

TEST_CASE("a single perturbed coefficient is caught numerically", "[numcheck]") {
  auto wh = hermrank::whitney(2, 1);
  // Bump the z1^2 coefficient of phi_1 by one; the pairing no longer divides.
  wh.phi[0] = wh.phi[0] + MultiPoly::variable(3, 0) * MultiPoly::variable(3, 0);
  REQUIRE_FALSE(hermrank::verify_pair(wh));
  const auto rep = hermrank::numeric_verify(wh, 100, 1e-9, 7u);
  CHECK(rep.failures > 0);
  CHECK(rep.max_residual > 1e-3);
}

TEST_CASE("reports are deterministic given the seed", "[numcheck]") {
  const auto wh = hermrank::whitney(1, 1);
  const auto a = hermrank::numeric_verify(wh, 25, 1e-9, 11u);
  const auto b = hermrank::numeric_verify(wh, 25, 1e-9, 11u);
  CHECK(a.max_residual == b.max_residual);
  CHECK(a.failures == b.failures);
  CHECK(a.seed == 11u);
}
