// Sparse multivariate polynomials: arithmetic, evaluation, homogenization,
// and restriction to linear subspaces.

#include <catch2/catch_amalgamated.hpp>
#include <hermrank/matrix.hpp>
#include <hermrank/poly.hpp>
#include <hermrank/rng.hpp>

#include <vector>

using hermrank::GaussianRational;
using hermrank::GQMatrix;
using hermrank::Monomial;
using hermrank::MultiPoly;
using hermrank::Rational;

namespace {

GaussianRational gq(long re, long im = 0) {
  return GaussianRational(Rational(re), Rational(im));
}

MultiPoly var(std::size_t nvars, std::size_t k) {
  return MultiPoly::variable(nvars, k);
}

MultiPoly random_poly(hermrank::SplitMix64& rng, std::size_t nvars,
                      unsigned max_degree) {
  MultiPoly p = MultiPoly::zero(nvars);
  const int terms = 1 + static_cast<int>(rng.below(4));
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> exps(nvars, 0);
    unsigned budget = rng.below(max_degree + 1);
    for (unsigned d = 0; d < budget; ++d) exps[rng.below(nvars)] += 1;
    const long re = static_cast<long>(rng.below(9)) - 4;
    const long im = static_cast<long>(rng.below(9)) - 4;
    p = p + MultiPoly::term(Monomial(exps), gq(re, im));
  }
  return p;
}

}  // namespace

TEST_CASE("products expand exactly", "[poly]") {
  const MultiPoly z1 = var(2, 0);
  const MultiPoly z2 = var(2, 1);

  CHECK((z1 + z2) * (z1 - z2) == z1 * z1 - z2 * z2);

  const MultiPoly p = z1 * z1 + gq(3) * z2;
  CHECK(p * MultiPoly::zero(2) == MultiPoly::zero(2));

  const MultiPoly iz2 = GaussianRational::i() * z2;
  CHECK((z1 + iz2) * (z1 - iz2) == z1 * z1 + z2 * z2);
}

TEST_CASE("evaluation is exact", "[poly]") {
  const MultiPoly z1 = var(2, 0);
  const MultiPoly z2 = var(2, 1);

  CHECK((z1 * z2).eval({gq(2), gq(3)}) == gq(6));

  const MultiPoly p =
      z1 * z1 * z2 + gq(5) * z1 + MultiPoly::constant(2, gq(7));
  CHECK(p.eval({gq(0), gq(0)}) == gq(7));

  CHECK((z1 * z1 + z2 * z2).eval({gq(1), GaussianRational::i()}) == gq(0));

  CHECK_THROWS_AS(p.eval({gq(1)}), hermrank::variable_count_mismatch);
}

TEST_CASE("homogenization picks the max degree and clears denominators",
          "[poly]") {
  const MultiPoly z1 = var(2, 0);
  const MultiPoly z2 = var(2, 1);

  // (1, z1, z1*z2) -> (x3^2, x1*x3, x1*x2), common degree 2.
  auto [h, d] = hermrank::homogenize(
      {MultiPoly::constant(2, gq(1)), z1, z1 * z2});
  REQUIRE(d == 2);
  const MultiPoly x1 = var(3, 0);
  const MultiPoly x2 = var(3, 1);
  const MultiPoly x3 = var(3, 2);
  CHECK(h[0] == x3 * x3);
  CHECK(h[1] == x1 * x3);
  CHECK(h[2] == x1 * x2);

  // Already homogeneous tuples are fixed points (with a fresh null variable).
  auto [h2, d2] = hermrank::homogenize({z1, z2});
  CHECK(d2 == 1);
  CHECK(h2[0] == x1);
  CHECK(h2[1] == x2);

  auto [h3, d3] = hermrank::homogenize({var(1, 0) * var(1, 0),
                                        MultiPoly::constant(1, gq(1))});
  CHECK(d3 == 2);
  CHECK(h3[0] == var(2, 0) * var(2, 0));
  CHECK(h3[1] == var(2, 1) * var(2, 1));

  CHECK_THROWS_AS(hermrank::homogenize({}), hermrank::empty_tuple);
  CHECK_THROWS_AS(hermrank::homogenize({MultiPoly::zero(2)}),
                  hermrank::empty_tuple);
}

TEST_CASE("dehomogenize inverts homogenize", "[poly]") {
  const MultiPoly x1 = var(3, 0);
  const MultiPoly x3 = var(3, 2);
  CHECK(hermrank::dehomogenize(x1 * x3) == var(2, 0));
  CHECK(hermrank::dehomogenize(x3 * x3) == MultiPoly::constant(2, gq(1)));

  hermrank::SplitMix64 rng(5150u);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<MultiPoly> tuple;
    for (int k = 0; k < 3; ++k) tuple.push_back(random_poly(rng, 2, 3));
    bool all_zero = true;
    for (const auto& p : tuple) all_zero = all_zero && p.is_zero();
    if (all_zero) continue;
    auto [h, d] = hermrank::homogenize(tuple);
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      CHECK((h[k].is_zero() ||
             (h[k].is_homogeneous() && h[k].degree() == d)));
      CHECK(hermrank::dehomogenize(h[k]) == tuple[k]);
    }
  }
}

TEST_CASE("linear restriction substitutes exactly", "[poly]") {
  const MultiPoly z1 = var(2, 0);
  const MultiPoly z2 = var(2, 1);

  CHECK(hermrank::restrict_linear(z1 * z2, GQMatrix::identity(2)) == z1 * z2);

  // u |-> (u1+u2, u2): z1^2 restricts to (u1+u2)^2.
  GQMatrix s(2, 2);
  s(0, 0) = gq(1);
  s(0, 1) = gq(1);
  s(1, 1) = gq(1);
  const MultiPoly u1 = var(2, 0);
  const MultiPoly u2 = var(2, 1);
  CHECK(hermrank::restrict_linear(z1 * z1, s) == (u1 + u2) * (u1 + u2));

  // The diagonal line in C^2: z1*z2 becomes u1^2.
  GQMatrix line(2, 1);
  line(0, 0) = gq(1);
  line(1, 0) = gq(1);
  const MultiPoly u = var(1, 0);
  CHECK(hermrank::restrict_linear(z1 * z2, line) == u * u);

  CHECK_THROWS_AS(hermrank::restrict_linear(z1, GQMatrix(3, 2)),
                  hermrank::shape_mismatch);
}

TEST_CASE("ring axioms hold on random polynomials", "[poly]") {
  hermrank::SplitMix64 rng(909090u);
  for (int trial = 0; trial < 40; ++trial) {
    const MultiPoly p = random_poly(rng, 3, 2);
    const MultiPoly q = random_poly(rng, 3, 2);
    const MultiPoly r = random_poly(rng, 3, 2);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * (q * r) == (p * q) * r);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    if (!p.is_zero() && !q.is_zero()) {
      CHECK((p * q).degree() == p.degree() + q.degree());
    }
  }
}

TEST_CASE("homogenization preserves values at the affine chart", "[poly]") {
  hermrank::SplitMix64 rng(424242u);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<MultiPoly> tuple;
    for (int k = 0; k < 2; ++k) tuple.push_back(random_poly(rng, 2, 3));
    if (tuple[0].is_zero() && tuple[1].is_zero()) continue;
    auto [h, d] = hermrank::homogenize(tuple);
    (void)d;
    const std::vector<GaussianRational> z = {
        gq(static_cast<long>(rng.below(7)) - 3),
        gq(static_cast<long>(rng.below(7)) - 3)};
    const std::vector<GaussianRational> x = {z[0], z[1], gq(1)};
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      CHECK(h[k].eval(x) == tuple[k].eval(z));
    }
  }
}

TEST_CASE("restriction is multiplicative and degree non-increasing", "[poly]") {
  hermrank::SplitMix64 rng(31337u);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly p = random_poly(rng, 3, 2);
    const MultiPoly q = random_poly(rng, 3, 2);
    GQMatrix s(3, 2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        s(i, j) = gq(static_cast<long>(rng.below(5)) - 2);
    CHECK(hermrank::restrict_linear(p * q, s) ==
          hermrank::restrict_linear(p, s) * hermrank::restrict_linear(q, s));
    if (!p.is_zero() && !hermrank::restrict_linear(p, s).is_zero()) {
      CHECK(hermrank::restrict_linear(p, s).degree() <= p.degree());
    }
  }
}
