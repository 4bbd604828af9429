// Exact scalar arithmetic: Rational and GaussianRational.

#include <catch2/catch_amalgamated.hpp>
#include <hermrank/gaussian.hpp>
#include <hermrank/rational.hpp>
#include <hermrank/rng.hpp>

using hermrank::GaussianRational;
using hermrank::Rational;

TEST_CASE("rationals are stored reduced with positive denominator", "[rational]") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(-4, 8) == Rational(-1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(2, 6).num() == 1);
  CHECK(Rational(2, 6).den() == 3);
  CHECK(Rational(5, -1).den() == 1);
}

TEST_CASE("rational string forms round trip", "[rational]") {
  CHECK(Rational::from_string("3/4").str() == "3/4");
  CHECK(Rational::from_string("-3/4").str() == "-3/4");
  CHECK(Rational::from_string("7").str() == "7");
  CHECK(Rational::from_string("14/2") == Rational(7));
  CHECK(Rational(7).str() == "7");
  CHECK_THROWS_AS(Rational::from_string("1/0"), hermrank::division_by_zero);
  CHECK_THROWS_AS(Rational::from_string("abc"), hermrank::parse_error);
  CHECK_THROWS_AS(Rational::from_string(""), hermrank::parse_error);
}

TEST_CASE("rational exact square roots", "[rational]") {
  auto r = Rational(4, 9).exact_sqrt();
  REQUIRE(r.has_value());
  CHECK(*r == Rational(2, 3));
  CHECK(Rational(1).exact_sqrt().value() == Rational(1));
  CHECK_FALSE(Rational(2).exact_sqrt().has_value());
  CHECK_FALSE(Rational(-4).exact_sqrt().has_value());
  CHECK(Rational(0).exact_sqrt().value() == Rational(0));
}

TEST_CASE("gaussian products and quotients are exact", "[rational]") {
  const GaussianRational one_plus_i(Rational(1), Rational(1));
  const GaussianRational one_minus_i(Rational(1), Rational(-1));
  CHECK(one_plus_i * one_minus_i == GaussianRational(Rational(2)));

  const GaussianRational a(Rational(1, 2), Rational(1, 3));
  CHECK(a * GaussianRational(Rational(3)) ==
        GaussianRational(Rational(3, 2), Rational(1)));

  CHECK(one_plus_i / one_plus_i == GaussianRational(Rational(1)));
  CHECK_THROWS_AS(one_plus_i / GaussianRational(), hermrank::division_by_zero);
}

TEST_CASE("conjugation fixes reals and negates the imaginary part", "[rational]") {
  const GaussianRational one_plus_i(Rational(1), Rational(1));
  CHECK(one_plus_i.conj() == GaussianRational(Rational(1), Rational(-1)));
  CHECK(GaussianRational(Rational(5)).conj() == GaussianRational(Rational(5)));
  CHECK(GaussianRational().conj() == GaussianRational());
  CHECK(one_plus_i.conj().conj() == one_plus_i);
}

namespace {

GaussianRational random_gaussian(hermrank::SplitMix64& rng) {
  auto part = [&rng]() {
    const long num = static_cast<long>(rng.below(19)) - 9;
    const long den = static_cast<long>(rng.below(4)) + 1;
    return Rational(num, den);
  };
  return GaussianRational(part(), part());
}

}  // namespace

TEST_CASE("field axioms hold on random triples", "[rational]") {
  hermrank::SplitMix64 rng(20240811u);
  for (int trial = 0; trial < 200; ++trial) {
    const GaussianRational a = random_gaussian(rng);
    const GaussianRational b = random_gaussian(rng);
    const GaussianRational c = random_gaussian(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) {
      CHECK(a * (GaussianRational(Rational(1)) / a) ==
            GaussianRational(Rational(1)));
    }
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("conjugation is an involutive ring automorphism", "[rational]") {
  hermrank::SplitMix64 rng(77u);
  for (int trial = 0; trial < 100; ++trial) {
    const GaussianRational a = random_gaussian(rng);
    const GaussianRational b = random_gaussian(rng);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK(a.conj().conj() == a);
  }
}

TEST_CASE("norm is multiplicative and detects zero", "[rational]") {
  const GaussianRational a(Rational(3, 2), Rational(-1, 5));
  const GaussianRational b(Rational(0), Rational(2));
  CHECK((a * b).norm() == a.norm() * b.norm());
  CHECK(GaussianRational().is_zero());
  CHECK(!a.is_zero());
  CHECK(GaussianRational(Rational(4)).is_real());
  CHECK(!b.is_real());
}
