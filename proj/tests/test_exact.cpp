#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "balance/exact.hpp"

using balance::Integer;
using balance::QuadraticNumber;
using balance::Rational;
using balance::input_error;

namespace {

QuadraticNumber lambda() { return QuadraticNumber(Rational(-3, 52), Rational(5, 52), 17); }
QuadraticNumber beta_value() {
  return QuadraticNumber(Rational(5864893, 16812976), Rational(27, 16812976), 57);
}

}  // namespace

TEST_CASE("rationals are stored in lowest terms") {
  Rational r(6, 8);
  REQUIRE(r.num() == 3);
  REQUIRE(r.den() == 4);
  Rational neg(3, -9);
  REQUIRE(neg.num() == -1);
  REQUIRE(neg.den() == 3);
  REQUIRE(Rational().num() == 0);
  REQUIRE(Rational().den() == 1);
  REQUIRE_THROWS_AS(Rational(1, 0), input_error);
}

TEST_CASE("rational arithmetic is exact") {
  REQUIRE(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  REQUIRE(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  REQUIRE(Rational(2, 5) * Rational(5, 13) == Rational(2, 13));
  REQUIRE(Rational(2, 5) / Rational(5, 13) == Rational(26, 25));
  REQUIRE(-Rational(7, 2) == Rational(-7, 2));
  REQUIRE_THROWS_AS(Rational(1, 2) / Rational(0), input_error);

  Rational acc(1, 3);
  acc += Rational(1, 3);
  acc -= Rational(1, 6);
  acc *= Rational(2);
  acc /= Rational(1, 3);
  REQUIRE(acc == Rational(3));
}

TEST_CASE("rational comparison") {
  REQUIRE(balance::rat_compare(Rational(1, 3), Rational(1, 3)) == std::strong_ordering::equal);
  REQUIRE(balance::rat_compare(Rational(2, 5), Rational(5, 13)) == std::strong_ordering::greater);
  REQUIRE(balance::rat_compare(Rational(9, 23), Rational(7, 19)) == std::strong_ordering::greater);
  REQUIRE(Rational(1, 3) < Rational(2, 5));
  REQUIRE(balance::abs(Rational(-7, 2)) == Rational(7, 2));
  REQUIRE(Rational(-1, 3).sign() == -1);
  REQUIRE(Rational(0).sign() == 0);
}

TEST_CASE("rational comparison agrees with cross products on random pairs") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int trial = 0; trial < 1000000; ++trial) {
    long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    auto got = balance::rat_compare(Rational(a, b), Rational(c, d));
    long long lhs = static_cast<long long>(a) * d;
    long long rhs = static_cast<long long>(c) * b;
    auto want = lhs < rhs   ? std::strong_ordering::less
                : lhs > rhs ? std::strong_ordering::greater
                            : std::strong_ordering::equal;
    REQUIRE(got == want);
  }
}

TEST_CASE("rational text rendering") {
  REQUIRE(balance::to_string(Rational(1, 3)) == "1/3");
  REQUIRE(balance::to_string(Rational()) == "0/1");
  REQUIRE(balance::to_string(Rational(-7, 2)) == "-7/2");
  REQUIRE(balance::to_string(Rational(10, 5)) == "2/1");
}

TEST_CASE("decimal rendering rounds half up") {
  REQUIRE(balance::decimal_string(Rational(1, 3), 5) == "0.33333");
  REQUIRE(balance::decimal_string(Rational(2, 3), 4) == "0.6667");
  REQUIRE(balance::decimal_string(Rational(1, 8), 2) == "0.13");
  REQUIRE(balance::decimal_string(Rational(-1, 8), 2) == "-0.13");
  REQUIRE(balance::decimal_string(Rational(1, 2), 0) == "1");
  REQUIRE(balance::decimal_string(Rational(5, 1), 3) == "5.000");
  REQUIRE(balance::decimal_string(Rational(1, 1000), 2) == "0.00");
}

TEST_CASE("quadratic number construction and normalization") {
  QuadraticNumber x(Rational(1, 2), Rational(3, 4), 17);
  REQUIRE(x.rational_part() == Rational(1, 2));
  REQUIRE(x.radical_part() == Rational(3, 4));
  REQUIRE(x.radicand() == 17);
  REQUIRE_FALSE(x.is_rational());

  QuadraticNumber rationalized(Rational(1), Rational(0), 17);
  REQUIRE(rationalized.is_rational());
  REQUIRE(rationalized.radicand() == 0);

  REQUIRE_THROWS_AS(QuadraticNumber(Rational(0), Rational(1), 1), input_error);
  REQUIRE_THROWS_AS(QuadraticNumber(Rational(0), Rational(1), 12), input_error);
  REQUIRE_THROWS_WITH(QuadraticNumber(Rational(0), Rational(1), 12),
                      "radicand not square-free");
}

TEST_CASE("quadratic sign analysis") {
  REQUIRE(lambda().sign() == 1);
  REQUIRE((-lambda()).sign() == -1);
  REQUIRE(QuadraticNumber(Rational(5), Rational(-1), 17).sign() == 1);
  REQUIRE(QuadraticNumber(Rational(4), Rational(-1), 17).sign() == -1);
  REQUIRE(QuadraticNumber().sign() == 0);
}

TEST_CASE("quadratic comparison") {
  REQUIRE(balance::quad_compare(lambda(), QuadraticNumber(Rational(1, 3))) ==
          std::strong_ordering::greater);
  REQUIRE(balance::quad_compare(QuadraticNumber(Rational(1), Rational(0), 17),
                                QuadraticNumber(Rational(1), Rational(0), 17)) ==
          std::strong_ordering::equal);
  // beta and lambda live in different fields; compare through a rational
  // pivot sitting between them.
  QuadraticNumber pivot(Rational(17, 50));
  REQUIRE(balance::quad_compare(beta_value(), pivot) == std::strong_ordering::greater);
  REQUIRE(balance::quad_compare(pivot, lambda()) == std::strong_ordering::greater);

  REQUIRE_THROWS_WITH(
      balance::quad_compare(QuadraticNumber(Rational(0), Rational(1), 13),
                            QuadraticNumber(Rational(0), Rational(1), 17)),
      "incomparable representation: mismatched radicands");
}

TEST_CASE("quadratic comparison is an order on random same-field triples") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<long> coef(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  auto draw = [&]() {
    return QuadraticNumber(Rational(coef(rng), den(rng)), Rational(coef(rng), den(rng)), 17);
  };
  for (int trial = 0; trial < 2000; ++trial) {
    QuadraticNumber x = draw(), y = draw(), z = draw();
    REQUIRE(balance::quad_compare(x, x) == std::strong_ordering::equal);
    auto xy = balance::quad_compare(x, y);
    auto yx = balance::quad_compare(y, x);
    if (xy == std::strong_ordering::less) REQUIRE(yx == std::strong_ordering::greater);
    if (xy == std::strong_ordering::greater) REQUIRE(yx == std::strong_ordering::less);
    if (xy == std::strong_ordering::equal) REQUIRE(yx == std::strong_ordering::equal);
    if (balance::quad_compare(x, y) != std::strong_ordering::greater &&
        balance::quad_compare(y, z) != std::strong_ordering::greater) {
      REQUIRE(balance::quad_compare(x, z) != std::strong_ordering::greater);
    }
  }
}

TEST_CASE("quadratic field arithmetic") {
  QuadraticNumber root57(Rational(0), Rational(1), 57);
  REQUIRE(root57.pow(2) == QuadraticNumber(Rational(57)));

  QuadraticNumber phi(Rational(9, 2), Rational(1, 2), 57);
  QuadraticNumber phi_conj(Rational(9, 2), Rational(-1, 2), 57);
  REQUIRE(phi * phi_conj == QuadraticNumber(Rational(6)));
  REQUIRE(balance::conjugate(phi) == phi_conj);

  REQUIRE(lambda() + QuadraticNumber(Rational(0)) == lambda());
  REQUIRE(lambda() - lambda() == QuadraticNumber());

  REQUIRE(phi / phi_conj == QuadraticNumber(Rational(23, 4), Rational(3, 4), 57));
  REQUIRE(phi.pow(3) == QuadraticNumber(Rational(567, 2), Rational(75, 2), 57));

  REQUIRE_THROWS_AS(phi / QuadraticNumber(), input_error);
  REQUIRE_THROWS_WITH(phi + QuadraticNumber(Rational(0), Rational(1), 13),
                      "incomparable representation: mismatched radicands");
}

TEST_CASE("quadratic floor") {
  REQUIRE(balance::quad_floor(Integer(0), Integer(1), 17) == 4);
  REQUIRE(balance::quad_floor(Integer(0), Integer(-1), 17) == -5);
  REQUIRE(balance::quad_floor(Integer(3), Integer(0), 17) == 3);
  REQUIRE(balance::floor_value(lambda()) == 0);
  REQUIRE(balance::floor_value(-lambda()) == -1);
  REQUIRE(balance::floor_value(QuadraticNumber(Rational(9, 2), Rational(1, 2), 57)) == 8);
  REQUIRE(balance::floor_value(QuadraticNumber(Rational(7, 3))) == 2);
  REQUIRE(balance::floor_value(QuadraticNumber(Rational(-7, 3))) == -3);
}

TEST_CASE("decimal rendering of the named constants") {
  REQUIRE(balance::decimal_string(lambda(), 5) == "0.33876");
  REQUIRE(balance::decimal_string(beta_value(), 6) == "0.348843");
}

TEST_CASE("quadratic text rendering") {
  REQUIRE(balance::to_string(lambda()) == "(-3/52 + 5/52*sqrt(17))");
  REQUIRE(balance::to_string(QuadraticNumber(Rational(1, 3))) == "1/3");
}
