#include "coxlat/scalar.hpp"

#include <cmath>
#include <random>

#include "coxlat/errors.hpp"
#include "doctest.h"

using coxlat::Rational;
using coxlat::Scalar;

static Scalar r(int d) { return Scalar::radical(d); }
static Scalar q(long n, long d) { return Scalar::rational(n, d); }

TEST_CASE("rational construction and zero") {
  CHECK(Scalar(0).is_zero());
  CHECK(Scalar(0).str() == "0");
  CHECK(Scalar(5).str() == "5");
  CHECK(q(-3, 6).str() == "-1/2");
  CHECK(q(2, 4) == q(1, 2));
  CHECK(Scalar(3).is_rational());
  CHECK_FALSE(r(2).is_rational());
}

TEST_CASE("cosine table") {
  CHECK(Scalar::cos_pi_over(1) == Scalar(-1));
  CHECK(Scalar::cos_pi_over(2) == Scalar(0));
  CHECK(Scalar::cos_pi_over(3) == q(1, 2));
  CHECK(Scalar::cos_pi_over(4) == q(1, 2) * r(2));
  CHECK(Scalar::cos_pi_over(5) == q(1, 4) + q(1, 4) * r(5));
  CHECK(Scalar::cos_pi_over(6) == q(1, 2) * r(3));
  CHECK_THROWS_AS((void)Scalar::cos_pi_over(7), coxlat::unsupported_error);
  CHECK_THROWS_AS((void)Scalar::cos_pi_over(0), coxlat::unsupported_error);
}

TEST_CASE("radical products stay in the field") {
  CHECK(r(2) * r(3) == r(6));
  CHECK(r(2) * r(2) == Scalar(2));
  CHECK(r(6) * r(10) == Scalar(2) * r(15));
  CHECK(r(10) * r(15) == Scalar(5) * r(6));
  CHECK(r(30) * r(30) == Scalar(30));
  CHECK(r(5) * r(6) == r(30));
  Scalar golden = Scalar::cos_pi_over(5);
  CHECK(golden * golden == q(3, 8) + q(1, 8) * r(5));
}

TEST_CASE("exact sign of mixed-radical values") {
  CHECK((r(6) - r(2) - Scalar(1)).sign() == 1);
  CHECK((r(2) + r(3) - r(5) - Scalar(1)).sign() == -1);
  CHECK((r(2) * r(3) - r(6)).sign() == 0);
  CHECK(r(2) + r(3) > r(5));
  CHECK(Scalar::cos_pi_over(3) < Scalar::cos_pi_over(4));
  CHECK(Scalar::cos_pi_over(4) < Scalar::cos_pi_over(5));
  CHECK(Scalar::cos_pi_over(5) < Scalar::cos_pi_over(6));
}

TEST_CASE("inverse and division") {
  CHECK((Scalar(1) + r(2)).inverse() == r(2) - Scalar(1));
  CHECK(Scalar::cos_pi_over(5).inverse() == r(5) - Scalar(1));
  Scalar messy = q(1, 3) - q(1, 2) * r(2) + r(3) - q(1, 7) * r(30);
  CHECK(messy * messy.inverse() == Scalar(1));
  CHECK(r(6) / r(2) == r(3));
  CHECK((q(3, 4) * r(10)) / (q(1, 2) * r(10)) == q(3, 2));
}

TEST_CASE("canonical rendering and parsing") {
  CHECK((q(3, 8) + q(1, 8) * r(5)).str() == "3/8 + 1/8*r5");
  CHECK((Scalar(1) - q(1, 2) * r(2)).str() == "1 - 1/2*r2");
  CHECK((Scalar(0) - r(6)).str() == "-1*r6");
  CHECK(Scalar::parse("3/8 + 1/8*r5") == q(3, 8) + q(1, 8) * r(5));
  CHECK(Scalar::parse("-1/2*r2 + 1") == Scalar(1) - q(1, 2) * r(2));
  CHECK(Scalar::parse("r30") == r(30));
  CHECK(Scalar::parse("-r6") == Scalar(0) - r(6));
  CHECK(Scalar::parse("0") == Scalar(0));
  CHECK_THROWS_AS((void)Scalar::parse("r7"), coxlat::input_error);
  CHECK_THROWS_AS((void)Scalar::parse("1 +"), coxlat::input_error);
  CHECK_THROWS_AS((void)Scalar::parse("banana"), coxlat::input_error);
}

TEST_CASE("round trip through str") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
  for (int iter = 0; iter < 200; ++iter) {
    Scalar x(0);
    for (int d : {1, 2, 3, 5, 6, 10, 15, 30}) {
      Scalar coeff = q(num(rng), den(rng));
      x = x + (d == 1 ? coeff : coeff * r(d));
    }
    CHECK(Scalar::parse(x.str()) == x);
  }
}

TEST_CASE("field axioms and order on random values") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
  auto draw = [&]() {
    Scalar x(0);
    for (int d : {1, 2, 3, 5, 6, 10, 15, 30}) {
      Scalar coeff = q(num(rng), den(rng));
      x = x + (d == 1 ? coeff : coeff * r(d));
    }
    return x;
  };
  for (int iter = 0; iter < 100; ++iter) {
    Scalar a = draw(), b = draw(), c = draw();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).sign() == a.sign() * b.sign());
    double da = a.approx(), db = b.approx();
    if (std::fabs(da - db) > 1e-6) {
      CHECK((a < b) == (da < db));
    }
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Scalar(1));
    }
  }
}

TEST_CASE("numeric approximation") {
  CHECK(std::fabs(r(2).approx() - 1.4142135623730951) < 1e-12);
  CHECK(std::fabs(Scalar::cos_pi_over(5).approx() -
                  std::cos(3.141592653589793 / 5)) < 1e-12);
}
