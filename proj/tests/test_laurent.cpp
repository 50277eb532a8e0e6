#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torsion/errors.hpp"
#include "torsion/laurent.hpp"

#include <random>

using torsion::Exponent;
using torsion::LaurentPolynomial;

namespace {

LaurentPolynomial t(std::size_t n, std::size_t i, int power = 1) {
  Exponent e(n, 0);
  e[i] = power;
  return LaurentPolynomial::monomial(n, e);
}

LaurentPolynomial one(std::size_t n) { return LaurentPolynomial::constant(n, 1); }

LaurentPolynomial random_poly(std::mt19937_64& rng, std::size_t n, int terms) {
  LaurentPolynomial p(n);
  for (int k = 0; k < terms; ++k) {
    Exponent e(n);
    for (auto& x : e) x = static_cast<int>(rng() % 7) - 3;
    p.add_term(e, static_cast<long long>(rng() % 11) - 5);
  }
  return p;
}

}  // namespace

TEST_CASE("multiplication") {
  CHECK((t(1, 0) - one(1)) * (t(1, 0) + one(1)) == t(1, 0, 2) - one(1));
  CHECK((t(2, 0) * LaurentPolynomial(2)).is_zero());
  const auto a = t(2, 0) - t(2, 0, -1);
  const auto b = t(2, 1) - t(2, 1, -1);
  LaurentPolynomial expected(2);
  expected.add_term({1, 1}, 1);
  expected.add_term({1, -1}, -1);
  expected.add_term({-1, 1}, -1);
  expected.add_term({-1, -1}, 1);
  CHECK(a * b == expected);
  CHECK_THROWS_AS(t(1, 0) * t(2, 0), torsion::Error);
}

TEST_CASE("zero coefficients are never stored") {
  LaurentPolynomial p(2);
  p.add_term({1, 0}, 3);
  p.add_term({1, 0}, -3);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  CHECK((t(1, 0) - t(1, 0)).size() == 0);
}

TEST_CASE("exact division") {
  const auto f1 = t(2, 0, 2) - one(2);
  const auto f2 = t(2, 1, 2) - one(2);
  CHECK(torsion::exact_divide(f1 * f2, f1) == f2);
  CHECK(torsion::exact_divide(LaurentPolynomial(2), f1).is_zero());

  auto nabla = one(3);
  for (std::size_t i = 0; i < 3; ++i) nabla = nabla * (t(3, i) - t(3, i, -1));
  LaurentPolynomial expected(3);
  expected.add_term({-1, -1, -1}, 1);
  CHECK(torsion::exact_divide(nabla, torsion::square_minus_one_product(3)) == expected);

  try {
    torsion::exact_divide(t(1, 0) + one(1), t(1, 0) - one(1));
    FAIL("division should not succeed");
  } catch (const torsion::Error& e) {
    CHECK(e.kind() == torsion::ErrorKind::NotDivisible);
  }
  CHECK_THROWS_AS(torsion::exact_divide(one(1), LaurentPolynomial(1)), torsion::Error);
}

TEST_CASE("conjugation") {
  LaurentPolynomial p(2);
  p.add_term({2, -1}, 1);
  LaurentPolynomial q(2);
  q.add_term({-2, 1}, 1);
  CHECK(torsion::bar(p) == q);
  CHECK(torsion::bar(torsion::bar(p)) == p);
  const auto anti = t(1, 0) - t(1, 0, -1);
  CHECK(torsion::bar(anti) == -anti);
}

TEST_CASE("square substitution") {
  CHECK(torsion::substitute_squares(t(1, 0) - one(1)) == t(1, 0, 2) - one(1));
  CHECK(torsion::substitute_squares(LaurentPolynomial::constant(1, 7)) == LaurentPolynomial::constant(1, 7));
  LaurentPolynomial p(2), q(2);
  p.add_term({1, -1}, 1);
  q.add_term({2, -2}, 1);
  CHECK(torsion::substitute_squares(p) == q);
}

TEST_CASE("symmetrization") {
  const auto s = torsion::symmetrize(torsion::square_minus_one_product(3), 3);
  auto expected = one(3);
  for (std::size_t i = 0; i < 3; ++i) expected = expected * (t(3, i) - t(3, i, -1));
  CHECK(s.poly == expected);
  CHECK(s.shift == Exponent{-1, -1, -1});
  CHECK(s.sign == torsion::SignAmbiguity::GlobalSignUnknown);

  CHECK(torsion::symmetrize(one(2), 2).poly == one(2));

  const auto k = torsion::symmetrize(t(1, 0, 4) - one(1), 1);
  CHECK(k.poly == t(1, 0, 2) - t(1, 0, -2));
  CHECK(k.shift == Exponent{-2});

  // Odd span.
  CHECK_THROWS_AS(torsion::symmetrize(t(1, 0) - one(1), 1), torsion::Error);
  // Even span, wrong parity.
  try {
    torsion::symmetrize(t(1, 0, 2) + one(1), 1);
    FAIL("expected NotSymmetrizable");
  } catch (const torsion::Error& e) {
    CHECK(e.kind() == torsion::ErrorKind::NotSymmetrizable);
  }
  CHECK_THROWS_AS(torsion::symmetrize(LaurentPolynomial(1), 1), torsion::Error);
}

TEST_CASE("equality up to units") {
  const auto p = t(2, 0) * t(2, 1) - one(2);
  CHECK(torsion::equal_up_to_unit(p, -(p * t(2, 1, 3))));
  CHECK_FALSE(torsion::equal_up_to_unit(p, p + one(2)));
  CHECK(torsion::equal_up_to_unit(LaurentPolynomial(2), LaurentPolynomial(2)));
  CHECK_FALSE(torsion::equal_up_to_unit(p, p * LaurentPolynomial::constant(2, 2)));
}

TEST_CASE("randomized ring laws") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng, 2, 4);
    const auto b = random_poly(rng, 2, 4);
    const auto c = random_poly(rng, 2, 3);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(torsion::bar(a * b) == torsion::bar(a) * torsion::bar(b));
    if (!b.is_zero()) CHECK(torsion::exact_divide(a * b, b) == a);
  }
}

TEST_CASE("printing") {
  LaurentPolynomial p(2);
  p.add_term({2, -1}, 1);
  p.add_term({0, 0}, -3);
  CHECK(p.to_string() == "t1^2*t2^-1 - 3");
  CHECK(LaurentPolynomial(3).to_string() == "0");
}
