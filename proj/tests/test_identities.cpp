#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "torsion/errors.hpp"
#include "torsion/identities.hpp"

using torsion::CohomologyVector;
using torsion::GroupElement;
using torsion::GroupRingElement;
using torsion::Rational;

namespace {

torsion::ErrorKind kind_of(const auto& f) {
  try {
    f();
  } catch (const torsion::Error& e) {
    return e.kind();
  }
  FAIL("expected failure");
  return torsion::ErrorKind::Io;
}

}  // namespace

TEST_CASE("pairing") {
  const GroupElement h{{2, -3}, {4}};
  CHECK(torsion::pairing(h, {Rational(1, 2), 1}) == -2);
  CHECK(torsion::pairing(h, {0, 0}) == 0);
}

TEST_CASE("characteristic class of the three-torus") {
  auto r = torsion::compute_torsion(oracle::load("borromean_000"));
  CHECK(torsion::extract_char_class(r) == r.group->identity());
}

TEST_CASE("duality witnesses on the corpus") {
  for (const char* name : {"borromean_001", "borromean_00m1", "borromean_005", "whitehead_00", "chain4_0000",
                           "chain4_0003", "chain4_000m2", "borromean_unknot_0005"}) {
    CAPTURE(name);
    auto r = torsion::compute_torsion(oracle::load(name));
    const GroupElement h0 = torsion::extract_char_class(r);
    CHECK(torsion::bar(r.tau) == r.tau.translate(r.group->negate(h0)));
  }
}

TEST_CASE("chain of four rings") {
  auto r = torsion::compute_torsion(oracle::load("chain4_0000"));
  CHECK(r.group->describe() == "Z^4");
  CHECK(r.tmap.size() == 7);
  CHECK(r.tau.augmentation() == 0);
  CHECK_FALSE(r.sign_pinned);
}

TEST_CASE("class transformation law") {
  auto r = torsion::compute_torsion(oracle::load("chain4_0003"));
  torsion::attach_char_class(r);
  REQUIRE(r.char_class);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) {
    std::vector<long long> v(4);
    for (auto& x : v) x = static_cast<long long>(rng() % 9) - 4;
    const GroupElement h = r.group->project(v);
    const auto k = torsion::act_on_class(r, r.reference, h);
    const GroupElement expected = r.group->add(*r.char_class, r.group->scale(h, 2));
    CHECK(torsion::char_class_of(r, k) == expected);
    const auto moved = torsion::with_reference(r, k);
    CHECK(torsion::extract_char_class(moved) == expected);
  }
}

TEST_CASE("vanishing torsion has no class") {
  auto r = torsion::compute_torsion(oracle::load("unlink3_000"));
  CHECK(kind_of([&] { torsion::extract_char_class(r); }) == torsion::ErrorKind::ZeroTorsion);
  torsion::attach_char_class(r);
  CHECK_FALSE(r.char_class);
}

TEST_CASE("non-dual elements are rejected") {
  auto g = std::make_shared<const torsion::AbelianGroup>(1, std::vector<long long>{});
  GroupRingElement x(g);
  x.add_term(GroupElement{{0}, {}}, 1);
  x.add_term(GroupElement{{1}, {}}, 2);
  CHECK_FALSE(torsion::duality_witness(x));
  x.add_term(GroupElement{{2}, {}}, 1);
  const auto h0 = torsion::duality_witness(x);
  REQUIRE(h0);
  CHECK(*h0 == GroupElement{{2}, {}});
}

TEST_CASE("moments") {
  // T(e) = 1 at c = 0 on the three-torus.
  auto t3 = torsion::compute_torsion(oracle::load("borromean_000"));
  const std::vector<CohomologyVector> none;
  CHECK(torsion::moment(t3, none) == 1);
  CHECK(torsion::moment(t3, {{1, 2, 3}}) == 0);

  // An explicit element: T = 1 at c = 0 and c = 2 on Z.
  auto g = std::make_shared<const torsion::AbelianGroup>(1, std::vector<long long>{});
  GroupRingElement x(g);
  x.add_term(GroupElement{{0}, {}}, 1);
  x.add_term(GroupElement{{-1}, {}}, 1);
  const GroupElement h0{{-1}, {}};
  // c = g^{-2} h0 for the terms at g = 0 and g = -1: c = -1 and c = 1.
  CHECK(torsion::moment(x, h0, {}) == 2);
  CHECK(torsion::moment(x, h0, {{Rational(3)}}) == 0);
  CHECK(torsion::moment(x, h0, {{Rational(3)}, {Rational(1, 3)}}) == 2);

  std::mt19937_64 rng(11);
  auto r = torsion::compute_torsion(oracle::load("chain4_0003"));
  torsion::attach_char_class(r);
  const auto xs = torsion::random_cohomology(rng, 3, 1);
  CHECK(torsion::moment(r.tau, *r.char_class, xs) == torsion::moment(r, xs));
}

TEST_CASE("random cohomology is reproducible") {
  std::mt19937_64 a(42), b(42);
  const auto x = torsion::random_cohomology(a, 3, 4);
  CHECK(x == torsion::random_cohomology(b, 3, 4));
  CHECK(x.size() == 4);
  for (const auto& v : x) {
    CHECK(v.size() == 3);
    for (const auto& q : v) {
      CHECK(abs(numerator(q)) <= 12);
      CHECK(denominator(q) <= 12);
    }
  }
}

TEST_CASE("lescop") {
  CHECK(torsion::lescop(torsion::compute_torsion(oracle::load("borromean_000"))) == 1);
  CHECK(torsion::lescop(torsion::compute_torsion(oracle::load("chain4_0000"))) == 0);
  CHECK(torsion::lescop(torsion::compute_torsion(oracle::load("borromean_unknot_0000"))) == 0);
}

TEST_CASE("triple cup square") {
  const auto t3 = torsion::compute_torsion(oracle::load("borromean_000"));
  CHECK(torsion::triple_cup_square(t3) == 1);
  const auto framed = torsion::compute_torsion(oracle::load("chain4_0003"));
  const Rational q = torsion::triple_cup_square(framed);
  CHECK(q == 1);
  CHECK(torsion::is_perfect_square(q));
  const auto b4 = torsion::compute_torsion(oracle::load("chain4_0000"));
  CHECK(kind_of([&] { torsion::triple_cup_square(b4); }) == torsion::ErrorKind::BettiMismatch);

  CHECK(torsion::is_perfect_square(0));
  CHECK(torsion::is_perfect_square(49));
  CHECK_FALSE(torsion::is_perfect_square(2));
  CHECK_FALSE(torsion::is_perfect_square(-4));
  CHECK_FALSE(torsion::is_perfect_square(Rational(1, 4)));
}

TEST_CASE("thurston bound") {
  auto r = torsion::compute_torsion(oracle::load("chain4_0000"));
  torsion::attach_char_class(r);
  const CohomologyVector s{1, -2, 0, 3};
  const Rational b = torsion::thurston_bound(r, s);
  CHECK(b >= 0);
  CohomologyVector scaled;
  for (const auto& v : s) scaled.push_back(v * Rational(-5, 2));
  CHECK(torsion::thurston_bound(r, scaled) == b * Rational(5, 2));

  auto zero = torsion::compute_torsion(oracle::load("unlink3_000"));
  CHECK(torsion::thurston_bound(zero, {1, 1, 1}) == 0);
}

TEST_CASE("alexander projection") {
  const auto r = torsion::compute_torsion(oracle::load("borromean_unknot_0005"));
  const auto a = torsion::alexander_projection(r);
  CHECK(a.group().invariant_factors().empty());
  CHECK(a.augmentation() == r.tau.augmentation());
}

TEST_CASE("circle bundles") {
  for (int g = 1; g <= 3; ++g) {
    for (long long n : {0LL, 2LL, -3LL}) {
      CAPTURE(g);
      CAPTURE(n);
      const auto e = torsion::circle_bundle_catalog(g, n);
      CHECK(e.group->rank() == static_cast<std::size_t>(n == 0 ? 2 * g + 1 : 2 * g));
      CHECK(e.group->scale(e.fiber, 2 * g - 2) == e.expected_h0);
      const auto c = torsion::verify_catalog(e);
      CHECK(c.ok());
      CHECK(c.duality_ok);
      CHECK(c.bound == c.expected_bound);
      if (n == 0) CHECK(c.fiber_pairing == 1);
    }
  }
  const auto torus = torsion::circle_bundle_catalog(1, 0);
  CHECK(torus.tau == GroupRingElement::unit(torus.group, torus.group->identity()));
  CHECK(kind_of([] { torsion::circle_bundle_catalog(0, 0); }) == torsion::ErrorKind::BadGenus);
}

TEST_CASE("verification summary") {
  auto t3 = torsion::compute_torsion(oracle::load("borromean_000"));
  const auto v = torsion::verify(t3, 1, 10);
  CHECK(v.ok());
  CHECK(v.duality_ok);
  CHECK(v.lescop == 1);
  REQUIRE(v.cup_square);
  CHECK(*v.cup_square == 1);
  CHECK(v.bounds.size() == 3);

  auto chain = torsion::compute_torsion(oracle::load("chain4_0000"));
  const auto w = torsion::verify(chain, 2, 20);
  CHECK(w.ok());
  REQUIRE(w.moments.size() == 2);
  CHECK(w.moments[0].expected_zero);
  CHECK(w.moments[1].expected_zero);
  CHECK(w.moments[1].ok);
  CHECK_FALSE(w.cup_square);

  auto unlink = torsion::compute_torsion(oracle::load("unlink3_000"));
  const auto u = torsion::verify(unlink, 3, 5);
  CHECK(u.ok());
  CHECK(u.zero_torsion);
}
