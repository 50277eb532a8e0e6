#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torsion/errors.hpp"
#include "torsion/group_ring.hpp"

#include <random>

using torsion::AbelianGroup;
using torsion::GroupElement;
using torsion::GroupRingElement;
using torsion::Rational;

namespace {

GroupRingElement random_element(std::mt19937_64& rng, const std::shared_ptr<const AbelianGroup>& g) {
  GroupRingElement x(g);
  for (int i = 0; i < 4; ++i) {
    GroupElement h = g->identity();
    for (auto& c : h.free) c = static_cast<long long>(rng() % 7) - 3;
    for (auto& c : h.tors) c = static_cast<long long>(rng() % 9);
    x.add_term(h, Rational(static_cast<long long>(rng() % 9) - 4, 1 + rng() % 3));
  }
  return x;
}

}  // namespace

TEST_CASE("translation and conjugation") {
  auto g = std::make_shared<const AbelianGroup>(2, std::vector<long long>{5});
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_element(rng, g);
    CHECK(x.translate(g->identity()) == x);
    GroupElement h{{1, -2}, {3}};
    CHECK(x.translate(h).translate(g->negate(h)) == x);
    CHECK(torsion::bar(x.translate(h)) == torsion::bar(x).translate(g->negate(h)));
    CHECK(torsion::bar(torsion::bar(x)) == x);
    const auto y = random_element(rng, g);
    CHECK(x * y == y * x);
    CHECK(torsion::bar(x * y) == torsion::bar(x) * torsion::bar(y));
  }
  const GroupElement h{{2, 1}, {4}};
  CHECK(torsion::bar(GroupRingElement::unit(g, h, 3)) == GroupRingElement::unit(g, g->negate(h), 3));
}

TEST_CASE("cyclic group of order five") {
  auto z5 = std::make_shared<const AbelianGroup>(0, std::vector<long long>{5});
  const auto a = GroupRingElement::unit(z5, GroupElement{{}, {1}});
  const auto b = GroupRingElement::unit(z5, GroupElement{{}, {4}});
  CHECK(a * b == GroupRingElement::unit(z5, z5->identity()));
}

TEST_CASE("translation is a free action") {
  auto g = std::make_shared<const AbelianGroup>(1, std::vector<long long>{3});
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_element(rng, g);
    if (x.is_zero()) continue;
    for (long long f = -2; f <= 2; ++f) {
      for (long long t = 0; t < 3; ++t) {
        const GroupElement h{{f}, {t}};
        if (x.translate(h) == x) CHECK(g->is_identity(h));
      }
    }
  }
}

TEST_CASE("coefficients and augmentation") {
  auto g = std::make_shared<const AbelianGroup>(1, std::vector<long long>{});
  GroupRingElement x(g);
  x.add_term(GroupElement{{1}, {}}, Rational(1, 2));
  x.add_term(GroupElement{{0}, {}}, 2);
  CHECK(x.augmentation() == Rational(5, 2));
  CHECK_FALSE(x.is_integral());
  x.add_term(GroupElement{{1}, {}}, Rational(-1, 2));
  CHECK(x.is_integral());
  CHECK(x.terms().size() == 1);
}

TEST_CASE("group mismatch") {
  auto g1 = std::make_shared<const AbelianGroup>(1, std::vector<long long>{});
  auto g2 = std::make_shared<const AbelianGroup>(2, std::vector<long long>{});
  GroupRingElement a = GroupRingElement::unit(g1, g1->identity());
  GroupRingElement b = GroupRingElement::unit(g2, g2->identity());
  try {
    (void)(a + b);
    FAIL("expected GroupMismatch");
  } catch (const torsion::Error& e) {
    CHECK(e.kind() == torsion::ErrorKind::GroupMismatch);
  }
  // Structurally equal groups held separately are compatible.
  auto g1b = std::make_shared<const AbelianGroup>(1, std::vector<long long>{});
  CHECK_NOTHROW((void)(a + GroupRingElement::unit(g1b, g1b->identity())));
}
