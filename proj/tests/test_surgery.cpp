#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "torsion/errors.hpp"
#include "torsion/surgery.hpp"

#include <random>

using torsion::Charge;
using torsion::EulerClasses;
using torsion::GroupElement;
using torsion::Integer;

namespace {

torsion::ErrorKind failure_kind(const torsion::SurgeryInput& in) {
  try {
    torsion::compute_torsion(in);
  } catch (const torsion::Error& e) {
    return e.kind();
  }
  FAIL("expected failure");
  return torsion::ErrorKind::Io;
}

}  // namespace

TEST_CASE("validation") {
  const auto t3 = torsion::validate(oracle::load("borromean_000"));
  CHECK(t3.group->describe() == "Z^3");
  CHECK(t3.zero_framed == std::vector<int>{1, 2, 3});

  const auto v = torsion::validate(oracle::load("borromean_005"));
  CHECK(v.group->describe() == "Z^2 + Z/5");
  CHECK(v.group->torsion_order() == 5);
  CHECK(v.zero_framed == std::vector<int>{1, 2});

  CHECK(failure_kind(oracle::load("hopf")) == torsion::ErrorKind::NotAlgebraicallySplit);
  CHECK(failure_kind(oracle::load("knot_0surgery")) == torsion::ErrorKind::BettiOutOfScope);
  auto wrong = oracle::load("borromean_000");
  wrong.framings = {0, 0};
  CHECK(failure_kind(wrong) == torsion::ErrorKind::InvalidArgument);
}

TEST_CASE("euler classes") {
  const EulerClasses c({0, 0, 5});
  CHECK(c.residues(2) == std::vector<long long>{1, 3, 5, 7, 9});
  CHECK(c.canonical({1, -3, 11}) == Charge{1, -3, 1});
  CHECK(c.canonical({1, 1, -1}) == Charge{1, 1, 9});
  CHECK(c.torsion_classes({1, 1, 1}).size() == 5);
  CHECK(c.act({1, 1, 9}, {0, 2, 1}) == Charge{1, 5, 1});
  CHECK(c.act({1, 1, 1}, c.difference({1, 1, 1}, {3, -1, 7})) == Charge{3, -1, 7});
  try {
    c.canonical({2, 1, 1});
    FAIL("expected BadParity");
  } catch (const torsion::Error& e) {
    CHECK(e.kind() == torsion::ErrorKind::BadParity);
  }
  const EulerClasses zero({0, 0, 0});
  CHECK(zero.canonical({-7, 3, 1}) == Charge{-7, 3, 1});
  CHECK(zero.torsion_classes({1, 1, 1}).size() == 1);
  CHECK(EulerClasses({0, 3, -2}).torsion_classes({1, 1, 1}).size() == 6);
}

TEST_CASE("z tables") {
  const auto in = oracle::load("borromean_000");
  const auto cd = torsion::conway_data(in);
  const auto z = torsion::z_table(cd, {1, 2, 3});
  REQUIRE(z.size() == 1);
  CHECK(z.begin()->first == torsion::Exponent{-1, -1, -1});
  CHECK(abs(z.begin()->second) == 1);

  torsion::ConwayData direct;
  direct.components = {1, 2};
  direct.table[{1, 2}] = {torsion::LaurentPolynomial(2), true};
  CHECK(torsion::z_table(direct, {1, 2}).empty());
  direct.table[{1, 2}] = {torsion::square_minus_one_product(2), false};
  const auto unit = torsion::z_table(direct, {1, 2});
  REQUIRE(unit.size() == 1);
  CHECK(unit.begin()->first == torsion::Exponent{0, 0});
  CHECK(unit.begin()->second == 1);
}

TEST_CASE("three-torus") {
  const auto r = torsion::compute_torsion(oracle::load("borromean_000"));
  REQUIRE(r.tmap.size() == 1);
  CHECK(r.tmap.begin()->first == Charge{1, 1, 1});
  CHECK(r.tmap.begin()->second == 1);
  CHECK(r.sign_pinned);
  CHECK(r.tau == torsion::GroupRingElement::unit(r.group, r.group->identity()));
}

TEST_CASE("framed borromean rings") {
  const auto r = torsion::compute_torsion(oracle::load("borromean_005"));
  REQUIRE(r.tmap.size() == 1);
  CHECK(r.tmap.begin()->first == Charge{1, 1, 1});
  // Only J = {1,2,3} contributes: T = -sign(f3) z.
  CHECK(r.tmap.begin()->second == -1);
  CHECK_FALSE(r.sign_pinned);
  CHECK(r.tau == torsion::GroupRingElement::unit(r.group, r.group->identity(), -1));

  const auto plus = torsion::compute_torsion(oracle::load("borromean_001"));
  const auto minus = torsion::compute_torsion(oracle::load("borromean_00m1"));
  CHECK(plus.tmap.begin()->second == -minus.tmap.begin()->second);
  CHECK(plus.group->describe() == "Z^2");
}

TEST_CASE("vanishing torsion") {
  const auto r = torsion::compute_torsion(oracle::load("unlink3_000"));
  CHECK(r.tmap.empty());
  CHECK(r.tau.is_zero());
  CHECK(r.sign_pinned);
  CHECK(r.sign_source == torsion::SignSource::ZeroTorsion);
}

TEST_CASE("diagram and polynomial inputs agree") {
  const auto a = torsion::compute_torsion(oracle::load("borromean_000"));
  const auto b = torsion::compute_torsion(oracle::load("borromean_braid_000"));
  const auto c = torsion::compute_torsion(oracle::load("borromean_conway_000"));
  CHECK(a.tmap == b.tmap);
  CHECK(a.tmap == c.tmap);
}

TEST_CASE("equivariance of tau") {
  auto r = torsion::compute_torsion(oracle::load("chain4_0003"));
  REQUIRE(!r.tmap.empty());
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    std::vector<long long> v(4);
    for (auto& x : v) x = static_cast<long long>(rng() % 7) - 3;
    const GroupElement h = r.group->project(v);
    const Charge moved = torsion::act_on_class(r, r.reference, h);
    CHECK(torsion::assemble_tau(r, moved) == r.tau.translate(h));
    const auto rebased = torsion::with_reference(r, moved);
    CHECK(rebased.tau == r.tau.translate(h));
  }
}

TEST_CASE("torsion classes per free coset") {
  const auto r = torsion::compute_torsion(oracle::load("borromean_unknot_0005"));
  CHECK(r.group->torsion_order() == 5);
  CHECK(r.tmap.size() == 5);
  for (const auto& [k, v] : r.tmap) CHECK(v == 1);
}

TEST_CASE("support is complete") {
  for (const char* name : {"chain4_0003", "whitehead_00", "borromean_005"}) {
    const auto in = oracle::load(name);
    const auto cd = torsion::conway_data(in);
    const torsion::SurgeryFormula formula(in, cd);
    const auto r = torsion::torsion_function(in, cd);
    const auto& f = in.framings;
    // Scan a box of charges around the origin.
    std::vector<std::vector<long long>> axes;
    for (long long fj : f) {
      std::vector<long long> axis;
      if (fj == 0) {
        for (long long x = -7; x <= 7; x += 2) axis.push_back(x);
      } else {
        for (long long x = 1; x < 2 * std::llabs(fj); x += 2) axis.push_back(x);
      }
      axes.push_back(axis);
    }
    std::size_t found = 0;
    std::vector<std::size_t> idx(axes.size(), 0);
    for (bool done = false; !done;) {
      Charge k(axes.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = axes[i][idx[i]];
      const Integer v = formula.evaluate(k);
      if (v != 0) {
        ++found;
        const auto it = r.tmap.find(formula.classes().canonical(k));
        CHECK(it != r.tmap.end());
        if (it != r.tmap.end()) CHECK(it->second == v);
      }
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == axes[i].size()) idx[i++] = 0;
      done = i == idx.size();
    }
    CHECK(found == r.tmap.size());
  }
}

TEST_CASE("well-definedness under shifts") {
  const auto in = oracle::load("chain4_000m2");
  const auto cd = torsion::conway_data(in);
  const torsion::SurgeryFormula formula(in, cd);
  const auto r = torsion::torsion_function(in, cd);
  std::mt19937_64 rng(8);
  for (const auto& [k, v] : r.tmap) {
    for (int t = 0; t < 5; ++t) {
      Charge shifted = k;
      for (std::size_t j = 0; j < k.size(); ++j) {
        shifted[j] += 2 * in.framings[j] * (static_cast<long long>(rng() % 9) - 4);
      }
      CHECK(formula.evaluate(shifted) == v);
    }
  }
}

TEST_CASE("sign policy") {
  const auto in = oracle::load("borromean_005");
  auto r = torsion::compute_torsion(in, torsion::SignPolicy{1, true});
  CHECK(r.sign_pinned);
  CHECK(r.sign_source == torsion::SignSource::User);
  CHECK(r.tmap.begin()->second == -1);

  r = torsion::compute_torsion(in, torsion::SignPolicy{-1, true});
  CHECK(r.tmap.begin()->second == 1);

  // b1 = 3: the sum is made nonnegative.
  const auto pinned = torsion::compute_torsion(oracle::load("chain4_000m2"));
  CHECK(pinned.sign_source == torsion::SignSource::CubeSquare);
  Integer sum = 0;
  for (const auto& [k, v] : pinned.tmap) sum += v;
  CHECK(sum == 2);

  const auto raw = torsion::compute_torsion(oracle::load("chain4_000m2"), torsion::SignPolicy{std::nullopt, false});
  CHECK_FALSE(raw.sign_pinned);
}
