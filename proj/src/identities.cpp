#include "torsion/identities.hpp"

#include "torsion/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace torsion {

Rational pairing(const GroupElement& h, const CohomologyVector& x) {
  if (x.size() != h.free.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "cohomology vector has " + std::to_string(x.size()) + " coordinates, expected " +
                    std::to_string(h.free.size()));
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += Rational(h.free[i]) * x[i];
  return sum;
}

std::optional<GroupElement> duality_witness(const GroupRingElement& tau) {
  if (tau.is_zero()) return std::nullopt;
  const AbelianGroup& g = tau.group();
  const GroupRingElement conj = bar(tau);
  const auto& [x, a] = *conj.terms().begin();
  for (const auto& [y, b] : tau.terms()) {
    if (b != a) continue;
    // h0^{-1} y = x
    const GroupElement h0 = g.add(y, g.negate(x));
    if (tau.translate(g.negate(h0)) == conj) return h0;
  }
  return std::nullopt;
}

GroupElement extract_char_class(const TorsionResult& r) {
  if (r.tau.is_zero()) throw Error(ErrorKind::ZeroTorsion, "torsion vanishes identically");
  auto h0 = duality_witness(r.tau);
  if (!h0) {
    throw Error(ErrorKind::NoDualityWitness,
                "bar(tau) is not a translate of tau: " + r.tau.to_string());
  }
  return *h0;
}

void attach_char_class(TorsionResult& r) {
  if (!r.tau.is_zero()) r.char_class = extract_char_class(r);
}

GroupElement char_class_of(const TorsionResult& r, const Charge& k) {
  const GroupElement c = r.char_class ? *r.char_class : extract_char_class(r);
  const EulerClasses classes(r.framings);
  const GroupElement h = r.group->project(classes.difference(r.reference, k));
  return r.group->add(c, r.group->scale(h, 2));
}

Rational moment(const GroupRingElement& tau, const GroupElement& h0,
                const std::vector<CohomologyVector>& xs) {
  const AbelianGroup& g = tau.group();
  Rational sum = 0;
  for (const auto& [h, a] : tau.terms()) {
    // The term a*h comes from the structure h^{-1} e, whose class is h^{-2} h0.
    const GroupElement c = g.add(h0, g.scale(h, -2));
    Rational prod = a;
    for (const auto& x : xs) prod *= pairing(c, x);
    sum += prod;
  }
  return sum;
}

Rational moment(const TorsionResult& r, const std::vector<CohomologyVector>& xs) {
  if (r.tau.is_zero()) return 0;
  const GroupElement h0 = r.char_class ? *r.char_class : extract_char_class(r);
  return moment(r.tau, h0, xs);
}

Rational lescop(const TorsionResult& r) {
  if (r.betti() < 2) {
    throw Error(ErrorKind::BettiOutOfScope, "the Lescop relation needs b1 >= 2");
  }
  const Rational sum = r.tau.augmentation();
  return r.betti() % 2 == 1 ? sum : Rational(-sum);
}

Rational triple_cup_square(const TorsionResult& r) {
  if (r.betti() != 3) {
    throw Error(ErrorKind::BettiMismatch,
                "the triple cup product square needs b1 = 3, got " + std::to_string(r.betti()));
  }
  const Rational q = r.tau.augmentation() / Rational(r.group->torsion_order());
  if (q < 0 && r.sign_pinned) {
    throw Error(ErrorKind::NegativeSquare,
                "sum of the torsion function is negative under a pinned sign: " + to_string(q));
  }
  return q;
}

bool is_perfect_square(const Rational& q) {
  if (q < 0 || boost::multiprecision::denominator(q) != 1) return false;
  const Integer num = boost::multiprecision::numerator(q);
  const Integer a = boost::multiprecision::sqrt(num);
  return a * a == num;
}

Rational thurston_bound(const GroupRingElement& tau, const GroupElement& h0,
                        const CohomologyVector& s) {
  const AbelianGroup& g = tau.group();
  Rational best = 0;
  for (const auto& [h, a] : tau.terms()) {
    Rational v = pairing(g.add(h0, g.scale(h, -2)), s);
    if (v < 0) v = -v;
    if (v > best) best = v;
  }
  return best;
}

Rational thurston_bound(const TorsionResult& r, const CohomologyVector& s) {
  if (r.tau.is_zero()) return 0;
  const GroupElement h0 = r.char_class ? *r.char_class : extract_char_class(r);
  return thurston_bound(r.tau, h0, s);
}

GroupRingElement alexander_projection(const TorsionResult& r) {
  auto free = std::make_shared<const AbelianGroup>(r.group->rank(), std::vector<long long>{});
  GroupRingElement out(free);
  for (const auto& [h, a] : r.tau.terms()) out.add_term(GroupElement{h.free, {}}, a);
  return out;
}

std::vector<CohomologyVector> random_cohomology(std::mt19937_64& rng, std::size_t rank,
                                                std::size_t count, std::int64_t bound) {
  // Plain modular reduction keeps the stream identical across standard libraries.
  const auto draw = [&](std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(rng() % span);
  };
  std::vector<CohomologyVector> out(count, CohomologyVector(rank));
  for (auto& x : out) {
    for (auto& c : x) c = Rational(draw(-bound, bound), draw(1, bound));
  }
  return out;
}

CatalogEntry circle_bundle_catalog(int genus, long long euler) {
  if (genus < 1) {
    throw Error(ErrorKind::BadGenus, "genus must be at least 1, got " + std::to_string(genus));
  }
  CatalogEntry e;
  e.genus = genus;
  e.euler = euler;
  const std::size_t surface_rank = 2 * static_cast<std::size_t>(genus);
  const long long order = std::llabs(euler);
  if (euler == 0) {
    e.group = std::make_shared<const AbelianGroup>(surface_rank + 1, std::vector<long long>{});
    e.fiber = e.group->free_generator(surface_rank);
  } else if (order >= 2) {
    e.group = std::make_shared<const AbelianGroup>(surface_rank, std::vector<long long>{order});
    e.fiber = e.group->torsion_generator(0);
  } else {
    e.group = std::make_shared<const AbelianGroup>(surface_rank, std::vector<long long>{});
    e.fiber = e.group->identity();
  }

  const int power = 2 * genus - 2;
  e.tau = GroupRingElement(e.group);
  Integer binom = 1;
  for (int j = 0; j <= power; ++j) {
    const Integer c = ((power - j) % 2 == 0) ? binom : Integer(-binom);
    e.tau.add_term(e.group->scale(e.fiber, j), Rational(c));
    binom = binom * (power - j) / (j + 1);
  }
  e.expected_h0 = e.group->scale(e.fiber, power);
  return e;
}

Verification verify(TorsionResult& r, std::uint64_t seed, std::size_t trials) {
  Verification v;
  v.sign_pinned = r.sign_pinned;
  const std::size_t b = r.betti();

  if (r.tau.is_zero()) {
    v.zero_torsion = true;
    v.duality_ok = true;
  } else if (auto h0 = duality_witness(r.tau)) {
    v.duality_ok = true;
    v.h0 = h0;
    r.char_class = h0;
  } else {
    v.failures.push_back("NoDualityWitness: bar(tau) is not a translate of tau");
  }

  std::mt19937_64 rng(seed);
  const int top = b >= 3 ? static_cast<int>(b) - 3 : 0;
  for (int m = 0; m <= top; ++m) {
    MomentCheck mc;
    mc.m = m;
    mc.expected_zero = m <= static_cast<int>(b) - 4 || (b % 2 == 0 && m == static_cast<int>(b) - 3);
    if (!v.duality_ok) continue;
    const std::size_t runs = m == 0 ? 1 : trials;
    for (std::size_t t = 0; t < runs; ++t) {
      const auto xs = random_cohomology(rng, b, static_cast<std::size_t>(m));
      const Rational value = v.zero_torsion ? Rational(0) : moment(r.tau, *v.h0, xs);
      if (t == 0) mc.value = value;
      if (mc.expected_zero && value != 0) mc.ok = false;
    }
    if (!mc.ok) v.failures.push_back("moment m=" + std::to_string(m) + " does not vanish");
    v.moments.push_back(mc);
  }

  v.lescop = lescop(r);

  if (b == 3) {
    try {
      v.cup_square = triple_cup_square(r);
      if (r.sign_pinned) {
        const Rational q = *v.cup_square;
        if (!is_perfect_square(q)) {
          v.failures.push_back("cup square " + to_string(q) + " is not the square of an integer");
        }
      }
    } catch (const Error& e) {
      v.failures.push_back(std::string(error_kind_name(e.kind())) + ": " + e.what());
    }
  }

  if (v.duality_ok) {
    for (std::size_t i = 0; i < b; ++i) {
      CohomologyVector s(b, Rational(0));
      s[i] = 1;
      const Rational bound = v.zero_torsion ? Rational(0) : thurston_bound(r.tau, *v.h0, s);
      v.bounds.push_back({s, bound});
    }
  }
  return v;
}

CatalogCheck verify_catalog(const CatalogEntry& e) {
  CatalogCheck c;
  const AbelianGroup& g = *e.group;
  c.s.assign(g.rank(), Rational(0));
  if (!c.s.empty()) c.s.back() = 1;
  if (e.tau.is_zero()) {
    // |n| = 1 and g >= 2: t is trivial, so (t - 1)^{2g-2} = 0.
    c.duality_ok = true;
    return c;
  }
  c.h0 = duality_witness(e.tau);
  c.duality_ok = c.h0.has_value();
  if (!c.duality_ok) {
    c.failures.push_back("NoDualityWitness");
    return c;
  }
  // A translation-invariant tau has several witnesses; t^{2g-2} must be one.
  if (!(e.tau.translate(g.negate(e.expected_h0)) == bar(e.tau))) {
    c.failures.push_back("t^(2g-2) is not a duality witness");
  }
  c.fiber_pairing = pairing(e.fiber, c.s);
  c.bound = thurston_bound(e.tau, e.expected_h0, c.s);
  const Rational abs_pair = c.fiber_pairing < 0 ? Rational(-c.fiber_pairing) : c.fiber_pairing;
  c.expected_bound = Rational(2 * e.genus - 2) * abs_pair;
  if (c.bound != c.expected_bound) {
    c.failures.push_back("Thurston bound " + to_string(c.bound) + " differs from (2g-2)|<t,s>| = " +
                         to_string(c.expected_bound));
  }
  return c;
}

}  // namespace torsion
