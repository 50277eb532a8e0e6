#pragma once

#include "torsion/surgery.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace torsion {

// Rational functional on H / Tors H, one coordinate per free generator.
using CohomologyVector = std::vector<Rational>;

// <h, x>; torsion coordinates pair to zero.
Rational pairing(const GroupElement& h, const CohomologyVector& x);

// Some h0 with bar(tau) = h0^{-1} tau, if any. Candidates are read off from
// matching coefficients, so the search is linear in the support size.
std::optional<GroupElement> duality_witness(const GroupRingElement& tau);

// c(e_reference). Throws ZeroTorsion for tau = 0 and NoDualityWitness when
// bar(tau) is not a translate of tau.
GroupElement extract_char_class(const TorsionResult& r);

// Stores extract_char_class(r) in r.char_class unless tau = 0.
void attach_char_class(TorsionResult& r);

// c(e_k) = h^2 c(e_reference) where e_k = h e_reference.
GroupElement char_class_of(const TorsionResult& r, const Charge& k);

// sum over structures e of T(e) prod_i <c(e), x_i>, from tau(e_ref) and c(e_ref).
Rational moment(const GroupRingElement& tau, const GroupElement& h0,
                const std::vector<CohomologyVector>& xs);
Rational moment(const TorsionResult& r, const std::vector<CohomologyVector>& xs);

// (-1)^{b1+1} sum_e T(e). BettiOutOfScope below b1 = 2.
Rational lescop(const TorsionResult& r);

// sum_e T(e) / |Tors H| for b1 = 3. BettiMismatch otherwise; NegativeSquare
// when the sign is pinned and the value is negative.
Rational triple_cup_square(const TorsionResult& r);

// q = a^2 for some integer a.
bool is_perfect_square(const Rational& q);

// max |<c(e), s>| over structures with T(e) != 0, or 0 if there are none.
Rational thurston_bound(const GroupRingElement& tau, const GroupElement& h0,
                        const CohomologyVector& s);
Rational thurston_bound(const TorsionResult& r, const CohomologyVector& s);

// Push-forward of tau to Z[H / Tors H].
GroupRingElement alexander_projection(const TorsionResult& r);

// Reproducible random rational vectors: numerators in [-bound, bound],
// denominators in [1, bound].
std::vector<CohomologyVector> random_cohomology(std::mt19937_64& rng, std::size_t rank,
                                                std::size_t count, std::int64_t bound = 12);

// Circle bundle over a closed surface of genus g with Euler number n.
// H = Z^{2g} + <t> where the fiber class t is free for n = 0, has order |n|
// otherwise (trivial when |n| = 1). tau = (t - 1)^{2g-2}.
struct CatalogEntry {
  int genus = 0;
  long long euler = 0;
  std::shared_ptr<const AbelianGroup> group;
  GroupElement fiber;
  GroupRingElement tau;
  GroupElement expected_h0;  // t^{2g-2}
};

CatalogEntry circle_bundle_catalog(int genus, long long euler);

struct MomentCheck {
  int m = 0;
  Rational value;  // for the first random vector set
  bool expected_zero = false;
  bool ok = true;  // all trials zero when expected_zero
};

struct BoundCheck {
  CohomologyVector s;
  Rational bound;
};

// Every identity check on one manifold. Attaches c(e_reference) to r.
struct Verification {
  bool duality_ok = false;
  std::optional<GroupElement> h0;
  bool zero_torsion = false;
  std::vector<MomentCheck> moments;
  Rational lescop;
  std::optional<Rational> cup_square;
  std::vector<BoundCheck> bounds;
  bool sign_pinned = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Moments are checked for m = 0 .. max(0, b1 - 3), with `trials` random
// vector sets per m >= 1. Thurston bounds are reported on the free basis.
Verification verify(TorsionResult& r, std::uint64_t seed, std::size_t trials = 100);

struct CatalogCheck {
  bool duality_ok = false;
  std::optional<GroupElement> h0;
  CohomologyVector s;  // dual to the fiber when the fiber is free
  Rational bound;
  Rational expected_bound;  // (2g - 2) |<t, s>|
  Rational fiber_pairing;   // <t, s>
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

CatalogCheck verify_catalog(const CatalogEntry& e);

}  // namespace torsion
