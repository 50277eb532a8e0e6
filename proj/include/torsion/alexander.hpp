#pragma once

#include "torsion/laurent.hpp"
#include "torsion/pd_code.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace torsion {

using PolyMatrix = std::vector<std::vector<LaurentPolynomial>>;

// Abelianized Fox Jacobian of the Wirtinger presentation: one row per
// crossing, one column per over-arc. Variables follow d.components().
struct FoxMatrix {
  PolyMatrix matrix;
  std::vector<std::size_t> arc_component;  // variable index of each column
};

// Requires every component to pass under at least once.
FoxMatrix fox_matrix(const PDCode& d);

// Determinant of a square matrix over Z[t^{+-1}] by fraction-free elimination.
// Every intermediate division is exact; a failed division throws.
LaurentPolynomial bareiss_determinant(PolyMatrix m, std::size_t num_vars);

// Minor of the Fox matrix with the given row and column removed.
LaurentPolynomial fox_minor(const FoxMatrix& fox, std::size_t row, std::size_t col,
                            std::size_t num_vars);

// Multivariable Alexander polynomial, defined up to +-t^a. For two or more
// components the minor is divided by (t_j - 1) where j owns the removed
// column; for a knot the minor itself is returned. Split diagrams give 0.
// Two column choices are cross-checked and must agree up to a unit.
LaurentPolynomial alexander_multi(const PDCode& d);

struct ConwayNormalization {
  LaurentPolynomial nabla;
  bool sign_pinned = false;
};

// nabla = t^a * delta(t^2) with bar(nabla) = (-1)^m nabla. The overall sign
// is fixed by canonical_sign, which is a convention, so sign_pinned is false
// unless delta is zero.
ConwayNormalization conway_normalize(const LaurentPolynomial& delta, int num_components);

// Multiplies by -1 if needed so that a permutation-invariant reference
// coefficient is positive: terms are grouped by their exponent multiset, and
// the first group (in decreasing multiset order) with nonzero coefficient sum
// must sum to a positive number. Falls back to the lex-leading coefficient.
LaurentPolynomial canonical_sign(const LaurentPolynomial& p);

struct ConwayEntry {
  LaurentPolynomial nabla;  // variables follow the sorted subset J
  bool sign_pinned = false;
};

// Conway polynomials of the sublinks L^J that the surgery formula needs.
struct ConwayData {
  std::vector<int> components;                   // sorted component indices
  std::map<std::vector<int>, ConwayEntry> table;  // subset J (sorted) -> entry

  const ConwayEntry& at(const std::vector<int>& subset) const;
};

// Zero-framed components J0 of an algebraically split link; throws
// NotAlgebraicallySplit or BettiOutOfScope.
std::vector<int> zero_framed_components(const PDCode& d, const std::vector<long long>& framings);

// Every subset J with J0 <= J <= {1..m}, in increasing size then lex order.
std::vector<std::vector<int>> subsets_containing(const std::vector<int>& all,
                                                 const std::vector<int>& base);

ConwayData conway_data(const PDCode& d, const std::vector<long long>& framings);

}  // namespace torsion
