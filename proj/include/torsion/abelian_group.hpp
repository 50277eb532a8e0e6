#pragma once

#include "torsion/integer_matrix.hpp"
#include "torsion/numeric.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace torsion {

// Element of Z^b + Z/d_1 + ... + Z/d_r in canonical coordinates: free part
// unrestricted, torsion coordinate i reduced into [0, d_i).
struct GroupElement {
  std::vector<long long> free;
  std::vector<long long> tors;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Finitely generated abelian group H = Z^m / (relations), stored as rank plus
// invariant factors d_1 | d_2 | ... (each >= 2), together with a projection
// from the generator lattice Z^m (for surgery: the meridians) onto canonical
// coordinates.
class AbelianGroup {
 public:
  // Z^rank + Z/d_1 + ..., generators mapped identically onto coordinates.
  AbelianGroup(std::size_t rank, std::vector<long long> invariant_factors);

  // Cokernel of the relation matrix: Z^rows / (column span of relations).
  static AbelianGroup from_relations(const IntMatrix& relations);

  std::size_t rank() const { return rank_; }
  const std::vector<long long>& invariant_factors() const { return factors_; }
  Integer torsion_order() const;
  std::size_t num_generators() const { return projection_.cols(); }
  const IntMatrix& projection() const { return projection_; }

  GroupElement identity() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(const GroupElement& a, long long k) const;
  GroupElement reduce(GroupElement a) const;
  bool is_identity(const GroupElement& a) const { return a == identity(); }

  // Image of an integer vector on the generators.
  GroupElement project(const std::vector<long long>& v) const;
  // Some integer vector v with project(v) == h.
  std::vector<long long> lift(const GroupElement& h) const;

  // Basis element of the free part (0-based) / torsion summand.
  GroupElement free_generator(std::size_t i) const;
  GroupElement torsion_generator(std::size_t i) const;

  bool same_structure(const AbelianGroup& other) const {
    return rank_ == other.rank_ && factors_ == other.factors_;
  }

  // "Z^2 + Z/5"
  std::string describe() const;

 private:
  AbelianGroup() = default;
  void normalize_free_rows();

  std::size_t rank_ = 0;
  std::vector<long long> factors_;
  IntMatrix projection_;  // (rank + #factors) x m; torsion rows first
  IntMatrix section_;     // m x (rank + #factors): a right inverse mod relations
};

}  // namespace torsion
