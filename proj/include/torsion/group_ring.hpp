#pragma once

#include "torsion/abelian_group.hpp"
#include "torsion/numeric.hpp"

#include <map>
#include <memory>
#include <string>

namespace torsion {

// Finitely supported rational combination of elements of an abelian group.
class GroupRingElement {
 public:
  using TermMap = std::map<GroupElement, Rational>;

  // Zero element over the trivial group.
  GroupRingElement();
  explicit GroupRingElement(std::shared_ptr<const AbelianGroup> group);

  static GroupRingElement unit(std::shared_ptr<const AbelianGroup> group,
                               const GroupElement& h, const Rational& c = 1);

  const AbelianGroup& group() const { return *group_; }
  const std::shared_ptr<const AbelianGroup>& group_ptr() const { return group_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const GroupElement& h) const;
  void add_term(const GroupElement& h, const Rational& c);

  bool is_integral() const;
  // Sum of coefficients.
  Rational augmentation() const;

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  GroupRingElement operator*(const Rational& c) const;
  GroupRingElement operator-() const;

  // h * x, the action of H on the group ring.
  GroupRingElement translate(const GroupElement& h) const;

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

  std::string to_string() const;

 private:
  void check_group(const GroupRingElement& other) const;

  std::shared_ptr<const AbelianGroup> group_;
  TermMap terms_;
};

// Conjugation h -> h^{-1}.
GroupRingElement bar(const GroupRingElement& x);

}  // namespace torsion
