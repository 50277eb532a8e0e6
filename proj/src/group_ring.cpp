#include "torsion/group_ring.hpp"

#include "torsion/errors.hpp"

#include <sstream>

namespace torsion {

GroupRingElement::GroupRingElement()
    : group_(std::make_shared<const AbelianGroup>(0, std::vector<long long>{})) {}

GroupRingElement::GroupRingElement(std::shared_ptr<const AbelianGroup> group)
    : group_(std::move(group)) {
  if (!group_) throw Error(ErrorKind::InvalidArgument, "group ring element needs a group");
}

GroupRingElement GroupRingElement::unit(std::shared_ptr<const AbelianGroup> group,
                                        const GroupElement& h, const Rational& c) {
  GroupRingElement x(std::move(group));
  x.add_term(h, c);
  return x;
}

Rational GroupRingElement::coefficient(const GroupElement& h) const {
  const auto it = terms_.find(group_->reduce(h));
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupRingElement::add_term(const GroupElement& h, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(group_->reduce(h), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool GroupRingElement::is_integral() const {
  for (const auto& [h, c] : terms_) {
    if (boost::multiprecision::denominator(c) != 1) return false;
  }
  return true;
}

Rational GroupRingElement::augmentation() const {
  Rational sum = 0;
  for (const auto& [h, c] : terms_) sum += c;
  return sum;
}

void GroupRingElement::check_group(const GroupRingElement& other) const {
  if (group_ != other.group_ && !group_->same_structure(*other.group_)) {
    throw Error(ErrorKind::GroupMismatch, "group ring elements over " + group_->describe() +
                                              " and " + other.group_->describe());
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  check_group(other);
  for (const auto& [h, c] : other.terms_) add_term(h, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  check_group(other);
  for (const auto& [h, c] : other.terms_) add_term(h, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  a.check_group(b);
  GroupRingElement out(a.group_);
  for (const auto& [ha, ca] : a.terms_) {
    for (const auto& [hb, cb] : b.terms_) out.add_term(a.group_->add(ha, hb), ca * cb);
  }
  return out;
}

GroupRingElement GroupRingElement::operator*(const Rational& c) const {
  GroupRingElement out(group_);
  if (c == 0) return out;
  for (const auto& [h, x] : terms_) out.terms_.emplace(h, x * c);
  return out;
}

GroupRingElement GroupRingElement::operator-() const { return *this * Rational(-1); }

GroupRingElement GroupRingElement::translate(const GroupElement& h) const {
  GroupRingElement out(group_);
  for (const auto& [g, c] : terms_) out.terms_.emplace(group_->add(g, h), c);
  return out;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return a.group_->same_structure(*b.group_) && a.terms_ == b.terms_;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [h, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << torsion::to_string(c) << "*[";
    for (std::size_t i = 0; i < h.free.size(); ++i) os << (i ? "," : "") << h.free[i];
    if (!h.tors.empty()) {
      os << ";";
      for (std::size_t i = 0; i < h.tors.size(); ++i) os << (i ? "," : "") << h.tors[i];
    }
    os << "]";
  }
  return os.str();
}

GroupRingElement bar(const GroupRingElement& x) {
  GroupRingElement out(x.group_ptr());
  for (const auto& [h, c] : x.terms()) out.add_term(x.group().negate(h), c);
  return out;
}

}  // namespace torsion
