#pragma once

#include "torsion/abelian_group.hpp"
#include "torsion/alexander.hpp"
#include "torsion/group_ring.hpp"
#include "torsion/pd_code.hpp"

#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace torsion {

// Integer vector on the link components, k_i = 1 mod 2 for split links.
using Charge = std::vector<long long>;

// A framed link: either a diagram (Conway data derived from it) or a direct
// table of Conway polynomials of the required sublinks.
struct SurgeryInput {
  std::variant<PDCode, ConwayData> link;
  std::vector<long long> framings;

  std::vector<int> components() const;
};

struct ValidatedSurgery {
  std::shared_ptr<const AbelianGroup> group;  // H_1(M) with meridian projection
  std::vector<int> zero_framed;               // J0, as component indices
  IntMatrix linking;
};

// Checks that the link is algebraically split with at least two 0-framed
// components and computes H_1(M) = Z^m / Lambda Z^m.
ValidatedSurgery validate(const SurgeryInput& input);

ConwayData conway_data(const SurgeryInput& input);

// Euler structures of a surgery on an algebraically split link, represented
// by charges modulo 2f. Coordinates with f_j != 0 are reduced into
// [0, 2|f_j|); 0-framed coordinates are exact integers.
class EulerClasses {
 public:
  explicit EulerClasses(std::vector<long long> framings);

  const std::vector<long long>& framings() const { return framings_; }
  std::size_t size() const { return framings_.size(); }

  bool is_charge(const Charge& k) const;
  // Throws Error(BadParity) if k is not a charge.
  Charge canonical(const Charge& k) const;
  // The |f_j| admissible residues for a framed coordinate.
  std::vector<long long> residues(std::size_t j) const;
  // Every class agreeing with k in the 0-framed coordinates: prod |f_j| of them.
  std::vector<Charge> torsion_classes(const Charge& k) const;

  // [v] acts by k -> k + 2v.
  Charge act(const Charge& k, const std::vector<long long>& v) const;
  // Some v with canonical(from + 2v) == canonical(to).
  std::vector<long long> difference(const Charge& from, const Charge& to) const;

 private:
  std::vector<long long> framings_;
};

// Coefficients z_l of nabla_{L^J} / prod_{j in J} (t_j^2 - 1).
std::map<Exponent, Integer> z_table(const ConwayData& cd, const std::vector<int>& subset);

enum class SignSource {
  Unpinned,
  ZeroTorsion,     // T vanishes, nothing to pin
  PinnedData,      // every contributing Conway polynomial carried a pinned sign
  CubeSquare,      // b1 = 3 and sum of T made nonnegative
  User,            // explicitly asserted by the caller
};

struct SignPolicy {
  std::optional<int> user_sign;  // +1 or -1 applied to the engine's convention
  bool automatic = true;         // use the b1 = 3 positivity rule when possible
};

struct TorsionResult {
  std::shared_ptr<const AbelianGroup> group;
  std::vector<int> components;
  std::vector<long long> framings;
  std::map<Charge, Integer> tmap;  // canonical charge -> T_M(e_k), nonzero only
  Charge reference;                // canonical charge of the reference structure
  GroupRingElement tau;            // tau(M, e_reference)
  bool sign_pinned = false;
  SignSource sign_source = SignSource::Unpinned;
  std::optional<GroupElement> char_class;  // c(e_reference) once extracted

  std::size_t betti() const { return group->rank(); }
};

// Evaluates the surgery formula at a single charge.
class SurgeryFormula {
 public:
  SurgeryFormula(const SurgeryInput& input, const ConwayData& cd);

  Integer evaluate(const Charge& k) const;
  // Classes on which T can be nonzero, derived from the z-table supports.
  std::vector<Charge> candidate_classes() const;
  const EulerClasses& classes() const { return classes_; }
  const ValidatedSurgery& validated() const { return validated_; }
  // True when every Conway polynomial that can contribute has a pinned sign.
  bool data_pinned() const { return data_pinned_; }

 private:
  struct Block {
    std::vector<std::size_t> positions;  // coordinates of J in the charge vector
    int sign = 1;                        // (-1)^{|J\J0|} prod sign(f_j)
    std::map<Exponent, Integer> z;
  };

  ValidatedSurgery validated_;
  EulerClasses classes_;
  std::vector<Block> blocks_;
  int global_sign_ = 1;  // (-1)^{m+1}
  bool data_pinned_ = true;
};

TorsionResult torsion_function(const SurgeryInput& input, const ConwayData& cd);

// tau(M, e) = sum_h T(h e) h^{-1} for the structure e of the given charge.
GroupRingElement assemble_tau(const TorsionResult& r, const Charge& reference);

// Re-bases the result on another reference structure.
TorsionResult with_reference(TorsionResult r, const Charge& reference);

// h . [k] for a group element h, via an integer lift of h.
Charge act_on_class(const TorsionResult& r, const Charge& k, const GroupElement& h);

void apply_sign_policy(TorsionResult& r, const SignPolicy& policy);

// validate -> Conway data -> surgery formula -> sign policy.
TorsionResult compute_torsion(const SurgeryInput& input, const SignPolicy& policy = {});

}  // namespace torsion
