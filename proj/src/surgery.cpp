#include "torsion/surgery.hpp"

#include "torsion/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace torsion {

namespace {

std::string charge_string(const Charge& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

long long floor_mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

// Calls fn on every vector in the product of the given coordinate choices.
template <class Fn>
void for_each_product(const std::vector<std::vector<long long>>& choices, Fn&& fn) {
  for (const auto& c : choices) {
    if (c.empty()) return;
  }
  std::vector<std::size_t> idx(choices.size(), 0);
  Charge k(choices.size());
  for (;;) {
    for (std::size_t i = 0; i < choices.size(); ++i) k[i] = choices[i][idx[i]];
    fn(k);
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
      if (i == 0) return;
    }
    if (choices.empty()) return;
  }
}

}  // namespace

std::vector<int> SurgeryInput::components() const {
  if (const auto* d = std::get_if<PDCode>(&link)) return d->components();
  return std::get<ConwayData>(link).components;
}

ValidatedSurgery validate(const SurgeryInput& input) {
  const std::vector<int> comps = input.components();
  if (input.framings.size() != comps.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "expected " + std::to_string(comps.size()) + " framings, got " +
                    std::to_string(input.framings.size()));
  }
  ValidatedSurgery v;
  if (const auto* d = std::get_if<PDCode>(&input.link)) {
    v.zero_framed = zero_framed_components(*d, input.framings);
    v.linking = linking_matrix(*d, input.framings);
  } else {
    // Polynomial data carries no linking numbers; the link is taken to be
    // algebraically split and divisibility of every entry checks it.
    v.linking = IntMatrix(comps.size(), comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      v.linking(i, i) = input.framings[i];
      if (input.framings[i] == 0) v.zero_framed.push_back(comps[i]);
    }
    if (v.zero_framed.size() < 2) {
      throw Error(ErrorKind::BettiOutOfScope,
                  "b1(M) = " + std::to_string(v.zero_framed.size()) +
                      "; only manifolds with first Betti number >= 2 are supported");
    }
  }
  v.group = std::make_shared<const AbelianGroup>(AbelianGroup::from_relations(v.linking));
  return v;
}

ConwayData conway_data(const SurgeryInput& input) {
  if (const auto* d = std::get_if<PDCode>(&input.link)) return conway_data(*d, input.framings);
  const ConwayData& cd = std::get<ConwayData>(input.link);
  const ValidatedSurgery v = validate(input);
  for (const auto& subset : subsets_containing(cd.components, v.zero_framed)) {
    const ConwayEntry& entry = cd.at(subset);
    if (entry.nabla.num_vars() != subset.size()) {
      throw Error(ErrorKind::InvalidArgument, "Conway polynomial has the wrong number of variables");
    }
  }
  return cd;
}

EulerClasses::EulerClasses(std::vector<long long> framings) : framings_(std::move(framings)) {}

bool EulerClasses::is_charge(const Charge& k) const {
  if (k.size() != framings_.size()) return false;
  return std::all_of(k.begin(), k.end(), [](long long x) { return x % 2 != 0; });
}

Charge EulerClasses::canonical(const Charge& k) const {
  if (k.size() != framings_.size()) {
    throw Error(ErrorKind::InvalidArgument, "charge " + charge_string(k) + " has the wrong length");
  }
  if (!is_charge(k)) {
    throw Error(ErrorKind::BadParity,
                "charge " + charge_string(k) + " must have odd coordinates on an algebraically split link");
  }
  Charge out = k;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (framings_[j] != 0) out[j] = floor_mod(k[j], 2 * std::llabs(framings_[j]));
  }
  return out;
}

std::vector<long long> EulerClasses::residues(std::size_t j) const {
  std::vector<long long> out;
  const long long f = std::llabs(framings_.at(j));
  for (long long r = 1; r < 2 * f; r += 2) out.push_back(r);
  return out;
}

std::vector<Charge> EulerClasses::torsion_classes(const Charge& k) const {
  const Charge base = canonical(k);
  std::vector<std::vector<long long>> choices;
  for (std::size_t j = 0; j < base.size(); ++j) {
    choices.push_back(framings_[j] == 0 ? std::vector<long long>{base[j]} : residues(j));
  }
  std::vector<Charge> out;
  for_each_product(choices, [&](const Charge& c) { out.push_back(c); });
  return out;
}

Charge EulerClasses::act(const Charge& k, const std::vector<long long>& v) const {
  if (v.size() != k.size()) throw Error(ErrorKind::InvalidArgument, "action vector has the wrong length");
  Charge out = k;
  for (std::size_t j = 0; j < k.size(); ++j) out[j] += 2 * v[j];
  return canonical(out);
}

std::vector<long long> EulerClasses::difference(const Charge& from, const Charge& to) const {
  const Charge a = canonical(from);
  const Charge b = canonical(to);
  std::vector<long long> v(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) v[j] = (b[j] - a[j]) / 2;
  return v;
}

std::map<Exponent, Integer> z_table(const ConwayData& cd, const std::vector<int>& subset) {
  const ConwayEntry& entry = cd.at(subset);
  if (entry.nabla.is_zero()) return {};
  return exact_divide(entry.nabla, square_minus_one_product(subset.size())).terms();
}

SurgeryFormula::SurgeryFormula(const SurgeryInput& input, const ConwayData& cd)
    : validated_(validate(input)), classes_(input.framings) {
  const std::vector<int> comps = input.components();
  if (cd.components != comps) {
    throw Error(ErrorKind::InvalidArgument, "Conway data does not match the link components");
  }
  global_sign_ = comps.size() % 2 == 1 ? 1 : -1;
  for (const auto& subset : subsets_containing(comps, validated_.zero_framed)) {
    Block b;
    for (int c : subset) {
      const std::size_t pos = std::lower_bound(comps.begin(), comps.end(), c) - comps.begin();
      b.positions.push_back(pos);
      const long long f = input.framings[pos];
      if (f < 0) b.sign = -b.sign;
      if (f != 0) b.sign = -b.sign;
    }
    const ConwayEntry& entry = cd.at(subset);
    if (!entry.nabla.is_zero() && !entry.sign_pinned) data_pinned_ = false;
    b.z = z_table(cd, subset);
    if (!b.z.empty()) blocks_.push_back(std::move(b));
  }
}

Integer SurgeryFormula::evaluate(const Charge& k) const {
  if (!classes_.is_charge(k)) classes_.canonical(k);  // throws the right error
  const auto& f = classes_.framings();
  Integer total = 0;
  for (const Block& b : blocks_) {
    Integer sum = 0;
    for (const auto& [l, z] : b.z) {
      bool match = true;
      for (std::size_t i = 0; i < b.positions.size() && match; ++i) {
        const std::size_t p = b.positions[i];
        const long long target = -k[p];
        if (f[p] == 0) {
          match = l[i] == target;
        } else {
          match = floor_mod(l[i] - target, 2 * std::llabs(f[p])) == 0;
        }
      }
      if (match) sum += z;
    }
    total += b.sign * sum;
  }
  return global_sign_ * total;
}

std::vector<Charge> SurgeryFormula::candidate_classes() const {
  std::set<Charge> found;
  const std::size_t m = classes_.size();
  for (const Block& b : blocks_) {
    for (const auto& [l, z] : b.z) {
      if (std::any_of(l.begin(), l.end(), [](int x) { return x % 2 == 0; })) continue;
      std::vector<std::vector<long long>> choices(m);
      for (std::size_t p = 0; p < m; ++p) choices[p] = classes_.residues(p);
      for (std::size_t i = 0; i < b.positions.size(); ++i) {
        choices[b.positions[i]] = {-static_cast<long long>(l[i])};
      }
      for_each_product(choices, [&](const Charge& k) { found.insert(classes_.canonical(k)); });
    }
  }
  return {found.begin(), found.end()};
}

TorsionResult torsion_function(const SurgeryInput& input, const ConwayData& cd) {
  const SurgeryFormula formula(input, cd);
  const auto& f = input.framings;

  TorsionResult r;
  r.group = formula.validated().group;
  r.components = input.components();
  r.framings = f;
  for (const Charge& k : formula.candidate_classes()) {
    const Integer value = formula.evaluate(k);
    if (value == 0) continue;
    // The value must only depend on k mod 2f.
    Charge shifted = k;
    for (std::size_t j = 0; j < k.size(); ++j) shifted[j] += 2 * f[j] * static_cast<long long>(j + 1);
    if (formula.evaluate(shifted) != value) {
      throw Error(ErrorKind::Consistency,
                  "torsion differs on equivalent charges " + charge_string(k) + " and " +
                      charge_string(shifted));
    }
    r.tmap.emplace(k, value);
  }

  r.reference = r.tmap.empty() ? formula.classes().canonical(Charge(f.size(), 1)) : r.tmap.begin()->first;
  r.tau = assemble_tau(r, r.reference);
  if (r.tmap.empty()) {
    r.sign_pinned = true;
    r.sign_source = SignSource::ZeroTorsion;
  } else if (formula.data_pinned()) {
    r.sign_pinned = true;
    r.sign_source = SignSource::PinnedData;
  }
  return r;
}

GroupRingElement assemble_tau(const TorsionResult& r, const Charge& reference) {
  const EulerClasses classes(r.framings);
  const Charge ref = classes.canonical(reference);
  GroupRingElement tau(r.group);
  for (const auto& [k, value] : r.tmap) {
    const GroupElement h = r.group->project(classes.difference(ref, k));
    tau.add_term(r.group->negate(h), Rational(value));
  }
  return tau;
}

TorsionResult with_reference(TorsionResult r, const Charge& reference) {
  const EulerClasses classes(r.framings);
  const Charge ref = classes.canonical(reference);
  if (r.char_class) {
    const GroupElement h = r.group->project(classes.difference(r.reference, ref));
    r.char_class = r.group->add(*r.char_class, r.group->scale(h, 2));
  }
  r.reference = ref;
  r.tau = assemble_tau(r, ref);
  return r;
}

Charge act_on_class(const TorsionResult& r, const Charge& k, const GroupElement& h) {
  return EulerClasses(r.framings).act(k, r.group->lift(h));
}

namespace {

void flip(TorsionResult& r) {
  for (auto& [k, v] : r.tmap) v = -v;
  r.tau = -r.tau;
}

}  // namespace

void apply_sign_policy(TorsionResult& r, const SignPolicy& policy) {
  if (policy.user_sign) {
    if (*policy.user_sign != 1 && *policy.user_sign != -1) {
      throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
    }
    if (*policy.user_sign < 0) flip(r);
    r.sign_pinned = true;
    r.sign_source = SignSource::User;
    return;
  }
  if (r.sign_pinned || !policy.automatic) return;
  if (r.betti() == 3) {
    Integer sum = 0;
    for (const auto& [k, v] : r.tmap) sum += v;
    if (sum == 0) return;
    if (sum < 0) flip(r);
    r.sign_pinned = true;
    r.sign_source = SignSource::CubeSquare;
  }
}

TorsionResult compute_torsion(const SurgeryInput& input, const SignPolicy& policy) {
  validate(input);
  const ConwayData cd = conway_data(input);
  TorsionResult r = torsion_function(input, cd);
  apply_sign_policy(r, policy);
  return r;
}

}  // namespace torsion
