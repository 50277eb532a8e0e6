#include "torsion/laurent.hpp"

#include "torsion/errors.hpp"

#include <algorithm>
#include <sstream>

namespace torsion {

LaurentPolynomial::LaurentPolynomial(std::size_t num_vars) : num_vars_(num_vars) {}

LaurentPolynomial LaurentPolynomial::constant(std::size_t num_vars, const Integer& c) {
  return monomial(num_vars, Exponent(num_vars, 0), c);
}

LaurentPolynomial LaurentPolynomial::monomial(std::size_t num_vars, Exponent e,
                                              const Integer& c) {
  if (e.size() != num_vars) {
    throw Error(ErrorKind::InvalidArgument, "exponent length does not match variable count");
  }
  LaurentPolynomial p(num_vars);
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t num_vars, std::size_t i) {
  Exponent e(num_vars, 0);
  e.at(i) = 1;
  return monomial(num_vars, std::move(e));
}

Integer LaurentPolynomial::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPolynomial::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != num_vars_) {
    throw Error(ErrorKind::InvalidArgument, "exponent length does not match variable count");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Exponent LaurentPolynomial::min_exponents() const {
  Exponent out = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < num_vars_; ++i) out[i] = std::min(out[i], e[i]);
  }
  return out;
}

Exponent LaurentPolynomial::max_exponents() const {
  Exponent out = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < num_vars_; ++i) out[i] = std::max(out[i], e[i]);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& shift) const {
  if (shift.size() != num_vars_) {
    throw Error(ErrorKind::InvalidArgument, "shift length does not match variable count");
  }
  LaurentPolynomial out(num_vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < num_vars_; ++i) f[i] += shift[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::evaluate_univariate(const std::vector<int>& weights) const {
  if (weights.size() != num_vars_) {
    throw Error(ErrorKind::InvalidArgument, "weight length does not match variable count");
  }
  LaurentPolynomial out(1);
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < num_vars_; ++i) d += weights[i] * e[i];
    out.add_term({d}, c);
  }
  return out;
}

Integer LaurentPolynomial::augmentation() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

void LaurentPolynomial::check_vars(const LaurentPolynomial& other) const {
  if (num_vars_ != other.num_vars_) {
    throw Error(ErrorKind::InvalidArgument,
                "variable count mismatch: " + std::to_string(num_vars_) + " vs " +
                    std::to_string(other.num_vars_));
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  check_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  check_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_vars(b);
  LaurentPolynomial out(a.num_vars_);
  if (a.is_zero() || b.is_zero()) return out;
  const std::size_t n = a.num_vars_;
  Exponent e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      Integer prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(e, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest terms first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << "*";
      os << mono;
    }
  }
  return os.str();
}

LaurentPolynomial exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& d) {
  if (p.num_vars() != d.num_vars()) {
    throw Error(ErrorKind::InvalidArgument, "variable count mismatch in division");
  }
  if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  const std::size_t n = p.num_vars();
  if (p.is_zero()) return LaurentPolynomial(n);

  // Strip monomial content so both operands are ordinary polynomials whose
  // minimum exponent in every variable is zero. The quotient then is an
  // ordinary polynomial as well.
  const Exponent p_min = p.min_exponents();
  const Exponent d_min = d.min_exponents();
  Exponent neg_p(n), neg_d(n), back(n);
  for (std::size_t i = 0; i < n; ++i) {
    neg_p[i] = -p_min[i];
    neg_d[i] = -d_min[i];
    back[i] = p_min[i] - d_min[i];
  }
  LaurentPolynomial rem = p.shifted(neg_p);
  const LaurentPolynomial div = d.shifted(neg_d);
  const auto& [lead_e, lead_c] = *div.terms().rbegin();

  LaurentPolynomial quot(n);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    Exponent qe(n);
    for (std::size_t i = 0; i < n; ++i) {
      qe[i] = re[i] - lead_e[i];
      if (qe[i] < 0) {
        throw Error(ErrorKind::NotDivisible,
                    "(" + p.to_string() + ") is not divisible by (" + d.to_string() + ")");
      }
    }
    if (rc % lead_c != 0) {
      throw Error(ErrorKind::NotDivisible,
                  "(" + p.to_string() + ") is not divisible by (" + d.to_string() + ")");
    }
    const LaurentPolynomial step = LaurentPolynomial::monomial(n, qe, rc / lead_c);
    rem -= step * div;
    quot += step;
  }
  LaurentPolynomial result = quot.shifted(back);
  if (!(result * d == p)) {
    throw Error(ErrorKind::NotDivisible, "division check failed for (" + p.to_string() + ")");
  }
  return result;
}

LaurentPolynomial bar(const LaurentPolynomial& p) {
  LaurentPolynomial out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    for (int& x : f) x = -x;
    out.add_term(f, c);
  }
  return out;
}

LaurentPolynomial substitute_squares(const LaurentPolynomial& p) {
  LaurentPolynomial out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    for (int& x : f) x *= 2;
    out.add_term(f, c);
  }
  return out;
}

Symmetrized symmetrize(const LaurentPolynomial& p, int parity) {
  if (p.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "cannot symmetrize the zero polynomial");
  }
  const std::size_t n = p.num_vars();
  const Exponent lo = p.min_exponents();
  const Exponent hi = p.max_exponents();
  Exponent shift(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int span = lo[i] + hi[i];
    if (span % 2 != 0) {
      throw Error(ErrorKind::NotSymmetrizable,
                  "odd exponent span in t" + std::to_string(i + 1) + " of " + p.to_string());
    }
    shift[i] = -span / 2;
  }
  Symmetrized out{p.shifted(shift), shift, SignAmbiguity::GlobalSignUnknown};
  const LaurentPolynomial expected = (parity % 2 == 0) ? out.poly : -out.poly;
  if (!(bar(out.poly) == expected)) {
    throw Error(ErrorKind::NotSymmetrizable,
                p.to_string() + " has no symmetric normalization of parity " +
                    std::to_string(parity));
  }
  return out;
}

bool equal_up_to_unit(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.num_vars() != b.num_vars()) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.size() != b.size()) return false;
  const auto& [ea, ca] = *a.terms().begin();
  const auto& [eb, cb] = *b.terms().begin();
  Exponent shift(a.num_vars());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = ea[i] - eb[i];
  LaurentPolynomial moved = b.shifted(shift);
  if (ca == cb) return moved == a;
  if (ca == -cb) return -moved == a;
  return false;
}

LaurentPolynomial square_minus_one_product(std::size_t num_vars) {
  LaurentPolynomial out = LaurentPolynomial::constant(num_vars, 1);
  for (std::size_t i = 0; i < num_vars; ++i) {
    Exponent e(num_vars, 0);
    e[i] = 2;
    LaurentPolynomial f = LaurentPolynomial::monomial(num_vars, e);
    f.add_term(Exponent(num_vars, 0), -1);
    out = out * f;
  }
  return out;
}

}  // namespace torsion
