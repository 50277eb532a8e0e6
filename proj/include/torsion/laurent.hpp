#pragma once

#include "torsion/numeric.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace torsion {

using Exponent = std::vector<int>;

// Sparse multivariate Laurent polynomial in t_1, ..., t_n with exact integer
// coefficients. Terms are kept in lexicographic exponent order and zero
// coefficients are never stored, so structural equality is polynomial equality.
class LaurentPolynomial {
 public:
  using TermMap = std::map<Exponent, Integer>;

  explicit LaurentPolynomial(std::size_t num_vars = 1);

  static LaurentPolynomial constant(std::size_t num_vars, const Integer& c);
  static LaurentPolynomial monomial(std::size_t num_vars, Exponent e,
                                    const Integer& c = 1);
  // t_i (0-based index).
  static LaurentPolynomial variable(std::size_t num_vars, std::size_t i);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Integer& c);

  // Per-variable minimum / maximum exponent. Undefined on the zero polynomial.
  Exponent min_exponents() const;
  Exponent max_exponents() const;

  // t^shift * p
  LaurentPolynomial shifted(const Exponent& shift) const;

  // Substitutes t_i -> t^{weights_i} for a single variable t.
  LaurentPolynomial evaluate_univariate(const std::vector<int>& weights) const;

  // Substitutes t_i -> 1 for every i.
  Integer augmentation() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Integer& c);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Integer& c) { return a *= c; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  // Human-readable form such as "t1^2*t2^-1 - 3".
  std::string to_string() const;

 private:
  void check_vars(const LaurentPolynomial& other) const;

  std::size_t num_vars_;
  TermMap terms_;
};

// Returns q with q * d == p. Throws Error(NotDivisible) when no such Laurent
// polynomial exists, and Error(InvalidArgument) when d is zero.
LaurentPolynomial exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& d);

// Conjugation t^e -> t^{-e}.
LaurentPolynomial bar(const LaurentPolynomial& p);

// p(t_1, ..., t_n) -> p(t_1^2, ..., t_n^2)
LaurentPolynomial substitute_squares(const LaurentPolynomial& p);

enum class SignAmbiguity { Determined, GlobalSignUnknown };

struct Symmetrized {
  LaurentPolynomial poly;
  Exponent shift;
  SignAmbiguity sign = SignAmbiguity::GlobalSignUnknown;
};

// Finds the unique monomial shift a with bar(t^a p) == (-1)^parity t^a p.
// Throws Error(NotSymmetrizable) if p is not symmetric up to a monomial.
Symmetrized symmetrize(const LaurentPolynomial& p, int parity);

// True when a == u * b for some unit u = +-t^e.
bool equal_up_to_unit(const LaurentPolynomial& a, const LaurentPolynomial& b);

// prod_i (t_i^2 - 1) over the given number of variables.
LaurentPolynomial square_minus_one_product(std::size_t num_vars);

}  // namespace torsion
