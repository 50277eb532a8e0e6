#pragma once

// Corpus access and independent oracles shared by the unit and acceptance tests.

#include "torsion/alexander.hpp"
#include "torsion/io.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

inline std::string corpus_path(const std::string& name) {
  return std::string(TORSION_CORPUS_DIR) + "/" + name + ".json";
}

inline torsion::SurgeryInput load(const std::string& name) {
  return torsion::read_input_file(corpus_path(name));
}

inline torsion::PDCode load_diagram(const std::string& name) {
  return std::get<torsion::PDCode>(load(name).link);
}

// Dense univariate polynomial, index = power of t.
using Poly = std::vector<long long>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline void poly_add(Poly& a, const Poly& b, long long sign) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
}

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  }
  return inv % 2 ? -1 : 1;
}

// det(V - t V^T) by expansion over all permutations.
inline Poly seifert_alexander(const std::vector<std::vector<long long>>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly det;
  do {
    Poly term{1};
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = perm[i];
      term = poly_mul(term, Poly{v[i][j], -v[j][i]});
    }
    poly_add(det, term, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  while (!det.empty() && det.back() == 0) det.pop_back();
  return det;
}

// a(t) and a univariate Laurent polynomial agree up to +-t^k.
inline bool same_up_to_unit(Poly a, const torsion::LaurentPolynomial& p) {
  std::size_t lead = 0;
  while (lead < a.size() && a[lead] == 0) ++lead;
  a.erase(a.begin(), a.begin() + static_cast<long>(lead));
  torsion::LaurentPolynomial q(1);
  for (std::size_t i = 0; i < a.size(); ++i) q.add_term({static_cast<int>(i)}, a[i]);
  return torsion::equal_up_to_unit(q, p);
}

// Determinant over the Laurent ring by full permutation expansion.
inline torsion::LaurentPolynomial leibniz_determinant(const torsion::PolyMatrix& m, std::size_t nvars) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  torsion::LaurentPolynomial det(nvars);
  do {
    torsion::LaurentPolynomial term = torsion::LaurentPolynomial::constant(nvars, permutation_sign(perm));
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// prod_i (t_i - 1)
inline torsion::LaurentPolynomial minus_one_product(std::size_t nvars) {
  torsion::LaurentPolynomial out = torsion::LaurentPolynomial::constant(nvars, 1);
  for (std::size_t i = 0; i < nvars; ++i) {
    torsion::LaurentPolynomial f = torsion::LaurentPolynomial::variable(nvars, i);
    f.add_term(torsion::Exponent(nvars, 0), -1);
    out = out * f;
  }
  return out;
}

}  // namespace oracle
