#include "torsion/alexander.hpp"

#include "torsion/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace torsion {

namespace {

class ArcUnion {
 public:
  int find(int x) {
    auto it = parent_.find(x);
    if (it == parent_.end()) return x;
    const int root = find(it->second);
    it->second = root;
    return root;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::map<int, int> parent_;
};

LaurentPolynomial t_power(std::size_t n, std::size_t var, int power) {
  Exponent e(n, 0);
  e[var] = power;
  return LaurentPolynomial::monomial(n, e);
}

// Multiplies by the monomial that makes the least exponent of each variable 0.
LaurentPolynomial clear_row_content(std::vector<LaurentPolynomial>& row, std::size_t n) {
  Exponent lo;
  bool any = false;
  for (const auto& p : row) {
    if (p.is_zero()) continue;
    const Exponent m = p.min_exponents();
    if (!any) {
      lo = m;
      any = true;
    } else {
      for (std::size_t i = 0; i < n; ++i) lo[i] = std::min(lo[i], m[i]);
    }
  }
  if (!any) return LaurentPolynomial::constant(n, 1);
  for (int& x : lo) x = -x;
  for (auto& p : row) p = p.shifted(lo);
  return LaurentPolynomial::monomial(n, lo);
}

}  // namespace

FoxMatrix fox_matrix(const PDCode& d) {
  const std::size_t n = d.num_components();
  ArcUnion arcs;
  for (const Crossing& c : d.crossings()) arcs.unite(c.arcs[1], c.arcs[3]);

  std::map<int, std::size_t> column_of;
  for (const auto& [label, comp] : d.component_of()) {
    const int root = arcs.find(label);
    if (!column_of.contains(root)) column_of.emplace(root, column_of.size());
  }
  const std::size_t num_arcs = column_of.size();
  if (num_arcs != d.crossings().size()) {
    throw Error(ErrorKind::InvalidArgument,
                "Wirtinger presentation is not square: a component never passes under");
  }

  FoxMatrix fox;
  fox.arc_component.assign(num_arcs, 0);
  for (const auto& [label, comp] : d.component_of()) {
    fox.arc_component[column_of.at(arcs.find(label))] = d.position_of(comp);
  }

  const LaurentPolynomial one = LaurentPolynomial::constant(n, 1);
  for (const Crossing& c : d.crossings()) {
    std::vector<LaurentPolynomial> row(num_arcs, LaurentPolynomial(n));
    const std::size_t in = column_of.at(arcs.find(c.arcs[0]));
    const std::size_t out = column_of.at(arcs.find(c.arcs[2]));
    const std::size_t over = column_of.at(arcs.find(c.arcs[1]));
    const std::size_t a = d.position_of(d.over_component(c));
    const std::size_t u = d.position_of(d.under_component(c));
    // Relation x_over^e x_in x_over^-e x_out^-1 with e the crossing sign.
    row[in] += t_power(n, a, c.sign);
    row[out] -= one;
    if (c.sign > 0) {
      row[over] += one - t_power(n, u, 1);
    } else {
      row[over] += t_power(n, a, -1) * (t_power(n, u, 1) - one);
    }
    clear_row_content(row, n);
    fox.matrix.push_back(std::move(row));
  }
  return fox;
}

LaurentPolynomial bareiss_determinant(PolyMatrix m, std::size_t num_vars) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  }
  if (n == 0) return LaurentPolynomial::constant(num_vars, 1);

  LaurentPolynomial prev = LaurentPolynomial::constant(num_vars, 1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    // Sparsest nonzero pivot in the trailing block.
    std::size_t pr = n, pc = n;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        if (m[i][j].is_zero()) continue;
        if (pr == n || m[i][j].size() < m[pr][pc].size()) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == n) return LaurentPolynomial(num_vars);
    if (pr != k) {
      std::swap(m[pr], m[k]);
      negate = !negate;
    }
    if (pc != k) {
      for (auto& row : m) std::swap(row[pc], row[k]);
      negate = !negate;
    }
    const LaurentPolynomial& pivot = m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPolynomial num = pivot * m[i][j];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) num -= m[i][k] * m[k][j];
        m[i][j] = exact_divide(num, prev);
      }
      m[i][k] = LaurentPolynomial(num_vars);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

LaurentPolynomial fox_minor(const FoxMatrix& fox, std::size_t row, std::size_t col,
                            std::size_t num_vars) {
  const std::size_t n = fox.matrix.size();
  PolyMatrix minor;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == row) continue;
    std::vector<LaurentPolynomial> r;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != col) r.push_back(fox.matrix[i][j]);
    }
    minor.push_back(std::move(r));
  }
  return bareiss_determinant(std::move(minor), num_vars);
}

LaurentPolynomial alexander_multi(const PDCode& d) {
  const std::size_t m = d.num_components();
  if (m >= 2 && is_split_diagram(d)) return LaurentPolynomial(m);
  if (d.crossings().empty()) return LaurentPolynomial::constant(m, 1);

  // A component that never passes under lies above the rest: split link.
  std::vector<char> goes_under(m, 0);
  for (const Crossing& c : d.crossings()) goes_under[d.position_of(d.under_component(c))] = 1;
  if (std::find(goes_under.begin(), goes_under.end(), 0) != goes_under.end()) {
    return LaurentPolynomial(m);
  }

  const FoxMatrix fox = fox_matrix(d);
  const std::size_t n = fox.matrix.size();
  const std::size_t row = n - 1;

  auto delta_for_column = [&](std::size_t col) {
    LaurentPolynomial minor = fox_minor(fox, row, col, m);
    if (m == 1) return minor;
    LaurentPolynomial divisor = t_power(m, fox.arc_component[col], 1);
    divisor.add_term(Exponent(m, 0), -1);
    return exact_divide(minor, divisor);
  };

  const std::size_t first = 0;
  const LaurentPolynomial delta = delta_for_column(first);
  if (n >= 2) {
    // Prefer a column on another component for the cross-check.
    std::size_t second = 1;
    for (std::size_t j = 1; j < n; ++j) {
      if (fox.arc_component[j] != fox.arc_component[first]) {
        second = j;
        break;
      }
    }
    const LaurentPolynomial check = delta_for_column(second);
    if (!equal_up_to_unit(delta, check)) {
      throw Error(ErrorKind::NonUnitMismatch,
                  "Alexander minors disagree beyond a unit: " + delta.to_string() + " vs " +
                      check.to_string());
    }
  }
  return delta;
}

LaurentPolynomial canonical_sign(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  std::map<std::vector<int>, Integer, std::greater<>> groups;
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> key = e;
    std::sort(key.begin(), key.end(), std::greater<>());
    groups[key] += c;
  }
  for (const auto& [key, sum] : groups) {
    if (sum != 0) return sum > 0 ? p : -p;
  }
  return p.terms().rbegin()->second > 0 ? p : -p;
}

ConwayNormalization conway_normalize(const LaurentPolynomial& delta, int num_components) {
  if (num_components < 2) {
    throw Error(ErrorKind::InvalidArgument, "Conway normalization needs at least two components");
  }
  if (delta.is_zero()) return {delta, true};
  const Symmetrized s = symmetrize(substitute_squares(delta), num_components);
  return {canonical_sign(s.poly), false};
}

const ConwayEntry& ConwayData::at(const std::vector<int>& subset) const {
  const auto it = table.find(subset);
  if (it == table.end()) {
    std::string name;
    for (int j : subset) name += (name.empty() ? "" : ",") + std::to_string(j);
    throw Error(ErrorKind::InvalidArgument, "no Conway polynomial for sublink {" + name + "}");
  }
  return it->second;
}

std::vector<int> zero_framed_components(const PDCode& d, const std::vector<long long>& framings) {
  const IntMatrix lk = linking_matrix(d, framings);
  const auto& comps = d.components();
  for (std::size_t i = 0; i < lk.rows(); ++i) {
    for (std::size_t j = i + 1; j < lk.cols(); ++j) {
      if (lk(i, j) != 0) {
        throw Error(ErrorKind::NotAlgebraicallySplit,
                    "lk(L" + std::to_string(comps[i]) + ", L" + std::to_string(comps[j]) +
                        ") = " + lk(i, j).str() +
                        "; the surgery formula requires an algebraically split link");
      }
    }
  }
  std::vector<int> zero;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (framings[i] == 0) zero.push_back(comps[i]);
  }
  if (zero.size() < 2) {
    throw Error(ErrorKind::BettiOutOfScope,
                "b1(M) = " + std::to_string(zero.size()) +
                    "; only manifolds with first Betti number >= 2 (at least two 0-framed "
                    "components) are supported");
  }
  return zero;
}

std::vector<std::vector<int>> subsets_containing(const std::vector<int>& all,
                                                 const std::vector<int>& base) {
  std::vector<int> extra;
  for (int c : all) {
    if (std::find(base.begin(), base.end(), c) == base.end()) extra.push_back(c);
  }
  if (extra.size() > 20) throw Error(ErrorKind::InvalidArgument, "too many framed components");
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << extra.size()); ++mask) {
    std::vector<int> j = base;
    for (std::size_t b = 0; b < extra.size(); ++b) {
      if (mask & (std::size_t{1} << b)) j.push_back(extra[b]);
    }
    std::sort(j.begin(), j.end());
    out.push_back(std::move(j));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

ConwayData conway_data(const PDCode& d, const std::vector<long long>& framings) {
  const std::vector<int> zero = zero_framed_components(d, framings);
  ConwayData cd;
  cd.components = d.components();
  for (const auto& subset : subsets_containing(cd.components, zero)) {
    std::set<int> remove;
    for (int c : cd.components) {
      if (!std::binary_search(subset.begin(), subset.end(), c)) remove.insert(c);
    }
    const PDCode sub = delete_components(d, remove);
    const LaurentPolynomial delta = alexander_multi(sub);
    const ConwayNormalization norm = conway_normalize(delta, static_cast<int>(subset.size()));
    cd.table.emplace(subset, ConwayEntry{norm.nabla, norm.sign_pinned});
  }
  return cd;
}

}  // namespace torsion
