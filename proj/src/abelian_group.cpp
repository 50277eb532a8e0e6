#include "torsion/abelian_group.hpp"

#include "torsion/errors.hpp"

namespace torsion {

namespace {

long long floor_mod(long long a, long long d) {
  const long long r = a % d;
  return r < 0 ? r + d : r;
}

}  // namespace

AbelianGroup::AbelianGroup(std::size_t rank, std::vector<long long> invariant_factors)
    : rank_(rank), factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) {
      throw Error(ErrorKind::InvalidArgument, "invariant factors must be at least 2");
    }
    if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
      throw Error(ErrorKind::InvalidArgument, "invariant factors must form a divisibility chain");
    }
  }
  const std::size_t n = rank_ + factors_.size();
  projection_ = IntMatrix::identity(n);
  section_ = IntMatrix::identity(n);
}

AbelianGroup AbelianGroup::from_relations(const IntMatrix& relations) {
  const SmithForm s = smith_normal_form(relations);
  const std::size_t m = relations.rows();
  const IntMatrix u_inv = unimodular_inverse(s.U);

  std::vector<std::size_t> tors_rows, free_rows;
  AbelianGroup g;
  for (std::size_t i = 0; i < m; ++i) {
    const Integer d = i < relations.cols() ? s.D(i, i) : Integer(0);
    if (d == 0) {
      free_rows.push_back(i);
    } else if (d != 1) {
      tors_rows.push_back(i);
      g.factors_.push_back(to_int64(d));
    }
  }
  g.rank_ = free_rows.size();

  std::vector<std::size_t> order = tors_rows;
  order.insert(order.end(), free_rows.begin(), free_rows.end());
  g.projection_ = IntMatrix(order.size(), m);
  g.section_ = IntMatrix(m, order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      g.projection_(k, j) = s.U(order[k], j);
      g.section_(j, k) = u_inv(j, order[k]);
    }
  }
  g.normalize_free_rows();
  return g;
}

// Puts the free rows of the projection into Hermite normal form. Row
// operations on the projection are mirrored as inverse column operations on
// the section. For a diagonal relation matrix this makes the free
// coordinates the generators whose relation is zero, in order.
void AbelianGroup::normalize_free_rows() {
  const std::size_t nt = factors_.size();
  const std::size_t end = nt + rank_;
  const std::size_t m = projection_.cols();
  auto add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    projection_.add_row_multiple(dst, src, k);
    section_.add_col_multiple(src, dst, -k);
  };
  auto swap = [&](std::size_t a, std::size_t b) {
    projection_.swap_rows(a, b);
    section_.swap_cols(a, b);
  };
  auto negate = [&](std::size_t r) {
    projection_.negate_row(r);
    for (std::size_t j = 0; j < section_.rows(); ++j) section_(j, r) = -section_(j, r);
  };

  std::size_t r = nt;
  for (std::size_t c = 0; c < m && r < end; ++c) {
    for (;;) {
      std::size_t best = end;
      for (std::size_t i = r; i < end; ++i) {
        if (projection_(i, c) == 0) continue;
        if (best == end || abs(projection_(i, c)) < abs(projection_(best, c))) best = i;
      }
      if (best == end) break;
      if (best != r) swap(best, r);
      bool clean = true;
      for (std::size_t i = r + 1; i < end; ++i) {
        if (projection_(i, c) == 0) continue;
        add(i, r, -(projection_(i, c) / projection_(r, c)));
        if (projection_(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (projection_(r, c) == 0) continue;
    if (projection_(r, c) < 0) negate(r);
    for (std::size_t i = nt; i < r; ++i) {
      Integer q = projection_(i, c) / projection_(r, c);
      if (projection_(i, c) - q * projection_(r, c) < 0) q -= 1;
      if (q != 0) add(i, r, -q);
    }
    ++r;
  }
}

Integer AbelianGroup::torsion_order() const {
  Integer n = 1;
  for (long long d : factors_) n *= d;
  return n;
}

GroupElement AbelianGroup::identity() const {
  return GroupElement{std::vector<long long>(rank_, 0),
                      std::vector<long long>(factors_.size(), 0)};
}

GroupElement AbelianGroup::reduce(GroupElement a) const {
  if (a.free.size() != rank_ || a.tors.size() != factors_.size()) {
    throw Error(ErrorKind::GroupMismatch, "element does not belong to " + describe());
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) a.tors[i] = floor_mod(a.tors[i], factors_[i]);
  return a;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out = a;
  for (std::size_t i = 0; i < out.free.size(); ++i) out.free[i] += b.free.at(i);
  for (std::size_t i = 0; i < out.tors.size(); ++i) out.tors[i] += b.tors.at(i);
  return reduce(std::move(out));
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
  GroupElement out = a;
  for (auto& x : out.free) x = -x;
  for (auto& x : out.tors) x = -x;
  return reduce(std::move(out));
}

GroupElement AbelianGroup::scale(const GroupElement& a, long long k) const {
  GroupElement out = a;
  for (auto& x : out.free) x *= k;
  for (std::size_t i = 0; i < out.tors.size(); ++i) {
    out.tors[i] = to_int64(Integer(out.tors[i]) * k % factors_[i]);
  }
  return reduce(std::move(out));
}

GroupElement AbelianGroup::project(const std::vector<long long>& v) const {
  if (v.size() != projection_.cols()) {
    throw Error(ErrorKind::InvalidArgument, "vector length does not match generator count");
  }
  GroupElement out;
  const std::size_t r = factors_.size();
  for (std::size_t k = 0; k < projection_.rows(); ++k) {
    Integer sum = 0;
    for (std::size_t j = 0; j < v.size(); ++j) sum += projection_(k, j) * v[j];
    if (k < r) {
      Integer m = sum % factors_[k];
      if (m < 0) m += factors_[k];
      out.tors.push_back(to_int64(m));
    } else {
      out.free.push_back(to_int64(sum));
    }
  }
  return out;
}

std::vector<long long> AbelianGroup::lift(const GroupElement& h) const {
  const GroupElement c = reduce(h);
  std::vector<long long> coords = c.tors;
  coords.insert(coords.end(), c.free.begin(), c.free.end());
  std::vector<long long> v(section_.rows());
  for (std::size_t j = 0; j < section_.rows(); ++j) {
    Integer sum = 0;
    for (std::size_t k = 0; k < coords.size(); ++k) sum += section_(j, k) * coords[k];
    v[j] = to_int64(sum);
  }
  if (!(project(v) == c)) {
    throw Error(ErrorKind::LiftFailure, "no integer lift found for a group element");
  }
  return v;
}

GroupElement AbelianGroup::free_generator(std::size_t i) const {
  GroupElement g = identity();
  g.free.at(i) = 1;
  return g;
}

GroupElement AbelianGroup::torsion_generator(std::size_t i) const {
  GroupElement g = identity();
  g.tors.at(i) = 1;
  return g;
}

std::string AbelianGroup::describe() const {
  std::string out;
  if (rank_ > 0) out = rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
  for (long long d : factors_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

}  // namespace torsion
