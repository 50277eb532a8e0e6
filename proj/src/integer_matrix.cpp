#include "torsion/integer_matrix.hpp"

#include "torsion/errors.hpp"

#include <sstream>
#include <utility>

namespace torsion {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<long long>& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && (*this)(r, c) != 0) return false;
    }
  }
  return true;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  // Gauss-Jordan over Z using only unimodular row operations.
  IntMatrix m = a;
  IntMatrix inv = IntMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    // Euclid down column k until a single nonzero entry remains at or below k.
    for (;;) {
      std::size_t best = n;
      for (std::size_t i = k; i < n; ++i) {
        if (m(i, k) != 0 && (best == n || abs(m(i, k)) < abs(m(best, k)))) best = i;
      }
      if (best == n) throw Error(ErrorKind::InvalidArgument, "matrix is singular");
      m.swap_rows(k, best);
      inv.swap_rows(k, best);
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m(i, k) == 0) continue;
        const Integer q = m(i, k) / m(k, k);
        m.add_row_multiple(i, k, -q);
        inv.add_row_multiple(i, k, -q);
        if (m(i, k) != 0) clean = false;
      }
      if (clean) break;
    }
    if (abs(m(k, k)) != 1) throw Error(ErrorKind::InvalidArgument, "matrix is not unimodular");
    if (m(k, k) < 0) {
      m.negate_row(k);
      inv.negate_row(k);
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) {
      const Integer q = m(i, k);
      m.add_row_multiple(i, k, -q);
      inv.add_row_multiple(i, k, -q);
    }
  }
  return inv;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  SmithForm s{IntMatrix::identity(rows), a, IntMatrix::identity(cols)};
  IntMatrix& D = s.D;

  auto move_smallest_to = [&](std::size_t t) -> bool {
    std::size_t br = rows, bc = cols;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (D(r, c) == 0) continue;
        if (br == rows || abs(D(r, c)) < abs(D(br, bc))) {
          br = r;
          bc = c;
        }
      }
    }
    if (br == rows) return false;
    D.swap_rows(t, br);
    s.U.swap_rows(t, br);
    D.swap_cols(t, bc);
    s.V.swap_cols(t, bc);
    return true;
  };

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    if (!move_smallest_to(t)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (D(r, t) == 0) continue;
        const Integer q = D(r, t) / D(t, t);
        D.add_row_multiple(r, t, -q);
        s.U.add_row_multiple(r, t, -q);
        if (D(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (D(t, c) == 0) continue;
        const Integer q = D(t, c) / D(t, t);
        D.add_col_multiple(c, t, -q);
        s.V.add_col_multiple(c, t, -q);
        if (D(t, c) != 0) clean = false;
      }
      if (!clean) {
        // A smaller remainder sits in row or column t; bring it to the pivot.
        move_smallest_to(t);
        continue;
      }
      // Row and column t are clear; enforce divisibility of the remaining block.
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (D(r, c) % D(t, t) != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      D.add_row_multiple(t, bad_row, 1);
      s.U.add_row_multiple(t, bad_row, 1);
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

}  // namespace torsion
