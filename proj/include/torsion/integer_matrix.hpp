#pragma once

#include "torsion/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace torsion {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<long long>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);

  bool is_diagonal() const;
  bool is_symmetric() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Exact determinant by fraction-free elimination.
Integer determinant(const IntMatrix& a);

// Inverse of a unimodular matrix. Throws if the matrix is not unimodular.
IntMatrix unimodular_inverse(const IntMatrix& a);

struct SmithForm {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal with d_i | d_{i+1}, zeros last
  IntMatrix V;  // cols x cols, unimodular
};

// U * A * V == D.
SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace torsion
