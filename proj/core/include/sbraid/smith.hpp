#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace sbraid {

using Integer = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& f);  // row dst += f * row src
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& f);  // col dst += f * col src
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// D = U * M * V with U, V unimodular and D diagonal, d_1 | d_2 | ... and
// all diagonal entries non-negative.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Nonzero diagonal of the Smith form, in divisibility order.  Skips the
// transforms, so it is cheaper than smith_normal_form.
std::vector<Integer> invariant_factors(IntMatrix m);

// Exact determinant (fraction-free elimination); square matrices only.
Integer determinant(IntMatrix m);

}  // namespace sbraid
