#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wa/semiring.hpp"

namespace wa {

// A vector over one semiring, indexed by states.
class Vec {
 public:
  Vec(SemiringTag tag, std::size_t dim);  // all zero
  Vec(SemiringTag tag, std::vector<Weight> entries);

  static Vec unit(SemiringTag tag, std::size_t dim, std::size_t index);

  SemiringTag tag() const noexcept { return tag_; }
  std::size_t dim() const noexcept { return entries_.size(); }
  const Weight& operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, Weight w);
  const std::vector<Weight>& entries() const noexcept { return entries_; }

  bool operator==(const Vec&) const = default;

 private:
  SemiringTag tag_;
  std::vector<Weight> entries_;
};

// Square matrix over one semiring, row-major, indexed by state pairs.
class Matrix {
 public:
  Matrix(SemiringTag tag, std::size_t dim);  // all zero

  static Matrix identity(SemiringTag tag, std::size_t dim);

  SemiringTag tag() const noexcept { return tag_; }
  std::size_t dim() const noexcept { return dim_; }
  const Weight& at(std::size_t p, std::size_t q) const { return entries_[p * dim_ + q]; }
  void set(std::size_t p, std::size_t q, Weight w);

  bool operator==(const Matrix&) const = default;

 private:
  SemiringTag tag_;
  std::size_t dim_;
  std::vector<Weight> entries_;
};

Matrix mat_mul(const Matrix& m, const Matrix& n);
inline Matrix operator*(const Matrix& m, const Matrix& n) { return mat_mul(m, n); }

// x^T * M
Vec row_times(const Vec& x, const Matrix& m);
// M * y
Vec times_col(const Matrix& m, const Vec& y);
// x^T * y
Weight dot(const Vec& x, const Vec& y);
// x^T * M * y
Weight bilinear(const Vec& x, const Matrix& m, const Vec& y);

// M^k by iterated multiplication, M^0 = identity.
Matrix mat_pow(const Matrix& m, std::size_t k);

Matrix abstract_matrix(const Matrix& m);
Vec abstract_vec(const Vec& v);

// Idempotency of the boolean abstraction (direct for boolean tags).
bool is_idempotent(const Matrix& m);

// Block-diagonal sum; all blocks must share a tag.
Matrix block_diagonal(const std::vector<Matrix>& blocks);

// Row-major table with `inf` literals, one row per line.
std::string to_table(const Matrix& m);

}  // namespace wa
