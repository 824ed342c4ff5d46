#include "wa/tensor.hpp"

#include <sstream>

namespace wa {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ContractError(what);
}

}  // namespace

Vec::Vec(SemiringTag tag, std::size_t dim) : tag_(tag), entries_(dim, Weight::zero(tag)) {}

Vec::Vec(SemiringTag tag, std::vector<Weight> entries) : tag_(tag), entries_(std::move(entries)) {
  for (const auto& w : entries_)
    if (w.tag() != tag_) throw SemiringMismatch("vector entry has the wrong semiring");
}

Vec Vec::unit(SemiringTag tag, std::size_t dim, std::size_t index) {
  Vec v(tag, dim);
  v.set(index, Weight::one(tag));
  return v;
}

void Vec::set(std::size_t i, Weight w) {
  if (w.tag() != tag_) throw SemiringMismatch("vector entry has the wrong semiring");
  entries_.at(i) = std::move(w);
}

Matrix::Matrix(SemiringTag tag, std::size_t dim) : tag_(tag), dim_(dim), entries_(dim * dim, Weight::zero(tag)) {}

Matrix Matrix::identity(SemiringTag tag, std::size_t dim) {
  Matrix m(tag, dim);
  for (std::size_t p = 0; p < dim; ++p) m.set(p, p, Weight::one(tag));
  return m;
}

void Matrix::set(std::size_t p, std::size_t q, Weight w) {
  if (w.tag() != tag_) throw SemiringMismatch("matrix entry has the wrong semiring");
  require(p < dim_ && q < dim_, "matrix index out of range");
  entries_[p * dim_ + q] = std::move(w);
}

Matrix mat_mul(const Matrix& m, const Matrix& n) {
  require(m.dim() == n.dim(), "matrix dimensions differ");
  if (m.tag() != n.tag()) throw SemiringMismatch("matrix semirings differ");
  const std::size_t d = m.dim();
  Matrix out(m.tag(), d);
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t r = 0; r < d; ++r) {
      const Weight& left = m.at(p, r);
      if (left.is_zero()) continue;
      for (std::size_t q = 0; q < d; ++q) {
        const Weight& right = n.at(r, q);
        if (right.is_zero()) continue;
        out.set(p, q, sr_add(out.at(p, q), sr_mul(left, right)));
      }
    }
  }
  return out;
}

Vec row_times(const Vec& x, const Matrix& m) {
  require(x.dim() == m.dim(), "vector and matrix dimensions differ");
  if (x.tag() != m.tag()) throw SemiringMismatch("vector and matrix semirings differ");
  Vec out(m.tag(), m.dim());
  for (std::size_t p = 0; p < m.dim(); ++p) {
    if (x[p].is_zero()) continue;
    for (std::size_t q = 0; q < m.dim(); ++q) {
      if (m.at(p, q).is_zero()) continue;
      out.set(q, sr_add(out[q], sr_mul(x[p], m.at(p, q))));
    }
  }
  return out;
}

Vec times_col(const Matrix& m, const Vec& y) {
  require(y.dim() == m.dim(), "vector and matrix dimensions differ");
  if (y.tag() != m.tag()) throw SemiringMismatch("vector and matrix semirings differ");
  Vec out(m.tag(), m.dim());
  for (std::size_t p = 0; p < m.dim(); ++p) {
    for (std::size_t q = 0; q < m.dim(); ++q) {
      if (m.at(p, q).is_zero() || y[q].is_zero()) continue;
      out.set(p, sr_add(out[p], sr_mul(m.at(p, q), y[q])));
    }
  }
  return out;
}

Weight dot(const Vec& x, const Vec& y) {
  require(x.dim() == y.dim(), "vector dimensions differ");
  if (x.tag() != y.tag()) throw SemiringMismatch("vector semirings differ");
  Weight acc = Weight::zero(x.tag());
  for (std::size_t p = 0; p < x.dim(); ++p) acc = sr_add(acc, sr_mul(x[p], y[p]));
  return acc;
}

Weight bilinear(const Vec& x, const Matrix& m, const Vec& y) { return dot(row_times(x, m), y); }

Matrix mat_pow(const Matrix& m, std::size_t k) {
  Matrix out = Matrix::identity(m.tag(), m.dim());
  for (std::size_t i = 0; i < k; ++i) out = mat_mul(out, m);
  return out;
}

Matrix abstract_matrix(const Matrix& m) {
  Matrix out(abstraction_of(m.tag()), m.dim());
  for (std::size_t p = 0; p < m.dim(); ++p)
    for (std::size_t q = 0; q < m.dim(); ++q) out.set(p, q, sr_abstract(m.at(p, q)));
  return out;
}

Vec abstract_vec(const Vec& v) {
  std::vector<Weight> entries;
  entries.reserve(v.dim());
  for (const auto& w : v.entries()) entries.push_back(sr_abstract(w));
  return Vec(abstraction_of(v.tag()), std::move(entries));
}

bool is_idempotent(const Matrix& m) {
  const Matrix bar = is_boolean(m.tag()) ? m : abstract_matrix(m);
  return mat_mul(bar, bar) == bar;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  require(!blocks.empty(), "block_diagonal needs at least one block");
  std::size_t dim = 0;
  for (const auto& b : blocks) {
    if (b.tag() != blocks.front().tag()) throw SemiringMismatch("blocks have different semirings");
    dim += b.dim();
  }
  Matrix out(blocks.front().tag(), dim);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t p = 0; p < b.dim(); ++p)
      for (std::size_t q = 0; q < b.dim(); ++q) out.set(offset + p, offset + q, b.at(p, q));
    offset += b.dim();
  }
  return out;
}

std::string to_table(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t p = 0; p < m.dim(); ++p) {
    for (std::size_t q = 0; q < m.dim(); ++q) os << (q ? " " : "") << m.at(p, q).to_string();
    os << '\n';
  }
  return os.str();
}

}  // namespace wa
