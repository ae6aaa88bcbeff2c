#ifndef CASTLEQEC_MATRIX_HPP
#define CASTLEQEC_MATRIX_HPP

#include <optional>
#include <span>
#include <vector>

#include "castleqec/field.hpp"

namespace castleqec {

/// Dense row-major matrix of field-element indices.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Elem at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::span<Elem> row(int r) { return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const Elem> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }

  void append_row(std::span<const Elem> values);
  /// First `count` rows.
  Matrix top(int count) const;

  bool operator==(const Matrix& o) const = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

struct RowEchelon {
  Matrix matrix;            // nonzero rows only, reduced, pivots ascending
  std::vector<int> pivots;  // pivot column of each row
};

/// Reduced row-echelon form; zero rows are dropped.
RowEchelon rref(const Field& field, Matrix m);
int rank(const Field& field, const Matrix& m);
/// Basis of {x : m x^T = 0}, one vector per free column, in RREF.
Matrix nullspace(const Field& field, const Matrix& m);

/// Inverse of a square matrix, nullopt when singular.
std::optional<Matrix> inverse(const Field& field, const Matrix& m);

/// a * b^T.
Matrix gram(const Field& field, const Matrix& a, const Matrix& b);
bool is_zero(const Matrix& m);

/// Entrywise power a -> a^e.
Matrix entrywise_pow(const Field& field, const Matrix& m, long long e);

/// Reduce v against an RREF basis in place; returns true if v becomes 0.
bool reduce_against(const Field& field, const RowEchelon& basis, std::span<Elem> v);

/// y += c * x.
void axpy(const Field& field, Elem c, std::span<const Elem> x, std::span<Elem> y);
Elem dot(const Field& field, std::span<const Elem> a, std::span<const Elem> b);

/// Incremental echelon basis: accepts vectors one at a time and reports
/// whether each was independent of those seen before.
class IncrementalBasis {
public:
  IncrementalBasis(const Field& field, int cols) : field_(&field), cols_(cols) {}
  /// Returns true and stores the vector if it is independent.
  bool insert(std::span<const Elem> v);
  int rank() const { return static_cast<int>(rows_.size()); }
  /// True if v lies in the span of the accepted vectors.
  bool contains(std::span<const Elem> v) const;

private:
  const Field* field_;
  int cols_;
  std::vector<std::vector<Elem>> rows_;  // each with leading 1 at pivots_[i]
  std::vector<int> pivots_;
};

}  // namespace castleqec

#endif  // CASTLEQEC_MATRIX_HPP
