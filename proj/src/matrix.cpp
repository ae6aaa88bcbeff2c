#include "castleqec/matrix.hpp"

#include <stdexcept>

namespace castleqec {

void Matrix::append_row(std::span<const Elem> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(values.size());
  if (static_cast<int>(values.size()) != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::top(int count) const {
  Matrix out(count, cols_);
  for (int r = 0; r < count; ++r) {
    auto src = row(r);
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

void axpy(const Field& field, Elem c, std::span<const Elem> x, std::span<Elem> y) {
  if (c == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] = field.add(y[i], field.mul(c, x[i]));
}

Elem dot(const Field& field, std::span<const Elem> a, std::span<const Elem> b) {
  Elem acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = field.add(acc, field.mul(a[i], b[i]));
  return acc;
}

RowEchelon rref(const Field& field, Matrix m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m.at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r) {
      auto a = m.row(sel);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Elem inv = field.inv(m.at(r, c));
    for (auto& x : m.row(r)) x = field.mul(x, inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Elem f = m.at(i, c);
      if (f != 0) axpy(field, field.neg(f), m.row(r), m.row(i));
    }
    pivots.push_back(c);
    ++r;
  }
  return {m.top(r), std::move(pivots)};
}

int rank(const Field& field, const Matrix& m) { return static_cast<int>(rref(field, m).pivots.size()); }

Matrix nullspace(const Field& field, const Matrix& m) {
  const int cols = m.cols();
  const auto e = rref(field, m);
  std::vector<char> is_pivot(cols, 0);
  for (int c : e.pivots) is_pivot[c] = 1;
  Matrix out(cols - static_cast<int>(e.pivots.size()), cols);
  int k = 0;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    auto v = out.row(k++);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = field.neg(e.matrix.at(static_cast<int>(i), free));
  }
  return out;
}

std::optional<Matrix> inverse(const Field& field, const Matrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: matrix is not square");
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  auto e = rref(field, std::move(aug));
  if (e.matrix.rows() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = e.matrix.at(r, n + c);
  return out;
}

Matrix gram(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("gram: column mismatch");
  Matrix out(a.rows(), b.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.rows(); ++j) out.at(i, j) = dot(field, a.row(i), b.row(j));
  return out;
}

bool is_zero(const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (Elem x : m.row(i))
      if (x != 0) return false;
  return true;
}

Matrix entrywise_pow(const Field& field, const Matrix& m, long long e) {
  Matrix out = m;
  for (int i = 0; i < out.rows(); ++i)
    for (auto& x : out.row(i)) x = field.pow(x, e);
  return out;
}

bool reduce_against(const Field& field, const RowEchelon& basis, std::span<Elem> v) {
  for (std::size_t i = 0; i < basis.pivots.size(); ++i) {
    const Elem c = v[basis.pivots[i]];
    if (c != 0) axpy(field, field.neg(c), basis.matrix.row(static_cast<int>(i)), v);
  }
  for (Elem x : v)
    if (x != 0) return false;
  return true;
}

bool IncrementalBasis::insert(std::span<const Elem> v) {
  std::vector<Elem> w(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = w[pivots_[i]];
    if (c != 0) axpy(*field_, field_->neg(c), rows_[i], w);
  }
  int pivot = -1;
  for (int c = 0; c < cols_; ++c)
    if (w[c] != 0) {
      pivot = c;
      break;
    }
  if (pivot < 0) return false;
  const Elem inv = field_->inv(w[pivot]);
  for (auto& x : w) x = field_->mul(x, inv);
  rows_.push_back(std::move(w));
  pivots_.push_back(pivot);
  return true;
}

bool IncrementalBasis::contains(std::span<const Elem> v) const {
  std::vector<Elem> w(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = w[pivots_[i]];
    if (c != 0) axpy(*field_, field_->neg(c), rows_[i], w);
  }
  for (Elem x : w)
    if (x != 0) return false;
  return true;
}

}  // namespace castleqec
