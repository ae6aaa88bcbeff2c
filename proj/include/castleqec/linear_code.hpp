#ifndef CASTLEQEC_LINEAR_CODE_HPP
#define CASTLEQEC_LINEAR_CODE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "castleqec/field.hpp"
#include "castleqec/matrix.hpp"

namespace castleqec {

using BigInt = boost::multiprecision::cpp_int;

/// Default cap on codeword evaluations for exact weight computations.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

enum class InnerProduct { Euclidean, Hermitian };

/// Vector with every entry invertible, acting on codes coordinatewise.
class TwistVector {
public:
  TwistVector(FieldPtr field, std::vector<Elem> entries);
  static TwistVector ones(FieldPtr field, int n);

  const FieldPtr& field() const { return field_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<Elem>& entries() const { return entries_; }
  Elem operator[](int i) const { return entries_[i]; }

  TwistVector inverse() const;
  TwistVector pow(long long e) const;
  bool is_constant() const;

private:
  FieldPtr field_;
  std::vector<Elem> entries_;
};

/// Linear code held by its reduced row-echelon generator matrix, so two
/// codes are equal exactly when their matrices are.
class LinearCode {
public:
  /// Zero code of length n.
  LinearCode(FieldPtr field, int n);

  /// Span of the given rows (code_from_rows).
  static LinearCode from_rows(FieldPtr field, int n, const Matrix& rows);
  static LinearCode from_rows(FieldPtr field, const Matrix& rows) { return from_rows(std::move(field), rows.cols(), rows); }
  static LinearCode full(FieldPtr field, int n);

  const FieldPtr& field() const { return field_; }
  int length() const { return n_; }
  int dimension() const { return generator_.rows(); }
  const Matrix& generator() const { return generator_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(std::span<const Elem> word) const;
  bool contains(const LinearCode& other) const;
  bool operator==(const LinearCode& other) const;

  std::vector<Elem> encode(std::span<const Elem> message) const;

  LinearCode dual() const;
  /// Dual for <a, b^q> over GF(q^2).
  LinearCode hermitian_dual() const;
  /// Entrywise e-th power image (C^e); a code again when e is a power of p.
  LinearCode power(long long e) const;
  bool is_self_orthogonal(InnerProduct mode) const;

private:
  LinearCode(FieldPtr field, int n, RowEchelon echelon);

  FieldPtr field_;
  int n_;
  Matrix generator_;
  std::vector<int> pivots_;
};

/// sqrt of the field order; throws when the order is not a square.
int hermitian_root(const Field& field);

LinearCode code_from_rows(const FieldPtr& field, int n, const Matrix& rows);
LinearCode code_dual(const LinearCode& c);
LinearCode code_hermitian_dual(const LinearCode& c);
/// x * C.
LinearCode code_star(const TwistVector& x, const LinearCode& c);
bool code_is_self_orthogonal(const LinearCode& c, InnerProduct mode);

// Weights

enum class WeightStatus { Exact, Empty, NotComputed };

struct MinWeight {
  WeightStatus status = WeightStatus::NotComputed;
  int value = 0;
  bool exact() const { return status == WeightStatus::Exact; }
};

/// Full weight distribution by enumerating all q^k codewords.
std::vector<BigInt> enumerate_weight_distribution(const LinearCode& c);

/// A_w of the dual of a code with weight distribution `dist`, via the
/// MacWilliams identity.
BigInt macwilliams_coefficient(const std::vector<BigInt>& dist, int n, int q, int code_dimension, int w);
std::vector<BigInt> macwilliams_transform(const std::vector<BigInt>& dist, int n, int q, int code_dimension);

/// Weight distribution, enumerated on whichever side is smaller. Empty
/// when q^min(k, n-k) exceeds the budget.
class WeightDistribution {
public:
  static std::optional<WeightDistribution> compute(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

  int length() const { return n_; }
  BigInt count(int w) const;
  /// Smallest nonzero weight, 0 for the zero code.
  int min_nonzero_weight() const;
  /// True when count(w) was read off directly rather than transformed.
  bool direct() const { return !transformed_; }

private:
  int n_ = 0;
  int q_ = 2;
  int source_dimension_ = 0;
  bool transformed_ = false;
  std::vector<BigInt> source_;
};

/// q^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t q, int e);

MinWeight code_min_weight(const LinearCode& c, std::uint64_t budget = kDefaultBudget);
/// Minimum weight over C2 \ C1; requires C1 contained in C2.
MinWeight code_relative_min_weight(const LinearCode& c2, const LinearCode& c1, std::uint64_t budget = kDefaultBudget);

/// Outcome of a search for the smallest linearly dependent column set of a
/// parity-check matrix, i.e. the minimum weight of its null space.
struct ColumnSearch {
  bool found = false;
  int weight = 0;  // the minimum weight if found, else max_weight + 1 (a lower bound)
};

/// Depth-first search over column subsets of size <= max_weight. With
/// fix_first set, only subsets containing column 0 are visited; that is
/// valid when the automorphism group of the null space is transitive.
ColumnSearch min_dependent_columns(const Field& field, const Matrix& h, int max_weight, bool fix_first = false);

/// True if permuting coordinates (word[i] -> position perm[i]) maps the
/// code onto itself.
bool code_has_automorphism(const LinearCode& c, const std::vector<int>& perm);
/// True if the permutations generate a group transitive on 0..n-1.
bool permutations_transitive(const std::vector<std::vector<int>>& perms, int n);

// Subfield descent

/// F_q-coordinates of big-field elements in the basis 1, a, ..., a^(r-1),
/// a the primitive element; coordinates are small-field indices.
class SubfieldBasis {
public:
  SubfieldBasis(FieldPtr big, int q);
  static const SubfieldBasis& get(const FieldPtr& big, int q);

  const FieldPtr& big() const { return big_; }
  const FieldPtr& small() const { return small_; }
  int degree() const { return r_; }
  /// a^j for j < degree().
  Elem basis(int j) const { return basis_[j]; }
  std::span<const Elem> coordinates(Elem e) const {
    return {coords_.data() + static_cast<std::size_t>(e) * r_, static_cast<std::size_t>(r_)};
  }

private:
  FieldPtr big_;
  FieldPtr small_;
  int r_;
  std::vector<Elem> basis_;
  std::vector<Elem> coords_;
};

/// Coordinatewise trace image tr(C), over GF(q).
LinearCode code_trace(const LinearCode& c, int q);
/// C intersected with GF(q)^n, over GF(q).
LinearCode code_subfield_subcode(const LinearCode& c, int q);
/// Scalar extension of a code to a larger field.
LinearCode code_extend(const LinearCode& c, const FieldPtr& big);
/// Reinterpret a code over GF(q^r) whose generator has entries in GF(q)
/// as a code over GF(q); throws otherwise.
LinearCode code_restrict(const LinearCode& c, const FieldPtr& small);

}  // namespace castleqec

#endif  // CASTLEQEC_LINEAR_CODE_HPP
