#ifndef CASTLEQEC_FIELD_HPP
#define CASTLEQEC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace castleqec {

/// Element of a table-based finite field, stored as its integer index.
///
/// The index of an element is its polynomial representation read as a
/// base-p number, the constant coefficient being the least significant
/// digit. In particular the prime subfield element c has index c.
using Elem = std::uint16_t;

inline constexpr int kMaxFieldOrder = 1024;

class FieldError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed field that is larger than the tables support.
class UnsupportedFieldError : public FieldError {
public:
  using FieldError::FieldError;
};

/// GF(p^k) with p^k <= 1024.
///
/// The modulus is the lexicographically smallest monic irreducible
/// polynomial of degree k (coefficient tuples compared low degree first).
/// The designated primitive element is the smallest-index element of
/// multiplicative order p^k - 1. Fields are immutable and interned: two
/// calls to make() with the same (p, k) return the same object.
class Field {
public:
  static std::shared_ptr<const Field> make(int p, int k);
  /// Convenience: the field of the given prime-power order.
  static std::shared_ptr<const Field> of_order(int order);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return order_; }
  /// Coefficients of the modulus, low degree first, monic (size k+1).
  std::span<const int> modulus() const { return modulus_; }
  Elem primitive() const { return primitive_; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return static_cast<Elem>(a ^ b);
    return add_[static_cast<std::size_t>(a) * order_ + b];
  }
  Elem neg(Elem a) const { return p_ == 2 ? a : neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;

  /// Discrete log to the base primitive(); a must be nonzero.
  int log(Elem a) const;
  /// primitive()^e for any integer e.
  Elem exp(std::int64_t e) const;

  /// True when sub_order = p^m with m | k.
  bool has_subfield(int sub_order) const;
  /// True when a lies in the subfield of order sub_order.
  bool in_subfield(Elem a, int sub_order) const { return pow(a, sub_order) == a; }

  /// Base-p digits of an element, low degree first (size k).
  std::vector<int> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const int> coeffs) const;

  bool operator==(const Field& other) const { return p_ == other.p_ && k_ == other.k_; }

  Field(int p, int k);  // use make()

private:
  int p_;
  int k_;
  int order_;
  std::vector<int> modulus_;
  Elem primitive_ = 1;
  std::vector<Elem> add_;
  std::vector<Elem> neg_;
  std::vector<Elem> exp_;  // length 2*(order-1)
  std::vector<int> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(int p);

/// Lexicographically smallest monic irreducible polynomial of degree k
/// over GF(p), low degree first.
std::vector<int> smallest_irreducible(int p, int k);
/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(int p, std::span<const int> poly);

/// Canonical embedding GF(p^m) -> GF(p^k), m | k.
///
/// Sends the small primitive element to the smallest-index element of the
/// big field sharing its minimal polynomial over GF(p).
class Embedding {
public:
  static const Embedding& get(const FieldPtr& small, const FieldPtr& big);

  const FieldPtr& small() const { return small_; }
  const FieldPtr& big() const { return big_; }
  Elem forward(Elem a) const { return forward_[a]; }
  /// Preimage of a big-field element; throws if a is outside the image.
  Elem back(Elem a) const;
  bool in_image(Elem a) const { return back_[a] >= 0; }

  Embedding(FieldPtr small, FieldPtr big);

private:
  FieldPtr small_;
  FieldPtr big_;
  std::vector<Elem> forward_;
  std::vector<int> back_;
};

/// Element bound to its field; arithmetic across fields throws.
class FieldElement {
public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  FieldElement pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }
  bool operator==(const FieldElement& o) const;

  /// Multiplicative order (0 for the zero element).
  int multiplicative_order() const;

private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  Elem value_;
};

// Named operations.

FieldPtr fld_make(int p, int k);
FieldElement fld_embed(const FieldElement& e, const FieldPtr& target);
/// e^q, where q is the order of a subfield of e's field.
FieldElement fld_frobenius(const FieldElement& e, int q);
/// Trace to the subfield of order q, returned as an element of GF(q).
FieldElement fld_trace(const FieldElement& e, int q);
bool fld_is_square(const FieldElement& e);

/// Trace to the subfield of order q, as an element of the big field.
Elem trace_in_place(const Field& field, Elem e, int q);

/// Order of the subfield as (p, m); throws if q is not a subfield order.
int subfield_degree(const Field& field, int q);

}  // namespace castleqec

#endif  // CASTLEQEC_FIELD_HPP
