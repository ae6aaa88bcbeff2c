#include "castleqec/field.hpp"

#include <map>
#include <mutex>
#include <string>

namespace castleqec {

namespace {

// Remainder of a modulo b over GF(p); b monic. Both low degree first.
std::vector<int> poly_mod(int p, std::vector<int> a, std::span<const int> b) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const int c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
  }
  a.resize(static_cast<std::size_t>(db));
  return a;
}

bool all_zero(const std::vector<int>& v) {
  for (int c : v)
    if (c != 0) return false;
  return true;
}

int int_pow(int base, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_irreducible(int p, std::span<const int> poly) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1) return false;
  std::vector<int> a(poly.begin(), poly.end());
  for (int d = 1; d <= deg / 2; ++d) {
    const int count = int_pow(p, d);
    for (int t = 0; t < count; ++t) {
      std::vector<int> divisor(static_cast<std::size_t>(d) + 1);
      int x = t;
      for (int j = 0; j < d; ++j) {
        divisor[j] = x % p;
        x /= p;
      }
      divisor[d] = 1;
      if (all_zero(poly_mod(p, a, divisor))) return false;
    }
  }
  return true;
}

std::vector<int> smallest_irreducible(int p, int k) {
  const int count = int_pow(p, k);
  // t enumerates (c0, ..., c_{k-1}) in lexicographic order: c0 is the most
  // significant digit of t.
  for (int t = 0; t < count; ++t) {
    std::vector<int> poly(static_cast<std::size_t>(k) + 1);
    int x = t;
    for (int j = k - 1; j >= 0; --j) {
      poly[j] = x % p;
      x /= p;
    }
    poly[k] = 1;
    if (is_irreducible(p, poly)) return poly;
  }
  throw FieldError("no irreducible polynomial found");  // unreachable
}

Field::Field(int p, int k) : p_(p), k_(k), order_(int_pow(p, k)) {
  modulus_ = smallest_irreducible(p, k);

  if (p_ != 2) {
    add_.resize(static_cast<std::size_t>(order_) * order_);
    neg_.resize(order_);
    for (int a = 0; a < order_; ++a) {
      const auto ca = coefficients(static_cast<Elem>(a));
      std::vector<int> cn(k_);
      for (int j = 0; j < k_; ++j) cn[j] = (p_ - ca[j]) % p_;
      neg_[a] = from_coefficients(cn);
      for (int b = 0; b < order_; ++b) {
        const auto cb = coefficients(static_cast<Elem>(b));
        std::vector<int> cs(k_);
        for (int j = 0; j < k_; ++j) cs[j] = (ca[j] + cb[j]) % p_;
        add_[static_cast<std::size_t>(a) * order_ + b] = from_coefficients(cs);
      }
    }
  }

  auto slow_mul = [&](Elem a, Elem b) {
    const auto ca = coefficients(a);
    const auto cb = coefficients(b);
    std::vector<int> prod(static_cast<std::size_t>(2 * k_ - 1), 0);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    auto r = poly_mod(p_, prod, modulus_);
    r.resize(k_, 0);
    return from_coefficients(r);
  };

  const int group = order_ - 1;
  exp_.assign(static_cast<std::size_t>(2 * group), 0);
  log_.assign(order_, -1);
  if (order_ == 2) {
    primitive_ = 1;
    exp_[0] = exp_[1] = 1;
    log_[1] = 0;
    return;
  }
  for (int cand = 2; cand < order_; ++cand) {
    Elem g = static_cast<Elem>(cand);
    Elem x = 1;
    int ord = 0;
    do {
      x = slow_mul(x, g);
      ++ord;
    } while (x != 1 && ord <= group);
    if (ord == group) {
      primitive_ = g;
      break;
    }
  }
  Elem x = 1;
  for (int i = 0; i < group; ++i) {
    exp_[i] = x;
    exp_[i + group] = x;
    log_[x] = i;
    x = slow_mul(x, primitive_);
  }
}

std::shared_ptr<const Field> Field::make(int p, int k) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw FieldError("extension degree must be positive");
  long long order = 1;
  for (int i = 0; i < k; ++i) {
    order *= p;
    if (order > kMaxFieldOrder)
      throw UnsupportedFieldError("field order exceeds supported bound " + std::to_string(kMaxFieldOrder));
  }
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const Field>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, k}];
  if (!slot) slot = std::make_shared<const Field>(p, k);
  return slot;
}

std::shared_ptr<const Field> Field::of_order(int order) {
  if (order < 2) throw FieldError("field order must be at least 2");
  int p = 2;
  while (order % p != 0) ++p;
  int k = 0;
  int x = order;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  if (x != 1) throw FieldError(std::to_string(order) + " is not a prime power");
  return make(p, k);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw FieldError("inverse of zero");
  const int group = order_ - 1;
  return exp_[(group - log_[a]) % group];
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw FieldError("negative power of zero");
    return 0;
  }
  const std::int64_t group = order_ - 1;
  std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (e % group)) % group;
  if (r < 0) r += group;
  return exp_[static_cast<std::size_t>(r)];
}

int Field::log(Elem a) const {
  if (a == 0) throw FieldError("log of zero");
  return log_[a];
}

Elem Field::exp(std::int64_t e) const {
  const std::int64_t group = order_ - 1;
  std::int64_t r = e % group;
  if (r < 0) r += group;
  return exp_[static_cast<std::size_t>(r)];
}

bool Field::has_subfield(int sub_order) const {
  int m = 0;
  int x = sub_order;
  while (x > 1 && x % p_ == 0) {
    x /= p_;
    ++m;
  }
  return x == 1 && m >= 1 && k_ % m == 0;
}

std::vector<int> Field::coefficients(Elem a) const {
  std::vector<int> c(k_);
  int x = a;
  for (int j = 0; j < k_; ++j) {
    c[j] = x % p_;
    x /= p_;
  }
  return c;
}

Elem Field::from_coefficients(std::span<const int> coeffs) const {
  int v = 0;
  for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j) v = v * p_ + coeffs[j];
  return static_cast<Elem>(v);
}

int subfield_degree(const Field& field, int q) {
  if (!field.has_subfield(q))
    throw FieldError(std::to_string(q) + " is not the order of a subfield of GF(" +
                     std::to_string(field.order()) + ")");
  int m = 0;
  for (int x = q; x > 1; x /= field.characteristic()) ++m;
  return m;
}

// Embedding

Embedding::Embedding(FieldPtr small, FieldPtr big) : small_(std::move(small)), big_(std::move(big)) {
  if (small_->characteristic() != big_->characteristic() || big_->degree() % small_->degree() != 0)
    throw FieldError("GF(" + std::to_string(small_->order()) + ") does not embed in GF(" +
                     std::to_string(big_->order()) + ")");
  const Field& s = *small_;
  const Field& b = *big_;
  const int p = s.characteristic();
  const int m = s.degree();

  // Minimal polynomial of the small primitive element over GF(p): the
  // product of (X - g^(p^i)), i < m. Coefficients land in the prime field.
  std::vector<Elem> minpoly{1};
  Elem conj = s.primitive();
  for (int i = 0; i < m; ++i) {
    std::vector<Elem> next(minpoly.size() + 1, 0);
    for (std::size_t j = 0; j < minpoly.size(); ++j) {
      next[j + 1] = s.add(next[j + 1], minpoly[j]);
      next[j] = s.sub(next[j], s.mul(minpoly[j], conj));
    }
    minpoly = std::move(next);
    conj = s.pow(conj, p);
  }
  // minpoly is in the prime subfield, whose indices coincide in both fields.
  Elem image = 0;
  for (int cand = 1; cand < b.order(); ++cand) {
    Elem acc = 0;
    for (int j = static_cast<int>(minpoly.size()) - 1; j >= 0; --j)
      acc = b.add(b.mul(acc, static_cast<Elem>(cand)), minpoly[j]);
    if (acc == 0) {
      image = static_cast<Elem>(cand);
      break;
    }
  }
  if (image == 0) throw FieldError("embedding root not found");

  forward_.assign(s.order(), 0);
  back_.assign(b.order(), -1);
  back_[0] = 0;
  Elem g = 1;
  for (int i = 0; i < s.order() - 1; ++i) {
    const Elem a = s.exp(i);
    forward_[a] = g;
    back_[g] = a;
    g = b.mul(g, image);
  }
}

const Embedding& Embedding::get(const FieldPtr& small, const FieldPtr& big) {
  static std::mutex mutex;
  static std::map<std::pair<const Field*, const Field*>, std::unique_ptr<Embedding>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{small.get(), big.get()}];
  if (!slot) slot = std::make_unique<Embedding>(small, big);
  return *slot;
}

Elem Embedding::back(Elem a) const {
  if (back_[a] < 0) throw FieldError("element is not in the embedded subfield");
  return static_cast<Elem>(back_[a]);
}

// FieldElement

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw FieldError("null field");
  if (value_ >= field_->order()) throw FieldError("element index out of range");
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_.get() != o.field_.get())
    throw FieldError("arithmetic on elements of different fields requires an explicit embedding");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(value_, o.value_)};
}
bool FieldElement::operator==(const FieldElement& o) const {
  return field_.get() == o.field_.get() && value_ == o.value_;
}

int FieldElement::multiplicative_order() const {
  if (value_ == 0) return 0;
  int ord = 1;
  for (Elem x = value_; x != 1; x = field_->mul(x, value_)) ++ord;
  return ord;
}

// Named operations

FieldPtr fld_make(int p, int k) { return Field::make(p, k); }

FieldElement fld_embed(const FieldElement& e, const FieldPtr& target) {
  const auto& emb = Embedding::get(e.field(), target);
  return {target, emb.forward(e.value())};
}

FieldElement fld_frobenius(const FieldElement& e, int q) {
  subfield_degree(*e.field(), q);
  return e.pow(q);
}

Elem trace_in_place(const Field& field, Elem e, int q) {
  const int m = subfield_degree(field, q);
  const int r = field.degree() / m;
  Elem acc = 0;
  Elem term = e;
  for (int i = 0; i < r; ++i) {
    acc = field.add(acc, term);
    term = field.pow(term, q);
  }
  return acc;
}

FieldElement fld_trace(const FieldElement& e, int q) {
  const Field& big = *e.field();
  const int m = subfield_degree(big, q);
  const Elem t = trace_in_place(big, e.value(), q);
  auto small = Field::make(big.characteristic(), m);
  const auto& emb = Embedding::get(small, e.field());
  return {small, emb.back(t)};
}

bool fld_is_square(const FieldElement& e) {
  const Field& f = *e.field();
  if (f.characteristic() == 2 || e.value() == 0) return true;
  return f.pow(e.value(), (f.order() - 1) / 2) == 1;
}

}  // namespace castleqec
