#include "castleqec/linear_code.hpp"

#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace castleqec {

// TwistVector

TwistVector::TwistVector(FieldPtr field, std::vector<Elem> entries) : field_(std::move(field)), entries_(std::move(entries)) {
  for (Elem e : entries_)
    if (e == 0) throw std::invalid_argument("twist vector entries must be nonzero");
}

TwistVector TwistVector::ones(FieldPtr field, int n) { return {std::move(field), std::vector<Elem>(n, 1)}; }

TwistVector TwistVector::inverse() const {
  std::vector<Elem> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->inv(entries_[i]);
  return {field_, std::move(out)};
}

TwistVector TwistVector::pow(long long e) const {
  std::vector<Elem> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->pow(entries_[i], e);
  return {field_, std::move(out)};
}

bool TwistVector::is_constant() const {
  for (Elem e : entries_)
    if (e != entries_.front()) return false;
  return true;
}

// LinearCode

LinearCode::LinearCode(FieldPtr field, int n) : field_(std::move(field)), n_(n), generator_(0, n) {
  if (n < 0) throw std::invalid_argument("negative code length");
}

LinearCode::LinearCode(FieldPtr field, int n, RowEchelon echelon)
    : field_(std::move(field)), n_(n), generator_(std::move(echelon.matrix)), pivots_(std::move(echelon.pivots)) {
  if (generator_.rows() == 0) generator_ = Matrix(0, n);
}

LinearCode LinearCode::from_rows(FieldPtr field, int n, const Matrix& rows) {
  if (rows.rows() > 0 && rows.cols() != n) throw std::invalid_argument("inconsistent row lengths");
  for (int i = 0; i < rows.rows(); ++i)
    for (Elem x : rows.row(i))
      if (x >= field->order()) throw std::invalid_argument("entry outside the field");
  if (rows.rows() == 0) return LinearCode(std::move(field), n);
  auto e = rref(*field, rows);
  return LinearCode(std::move(field), n, std::move(e));
}

LinearCode LinearCode::full(FieldPtr field, int n) {
  Matrix id(n, n);
  for (int i = 0; i < n; ++i) id.at(i, i) = 1;
  return from_rows(std::move(field), n, id);
}

bool LinearCode::contains(std::span<const Elem> word) const {
  if (static_cast<int>(word.size()) != n_) throw std::invalid_argument("word length mismatch");
  std::vector<Elem> v(word.begin(), word.end());
  return reduce_against(*field_, RowEchelon{generator_, pivots_}, v);
}

bool LinearCode::contains(const LinearCode& other) const {
  if (other.n_ != n_ || other.field_.get() != field_.get()) return false;
  if (other.dimension() > dimension()) return false;
  const Field& f = *field_;
  for (int i = 0; i < other.dimension(); ++i) {
    std::vector<Elem> v(other.generator_.row(i).begin(), other.generator_.row(i).end());
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const Elem c = v[pivots_[r]];
      if (c != 0) axpy(f, f.neg(c), generator_.row(static_cast<int>(r)), v);
    }
    for (Elem x : v)
      if (x != 0) return false;
  }
  return true;
}

bool LinearCode::operator==(const LinearCode& other) const {
  return field_.get() == other.field_.get() && n_ == other.n_ && generator_ == other.generator_;
}

std::vector<Elem> LinearCode::encode(std::span<const Elem> message) const {
  if (static_cast<int>(message.size()) != dimension()) throw std::invalid_argument("message length mismatch");
  std::vector<Elem> out(n_, 0);
  for (int i = 0; i < dimension(); ++i) axpy(*field_, message[i], generator_.row(i), out);
  return out;
}

LinearCode LinearCode::dual() const {
  if (dimension() == 0) return full(field_, n_);
  return from_rows(field_, n_, nullspace(*field_, generator_));
}

int hermitian_root(const Field& field) {
  if (field.degree() % 2 != 0)
    throw FieldError("Hermitian duality needs a square field order, got " + std::to_string(field.order()));
  int q = 1;
  for (int i = 0; i < field.degree() / 2; ++i) q *= field.characteristic();
  return q;
}

LinearCode LinearCode::power(long long e) const {
  return from_rows(field_, n_, entrywise_pow(*field_, generator_, e));
}

LinearCode LinearCode::hermitian_dual() const {
  const int q = hermitian_root(*field_);
  return power(q).dual();
}

bool LinearCode::is_self_orthogonal(InnerProduct mode) const {
  const Field& f = *field_;
  if (mode == InnerProduct::Euclidean) return is_zero(gram(f, generator_, generator_));
  const int q = hermitian_root(f);
  return is_zero(gram(f, generator_, entrywise_pow(f, generator_, q)));
}

LinearCode code_from_rows(const FieldPtr& field, int n, const Matrix& rows) { return LinearCode::from_rows(field, n, rows); }
LinearCode code_dual(const LinearCode& c) { return c.dual(); }
LinearCode code_hermitian_dual(const LinearCode& c) { return c.hermitian_dual(); }

LinearCode code_star(const TwistVector& x, const LinearCode& c) {
  if (x.size() != c.length() || x.field().get() != c.field().get())
    throw std::invalid_argument("twist vector does not match the code");
  Matrix g = c.generator();
  const Field& f = *c.field();
  for (int i = 0; i < g.rows(); ++i) {
    auto row = g.row(i);
    for (int j = 0; j < c.length(); ++j) row[j] = f.mul(row[j], x[j]);
  }
  return LinearCode::from_rows(c.field(), c.length(), g);
}

bool code_is_self_orthogonal(const LinearCode& c, InnerProduct mode) { return c.is_self_orthogonal(mode); }

// Weights

std::uint64_t saturating_pow(std::uint64_t q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    r *= q;
  }
  return r;
}

std::vector<BigInt> enumerate_weight_distribution(const LinearCode& c) {
  const Field& f = *c.field();
  const int n = c.length();
  const int k = c.dimension();
  const int q = f.order();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  counts[0] = 1;

  if (k > 0) {
    // Walk all messages as a mixed-radix counter over element indices; each
    // step adds (e_{t+1} - e_t) * row_i, or -e_{q-1} * row_i on wrap-around.
    struct Step {
      std::vector<int> cols;
      std::vector<Elem> vals;
    };
    std::vector<std::vector<Step>> steps(static_cast<std::size_t>(k), std::vector<Step>(static_cast<std::size_t>(q)));
    for (int i = 0; i < k; ++i) {
      auto row = c.generator().row(i);
      for (int t = 0; t < q; ++t) {
        const Elem delta = t + 1 < q ? f.sub(static_cast<Elem>(t + 1), static_cast<Elem>(t)) : f.neg(static_cast<Elem>(q - 1));
        Step& s = steps[i][t];
        for (int j = 0; j < n; ++j)
          if (row[j] != 0) {
            s.cols.push_back(j);
            s.vals.push_back(f.mul(delta, row[j]));
          }
      }
    }
    std::vector<Elem> word(n, 0);
    std::vector<int> digits(k, 0);
    int weight = 0;
    auto apply = [&](const Step& s) {
      for (std::size_t a = 0; a < s.cols.size(); ++a) {
        Elem& w = word[s.cols[a]];
        const Elem nw = f.add(w, s.vals[a]);
        weight += (nw != 0) - (w != 0);
        w = nw;
      }
    };
    const std::uint64_t total = saturating_pow(q, k);
    for (std::uint64_t step = 1; step < total; ++step) {
      int i = 0;
      while (digits[i] == q - 1) {
        apply(steps[i][q - 1]);
        digits[i] = 0;
        ++i;
      }
      apply(steps[i][digits[i]]);
      ++digits[i];
      ++counts[weight];
    }
  }
  std::vector<BigInt> out(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) out[i] = counts[i];
  return out;
}

namespace {

BigInt binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt krawtchouk(int n, int q, int w, int i) {
  BigInt sum = 0;
  for (int s = 0; s <= w; ++s) {
    BigInt term = boost::multiprecision::pow(BigInt(q - 1), static_cast<unsigned>(w - s)) * binom(i, s) * binom(n - i, w - s);
    if (s % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

}  // namespace

BigInt macwilliams_coefficient(const std::vector<BigInt>& dist, int n, int q, int code_dimension, int w) {
  BigInt sum = 0;
  for (int i = 0; i <= n; ++i)
    if (dist[i] != 0) sum += dist[i] * krawtchouk(n, q, w, i);
  const BigInt size = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(code_dimension));
  return sum / size;
}

std::vector<BigInt> macwilliams_transform(const std::vector<BigInt>& dist, int n, int q, int code_dimension) {
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) out[w] = macwilliams_coefficient(dist, n, q, code_dimension, w);
  return out;
}

std::optional<WeightDistribution> WeightDistribution::compute(const LinearCode& c, std::uint64_t budget) {
  const int q = c.field()->order();
  const int k = c.dimension();
  const int n = c.length();
  const std::uint64_t direct_cost = saturating_pow(q, k);
  const std::uint64_t dual_cost = saturating_pow(q, n - k);
  WeightDistribution d;
  d.n_ = n;
  d.q_ = q;
  if (direct_cost <= dual_cost && direct_cost <= budget) {
    d.source_ = enumerate_weight_distribution(c);
    d.source_dimension_ = k;
    return d;
  }
  if (dual_cost <= budget) {
    d.source_ = enumerate_weight_distribution(c.dual());
    d.source_dimension_ = n - k;
    d.transformed_ = true;
    return d;
  }
  return std::nullopt;
}

BigInt WeightDistribution::count(int w) const {
  if (w < 0 || w > n_) return 0;
  if (!transformed_) return source_[w];
  return macwilliams_coefficient(source_, n_, q_, source_dimension_, w);
}

int WeightDistribution::min_nonzero_weight() const {
  for (int w = 1; w <= n_; ++w)
    if (count(w) != 0) return w;
  return 0;
}

MinWeight code_min_weight(const LinearCode& c, std::uint64_t budget) {
  if (c.dimension() == 0) return {WeightStatus::Empty, 0};
  auto dist = WeightDistribution::compute(c, budget);
  if (!dist) return {WeightStatus::NotComputed, 0};
  return {WeightStatus::Exact, dist->min_nonzero_weight()};
}

MinWeight code_relative_min_weight(const LinearCode& c2, const LinearCode& c1, std::uint64_t budget) {
  if (!c2.contains(c1)) throw std::invalid_argument("relative minimum weight needs C1 contained in C2");
  if (c1.dimension() == c2.dimension()) return {WeightStatus::Empty, 0};
  if (c1.dimension() == 0) return code_min_weight(c2, budget);
  auto d2 = WeightDistribution::compute(c2, budget);
  if (!d2) return {WeightStatus::NotComputed, 0};
  auto d1 = WeightDistribution::compute(c1, budget);
  if (!d1) return {WeightStatus::NotComputed, 0};
  for (int w = 1; w <= c2.length(); ++w)
    if (d2->count(w) > d1->count(w)) return {WeightStatus::Exact, w};
  return {WeightStatus::Empty, 0};  // unreachable for a proper inclusion
}

// Subfield descent

SubfieldBasis::SubfieldBasis(FieldPtr big, int q) : big_(std::move(big)) {
  const int m = subfield_degree(*big_, q);
  small_ = Field::make(big_->characteristic(), m);
  r_ = big_->degree() / m;
  const Field& b = *big_;
  const auto& emb = Embedding::get(small_, big_);
  const Elem a = b.primitive();
  for (int j = 0; j < r_; ++j) basis_.push_back(b.pow(a, j));
  coords_.assign(static_cast<std::size_t>(b.order()) * r_, 0);
  std::vector<int> lam(r_, 0);
  const int total = b.order();  // q^r combinations
  for (int t = 0; t < total; ++t) {
    int x = t;
    Elem e = 0;
    for (int j = 0; j < r_; ++j) {
      lam[j] = x % q;
      x /= q;
      e = b.add(e, b.mul(emb.forward(static_cast<Elem>(lam[j])), basis_[j]));
    }
    for (int j = 0; j < r_; ++j) coords_[static_cast<std::size_t>(e) * r_ + j] = static_cast<Elem>(lam[j]);
  }
}

const SubfieldBasis& SubfieldBasis::get(const FieldPtr& big, int q) {
  static std::mutex mutex;
  static std::map<std::pair<const Field*, int>, std::unique_ptr<SubfieldBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{big.get(), q}];
  if (!slot) slot = std::make_unique<SubfieldBasis>(big, q);
  return *slot;
}

LinearCode code_trace(const LinearCode& c, int q) {
  const auto& sb = SubfieldBasis::get(c.field(), q);
  const Field& b = *c.field();
  const auto& emb = Embedding::get(sb.small(), c.field());
  const int n = c.length();
  Matrix rows(c.dimension() * sb.degree(), n);
  int r = 0;
  for (int i = 0; i < c.dimension(); ++i) {
    auto g = c.generator().row(i);
    for (int j = 0; j < sb.degree(); ++j, ++r)
      for (int col = 0; col < n; ++col) rows.at(r, col) = emb.back(trace_in_place(b, b.mul(sb.basis(j), g[col]), q));
  }
  return LinearCode::from_rows(sb.small(), n, rows);
}

LinearCode code_subfield_subcode(const LinearCode& c, int q) {
  const auto& sb = SubfieldBasis::get(c.field(), q);
  const Field& b = *c.field();
  const Field& s = *sb.small();
  const int n = c.length();
  const int k = c.dimension();
  const int r = sb.degree();
  if (k == 0) return LinearCode(sb.small(), n);
  // Unknowns u_(i,t) in GF(q) with word = sum u_(i,t) a^t g_i; require the
  // coordinates 1..r-1 of every entry to vanish.
  const int unknowns = k * r;
  Matrix system((r - 1) * n, unknowns);
  for (int i = 0; i < k; ++i)
    for (int t = 0; t < r; ++t) {
      const int col = i * r + t;
      for (int j = 0; j < n; ++j) {
        const auto coords = sb.coordinates(b.mul(sb.basis(t), c.generator().at(i, j)));
        for (int sidx = 1; sidx < r; ++sidx) system.at((sidx - 1) * n + j, col) = coords[sidx];
      }
    }
  const Matrix sols = r > 1 ? nullspace(s, system) : [&] {
    Matrix id(unknowns, unknowns);
    for (int i = 0; i < unknowns; ++i) id.at(i, i) = 1;
    return id;
  }();
  Matrix words(sols.rows(), n);
  for (int a = 0; a < sols.rows(); ++a)
    for (int j = 0; j < n; ++j) {
      Elem acc = 0;
      for (int i = 0; i < k; ++i)
        for (int t = 0; t < r; ++t) {
          const Elem u = sols.at(a, i * r + t);
          if (u == 0) continue;
          acc = s.add(acc, s.mul(u, sb.coordinates(b.mul(sb.basis(t), c.generator().at(i, j)))[0]));
        }
      words.at(a, j) = acc;
    }
  return LinearCode::from_rows(sb.small(), n, words);
}

LinearCode code_extend(const LinearCode& c, const FieldPtr& big) {
  const auto& emb = Embedding::get(c.field(), big);
  Matrix g = c.generator();
  for (int i = 0; i < g.rows(); ++i)
    for (auto& x : g.row(i)) x = emb.forward(x);
  return LinearCode::from_rows(big, c.length(), g);
}

LinearCode code_restrict(const LinearCode& c, const FieldPtr& small) {
  const auto& emb = Embedding::get(small, c.field());
  Matrix g = c.generator();
  for (int i = 0; i < g.rows(); ++i)
    for (auto& x : g.row(i)) x = emb.back(x);
  return LinearCode::from_rows(small, c.length(), g);
}

}  // namespace castleqec

namespace castleqec {

namespace {

struct ColumnDfs {
  const Field& f;
  int rows;
  int cols;
  int max_weight;
  std::vector<std::vector<Elem>> columns;
  std::vector<std::vector<Elem>> basis;  // reduced chosen columns
  std::vector<int> pivots;
  int best = 0;

  // Reduce v against the current basis; true when it becomes zero.
  bool reduce(std::vector<Elem>& v) const {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Elem c = v[pivots[b]];
      if (c != 0) axpy(f, f.neg(c), basis[b], v);
    }
    for (Elem x : v)
      if (x != 0) return false;
    return true;
  }

  // Chosen set is independent with `size` columns; try extending by j >= start.
  bool extend(int start, int size) {
    for (int j = start; j < cols; ++j) {
      std::vector<Elem> v = columns[j];
      if (reduce(v)) {
        best = size + 1;
        return true;
      }
      if (size + 1 >= max_weight) continue;
      int p = 0;
      while (v[p] == 0) ++p;
      const Elem inv = f.inv(v[p]);
      for (auto& x : v) x = f.mul(x, inv);
      basis.push_back(std::move(v));
      pivots.push_back(p);
      const bool hit = extend(j + 1, size + 1);
      basis.pop_back();
      pivots.pop_back();
      if (hit) return true;
    }
    return false;
  }
};

}  // namespace

ColumnSearch min_dependent_columns(const Field& field, const Matrix& h, int max_weight, bool fix_first) {
  const int cols = h.cols();
  ColumnDfs dfs{field, h.rows(), cols, max_weight, {}, {}, {}, 0};
  dfs.columns.assign(cols, std::vector<Elem>(h.rows()));
  for (int r = 0; r < h.rows(); ++r)
    for (int c = 0; c < cols; ++c) dfs.columns[c][r] = h.at(r, c);
  // Iterative deepening keeps the first hit minimal.
  for (int w = 1; w <= max_weight; ++w) {
    dfs.max_weight = w;
    bool hit = false;
    if (fix_first) {
      std::vector<Elem> v = dfs.columns[0];
      if (dfs.reduce(v)) return {true, 1};
      if (w > 1) {
        int p = 0;
        while (v[p] == 0) ++p;
        const Elem inv = field.inv(v[p]);
        for (auto& x : v) x = field.mul(x, inv);
        dfs.basis.push_back(std::move(v));
        dfs.pivots.push_back(p);
        hit = dfs.extend(1, 1);
        dfs.basis.clear();
        dfs.pivots.clear();
      }
    } else {
      hit = dfs.extend(0, 0);
    }
    if (hit) return {true, dfs.best};
  }
  return {false, max_weight + 1};
}

bool code_has_automorphism(const LinearCode& c, const std::vector<int>& perm) {
  const int n = c.length();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<Elem> w(n);
  for (int r = 0; r < c.dimension(); ++r) {
    auto row = c.generator().row(r);
    for (int i = 0; i < n; ++i) w[perm[i]] = row[i];
    if (!c.contains(w)) return false;
  }
  return true;
}

bool permutations_transitive(const std::vector<std::vector<int>>& perms, int n) {
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (const auto& p : perms)
      if (!seen[p[i]]) {
        seen[p[i]] = 1;
        ++count;
        stack.push_back(p[i]);
      }
  }
  return count == n;
}

}  // namespace castleqec
