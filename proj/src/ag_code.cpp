#include "castleqec/ag_code.hpp"

#include <algorithm>

namespace castleqec {

Matrix ag_evaluation_matrix(const EvaluationSet& e, const std::vector<CurveFunction>& functions) {
  Matrix out(0, e.length());
  for (const auto& f : functions) out.append_row(e.evaluate(f));
  return out;
}

int OnePointCode::m_perp() const { return eval->length() + 2 * eval->curve()->genus() - 2 - m; }

long long ag_goppa_bound(const EvaluationSet& e, int m) {
  const auto& s = e.curve()->semigroup();
  const long long n = e.length();
  const long long a = s.ell(m - n);
  long long raw = n - m;
  if (a > 0) raw += e.curve()->genus() >= 1 ? a + 1 : a;
  // Near the top of the sequence the formula drops below 1 (down to 2 - g).
  return std::max<long long>(raw, 1);
}

long long ag_goppa_bound(const OnePointCode& c) { return ag_goppa_bound(*c.eval, c.m); }

long long ag_order_bound(const EvaluationSet& e, int m) { return e.curve()->semigroup().order_bound(m); }

long long ag_distance_order_bound(const EvaluationSet& e, int m) {
  const int mp = e.length() + 2 * e.curve()->genus() - 2 - m;
  return ag_order_bound(e, mp);
}

OnePointCode ag_build(const EvalSetPtr& e, int m, std::uint64_t exact_budget) {
  const auto& curve = *e->curve();
  const int n = e->length();
  auto rows = ag_evaluation_matrix(*e, curve.function_basis(m));
  auto code = LinearCode::from_rows(e->field(), n, rows);
  const auto& s = curve.semigroup();
  const long long expected = s.ell(m) - s.ell(static_cast<long long>(m) - n);
  if (code.dimension() != expected)
    throw AgError("C(" + std::to_string(m) + "Q) has dimension " + std::to_string(code.dimension()) + ", expected " +
                  std::to_string(expected));
  MinWeight exact;
  if (exact_budget > 0) exact = code_min_weight(code, exact_budget);
  return OnePointCode{e,
                      m,
                      std::move(code),
                      static_cast<int>(s.ell(static_cast<long long>(m) - n)),
                      ag_goppa_bound(*e, m),
                      ag_distance_order_bound(*e, m),
                      exact};
}

std::string to_string(DualityStatus status) {
  switch (status) {
    case DualityStatus::SelfDual: return "self-dual";
    case DualityStatus::FormallySelfDual: return "formally-self-dual";
    case DualityStatus::Unverified: return "unverified";
  }
  return "unverified";
}

// Sequence

CodeSequence::CodeSequence(EvalSetPtr e) : eval_(std::move(e)) {
  const auto& curve = *eval_->curve();
  const int n = eval_->length();
  poles_ = curve.semigroup().dimension_set(n);
  basis_ = Matrix(0, n);
  IncrementalBasis check(*eval_->field(), n);
  for (int m : poles_) {
    auto f = curve.monomial_with_pole(m);
    auto row = eval_->evaluate(*f);
    if (!check.insert(row))
      throw AgError("dimension mismatch: ev of the pole-order " + std::to_string(m) + " function is dependent");
    functions_.push_back(*f);
    basis_.append_row(row);
  }
  certificate_ = ag_certify_duality(*this);
}

int CodeSequence::index_for_pole(int m) const {
  return static_cast<int>(std::upper_bound(poles_.begin(), poles_.end(), m) - poles_.begin());
}

LinearCode CodeSequence::code(int i) const {
  if (i < 0 || i > length()) throw std::out_of_range("sequence index out of range");
  return LinearCode::from_rows(field(), length(), basis_.top(i));
}

CodeSequence ag_sequence(const EvalSetPtr& e) { return CodeSequence(e); }

namespace {

// Smallest a (1-based) with <b_a, x*b_b> != 0 for some b, a + b <= n; 0 if none.
int first_twist_failure(const Field& f, const Matrix& basis, const std::vector<Elem>& x) {
  const int n = basis.rows();
  Matrix scaled = basis;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) scaled.at(r, c) = f.mul(scaled.at(r, c), x[c]);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; a + b <= n; ++b)
      if (dot(f, basis.row(a - 1), scaled.row(b - 1)) != 0) return a;
  return 0;
}

}  // namespace

DualityCertificate ag_certify_duality(const CodeSequence& seq) {
  const Field& f = *seq.field();
  const int n = seq.length();
  const Matrix& basis = seq.basis();
  DualityCertificate cert;

  std::vector<Elem> ones(n, 1);
  const int fail_ones = first_twist_failure(f, basis, ones);
  if (fail_ones == 0) {
    cert.status = DualityStatus::SelfDual;
    cert.twist = TwistVector::ones(seq.field(), n);
    return cert;
  }
  cert.failing_m = seq.pole(fail_ones);

  // b_1 is all-ones, so any twist is orthogonal to C_{n-1}: x spans its dual.
  Matrix kernel = nullspace(f, basis.top(n - 1));
  if (kernel.rows() != 1) return cert;
  std::vector<Elem> x(kernel.row(0).begin(), kernel.row(0).end());
  if (std::find(x.begin(), x.end(), Elem{0}) != x.end()) return cert;
  const Elem scale = f.inv(x[0]);
  for (auto& v : x) v = f.mul(v, scale);
  const int fail = first_twist_failure(f, basis, x);
  if (fail != 0) {
    cert.failing_m = seq.pole(fail);
    return cert;
  }
  cert.status = DualityStatus::FormallySelfDual;
  cert.twist = TwistVector(seq.field(), std::move(x));
  cert.failing_m.reset();
  return cert;
}

std::vector<int> ag_power_indices(const CodeSequence& seq, long long e) {
  const Field& f = *seq.field();
  const int n = seq.length();
  auto inv = inverse(f, seq.basis());
  if (!inv) throw AgError("sequence basis is singular");
  const Matrix powered = entrywise_pow(f, seq.basis(), e);
  std::vector<int> out(n + 1, 0);
  std::vector<Elem> coords(n);
  for (int a = 1; a <= n; ++a) {
    std::fill(coords.begin(), coords.end(), Elem{0});
    for (int t = 0; t < n; ++t) {
      const Elem c = powered.at(a - 1, t);
      if (c != 0) axpy(f, c, inv->row(t), coords);
    }
    int last = 0;
    for (int j = n; j >= 1; --j)
      if (coords[j - 1] != 0) {
        last = j;
        break;
      }
    out[a] = std::max(out[a - 1], last);
  }
  return out;
}

SelfOrthogonalityRange ag_self_orthogonality_range(const CodeSequence& seq, InnerProduct mode) {
  const Field& f = *seq.field();
  const int n = seq.length();
  const Matrix& b = seq.basis();
  int c = 2;
  Matrix other = b;
  if (mode == InnerProduct::Hermitian) {
    const int q = hermitian_root(f);
    c = q + 1;
    other = entrywise_pow(f, b, q);
  }
  SelfOrthogonalityRange out;
  const int total = n + 2 * seq.genus() - 2;
  out.closed_form = total >= 0 ? total / c : -1;
  for (int i = 1; i <= n; ++i) {
    bool ok = true;
    for (int t = 0; t < i && ok; ++t)
      ok = dot(f, b.row(i - 1), other.row(t)) == 0 && dot(f, b.row(t), other.row(i - 1)) == 0;
    if (!ok) break;
    out.index = i;
    out.m = seq.pole(i);
  }
  return out;
}

std::vector<std::vector<int>> ag_suzuki_translations(const EvaluationSet& e) {
  const auto& curve = *e.curve();
  if (curve.family() != CurveFamily::Suzuki) return {};
  const Field& f = *e.field();
  const int q = f.order();
  const auto& pts = curve.points();
  std::vector<int> where(static_cast<std::size_t>(q) * q, -1);
  for (int i = 0; i < e.length(); ++i) {
    const auto& p = pts[e.point_indices()[i]];
    where[static_cast<std::size_t>(p.x) * q + p.y] = i;
  }
  std::vector<std::vector<int>> out;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      const Elem shift = f.pow(static_cast<Elem>(a), curve.q0());
      std::vector<int> perm(e.length());
      bool closed = true;
      for (int i = 0; i < e.length() && closed; ++i) {
        const auto& p = pts[e.point_indices()[i]];
        const Elem x = f.add(p.x, static_cast<Elem>(a));
        const Elem y = f.add(f.add(p.y, f.mul(shift, p.x)), static_cast<Elem>(b));
        perm[i] = where[static_cast<std::size_t>(x) * q + y];
        closed = perm[i] >= 0;
      }
      if (!closed) return {};
      out.push_back(std::move(perm));
    }
  return out;
}

// Traces

LinearCode TraceBasis::code() const { return code_without({}); }

LinearCode TraceBasis::code_without(const std::vector<int>& removed) const {
  const int n = generators.empty() ? 0 : static_cast<int>(generators.front().values.size());
  Matrix rows(0, n);
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (std::find(removed.begin(), removed.end(), static_cast<int>(i)) == removed.end())
      rows.append_row(generators[i].values);
  return LinearCode::from_rows(small, n, rows);
}

TraceBasis ag_trace_basis(const EvaluationSet& e, int m, int q) {
  if (!e.is_castle_type()) throw AgError("trace bases need a Castle evaluation set");
  const Field& big = *e.field();
  const auto& sb = SubfieldBasis::get(e.field(), q);
  const auto& emb = Embedding::get(sb.small(), e.field());
  const auto& s = e.curve()->semigroup();
  const auto& gens = e.curve()->generators();
  const int n = e.length();

  TraceBasis out;
  out.small = sb.small();
  out.degree = sb.degree();
  out.m = m;
  out.functions = e.curve()->function_basis(m, q);
  out.generators.push_back({"1", -1, 0, std::vector<Elem>(n, 1)});
  out.last_block_begin = 1;
  for (std::size_t i = 1; i < out.functions.size(); ++i) {
    const int rho = out.functions[i].pole_order;
    if (rho % q == 0 && s.contains(rho / q)) continue;  // f_i = f_t^q
    out.last_block_begin = static_cast<int>(out.generators.size());
    const auto ev = e.evaluate(out.functions[i]);
    const std::string name = out.functions[i].label(gens);
    for (int j = 0; j < sb.degree(); ++j) {
      std::vector<Elem> values(n);
      for (int c = 0; c < n; ++c) values[c] = emb.back(trace_in_place(big, big.mul(sb.basis(j), ev[c]), q));
      std::string label = j == 0 ? "tr(" + name + ")" : j == 1 ? "tr(a*" + name + ")" : "tr(a^" + std::to_string(j) + "*" + name + ")";
      out.generators.push_back({std::move(label), static_cast<int>(i), j, std::move(values)});
    }
  }
  if (out.generators.size() == 1) out.last_block_begin = 1;
  return out;
}

TraceRange ag_trace_self_orthogonal_range(const EvaluationSet& e, int q) {
  const auto& sb = SubfieldBasis::get(e.field(), q);
  const int total = e.length() + 2 * e.curve()->genus() - 2;
  long long factor = 1;
  for (int i = 0; i < sb.degree() / 2; ++i) factor *= q;
  TraceRange out;
  out.closed_form = total >= 0 ? static_cast<int>(total / (factor + 1)) : -1;
  for (int m = 0; m <= total; ++m) {
    if (!ag_trace_basis(e, m, q).code().is_self_orthogonal(InnerProduct::Euclidean)) {
      out.first_failure = m;
      break;
    }
    out.verified = m;
  }
  return out;
}

std::optional<IncompleteTrace> ag_incomplete_trace_search(const EvaluationSet& e, int m, int q, std::uint64_t budget) {
  const auto tb = ag_trace_basis(e, m, q);
  const auto full = tb.code();
  const MinWeight full_dd = code_min_weight(full.dual(), budget);
  if (!full_dd.exact()) return std::nullopt;
  const int begin = tb.last_block_begin;
  const int size = static_cast<int>(tb.generators.size()) - begin;
  const int max_drop = std::min(tb.degree - 1, size);
  for (int drop = max_drop; drop >= 0; --drop) {
    // Each dropped generator buys two logical qudits, so most drops first.
    // Lexicographic combinations of `drop` indices from the last block.
    std::vector<int> pick(drop);
    for (int i = 0; i < drop; ++i) pick[i] = i;
    while (true) {
      std::vector<int> removed;
      for (int p : pick) removed.push_back(begin + p);
      auto code = tb.code_without(removed);
      if (code.is_self_orthogonal(InnerProduct::Euclidean)) {
        const MinWeight dd = code_min_weight(code.dual(), budget);
        if (dd.exact() && dd.value == full_dd.value) return IncompleteTrace{removed, std::move(code), full_dd, dd};
      }
      int i = drop - 1;
      while (i >= 0 && pick[i] == size - drop + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int t = i + 1; t < drop; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace castleqec
