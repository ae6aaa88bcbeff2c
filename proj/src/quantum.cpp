#include "castleqec/quantum.hpp"

#include <algorithm>

namespace castleqec {

std::string to_string(DistanceProvenance p) {
  switch (p) {
    case DistanceProvenance::Exact: return "exact";
    case DistanceProvenance::LowerBound: return "lower-bound";
    case DistanceProvenance::Claimed: return "paper-claimed";
  }
  return "lower-bound";
}

std::string to_string(Construction c) {
  switch (c) {
    case Construction::Nested: return "nested";
    case Construction::EuclidCss: return "euclid-CSS";
    case Construction::HermitianCss: return "hermitian-CSS";
    case Construction::A: return "A";
    case Construction::B: return "B";
    case Construction::C: return "C";
    case Construction::Trace: return "trace";
  }
  return "nested";
}

std::string to_string(GvStatus s) {
  switch (s) {
    case GvStatus::Below: return "below";
    case GvStatus::Meets: return "meets";
    case GvStatus::Exceeds: return "exceeds";
    case GvStatus::NotApplicable: return "na";
  }
  return "na";
}

// GV

namespace {

BigInt big_pow(BigInt base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

GvResult gv_evaluate(int n, int k, int d, int q) {
  if (q >= 2) {
    int r = q, p = 2;
    while (r % p) ++p;
    while (r % p == 0) r /= p;
    if (r != 1) throw QuantumError("q = " + std::to_string(q) + " is not a prime power");
  }
  GvResult out;
  if (!(n > k && k >= 2 && d >= 2 && (n - k) % 2 == 0) || q < 2) return out;
  const BigInt q2m1 = BigInt(q) * q - 1;
  out.lhs = (big_pow(BigInt(q), n - k + 2) - 1) / q2m1;
  // rhs(t) = sum_{i=1}^{t-1} (q^2-1)^(i-1) binom(n, i), built term by term.
  BigInt rhs = 0, binom = 1, power = 1;
  out.d_max = 1;
  const int limit = std::max(d, n + 1);
  for (int t = 2; t <= limit; ++t) {
    const int i = t - 1;
    if (i <= n) {
      binom = binom * (n - i + 1) / i;
      rhs += power * binom;
      power *= q2m1;
    }
    if (t == d) out.rhs = rhs;
    if (out.lhs > rhs && out.d_max == t - 1) out.d_max = t;
  }
  out.status = d == out.d_max ? GvStatus::Meets : d > out.d_max ? GvStatus::Exceeds : GvStatus::Below;
  return out;
}

GvStatus gv_status(int n, int k, int d, int q) { return gv_evaluate(n, k, d, q).status; }

QuantumParams make_params(int q, int n, int k, int d, DistanceProvenance p, Construction c) {
  if (k < 0 || k > n || d < 1)
    throw QuantumError("invalid quantum parameters [[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]]");
  return QuantumParams{q, n, k, d, p, c, gv_status(n, k, d, q)};
}

// CSS

namespace {

// Exact value if known, else the best lower bound available.
struct Distance {
  int value = 1;
  bool exact = false;
};

Distance combine_bound(Distance d, std::optional<int> bound) {
  if (!d.exact && bound) d.value = std::max(d.value, *bound);
  return d;
}

// min wt over big \ small; when that is out of budget, fall back on d(big).
Distance relative_distance(const LinearCode& big, const LinearCode& small, std::uint64_t budget) {
  const MinWeight rel = small.dimension() == big.dimension() ? MinWeight{WeightStatus::Empty, 0}
                                                              : code_relative_min_weight(big, small, budget);
  if (rel.exact()) return {rel.value, true};
  if (rel.status == WeightStatus::Empty) {
    // Equal codes: the quantum code has k = 0 and its distance is d(big).
    const MinWeight d = code_min_weight(big, budget);
    if (d.exact()) return {d.value, true};
    return {1, false};
  }
  const MinWeight d = code_min_weight(big, budget);
  if (d.exact()) return {d.value, false};
  return {1, false};
}

QuantumParams finish(int q, int n, int k, Distance d, Construction c) {
  return make_params(q, n, k, std::max(d.value, 1), d.exact ? DistanceProvenance::Exact : DistanceProvenance::LowerBound, c);
}

}  // namespace

QuantumParams css_nested(const LinearCode& c1, const LinearCode& c2, std::uint64_t budget, std::optional<int> bound) {
  if (!c2.contains(c1)) throw QuantumError("css_nested needs C1 contained in C2");
  const int n = c2.length();
  const Distance a = relative_distance(c2, c1, budget);
  const Distance b = relative_distance(c1.dual(), c2.dual(), budget);
  Distance d{std::min(a.value, b.value), a.exact && b.exact};
  if (!d.exact) {
    // A lower bound needs both sides bounded; inexact sides hold d(big) or 1.
    d.value = std::min(a.value, b.value);
  }
  return finish(c2.field()->order(), n, c2.dimension() - c1.dimension(), combine_bound(d, bound), Construction::Nested);
}

QuantumParams css_self_orthogonal(const LinearCode& c, std::uint64_t budget, std::optional<int> bound) {
  if (!c.is_self_orthogonal(InnerProduct::Euclidean)) throw QuantumError("code is not self-orthogonal");
  const int n = c.length();
  const Distance d = relative_distance(c.dual(), c, budget);
  return finish(c.field()->order(), n, n - 2 * c.dimension(), combine_bound(d, bound), Construction::EuclidCss);
}

QuantumParams css_hermitian(const LinearCode& c, std::uint64_t budget, std::optional<int> bound) {
  if (!c.is_self_orthogonal(InnerProduct::Hermitian)) throw QuantumError("code is not Hermitian self-orthogonal");
  const int n = c.length();
  const int q = hermitian_root(*c.field());
  const Distance d = relative_distance(c.hermitian_dual(), c, budget);
  return finish(q, n, n - 2 * c.dimension(), combine_bound(d, bound), Construction::HermitianCss);
}

// Sequences

int sequence_distance_bound(const CodeSequence& seq, int i) {
  const int n = seq.length();
  if (i <= 0) return 1;  // C_n is the whole space
  const auto& e = *seq.eval();
  const long long order = ag_order_bound(e, seq.pole(i));
  const long long goppa = i < n ? ag_goppa_bound(e, seq.pole(n - i)) : 1;
  return static_cast<int>(std::max<long long>({order, goppa, 1}));
}

std::optional<QuantumParams> construction_A(const CodeSequence& seq, int i, std::uint64_t budget,
                                            const std::vector<int>* power_indices) {
  if (seq.certificate().status != DualityStatus::SelfDual) return std::nullopt;
  const int n = seq.length();
  if (i < 0 || i > n) return std::nullopt;
  const int q = hermitian_root(*seq.field());
  std::vector<int> local;
  if (!power_indices) {
    local = ag_power_indices(seq, q);
    power_indices = &local;
  }
  if (i + (*power_indices)[i] > n) return std::nullopt;
  auto p = css_hermitian(seq.code(i), budget, sequence_distance_bound(seq, i));
  p.construction = Construction::A;
  return p;
}

TwistVector twist_root(const TwistVector& x, const FieldPtr& big) {
  const int q = hermitian_root(*big);
  const Field& b = *big;
  std::vector<Elem> out(x.size());
  const bool same = x.field().get() == big.get();
  for (int t = 0; t < x.size(); ++t) {
    const Elem v = same ? x[t] : Embedding::get(x.field(), big).forward(x[t]);
    const int lg = b.log(v);
    if (lg % (q + 1) != 0) throw QuantumError("twist entry is not a (q+1)-th power");
    out[t] = b.exp(lg / (q + 1));
  }
  return TwistVector(big, std::move(out));
}

std::optional<QuantumParams> construction_BC(const CodeSequence& seq, int i, TwistVariant variant, std::uint64_t budget,
                                             const std::vector<int>* power_indices) {
  const auto& cert = seq.certificate();
  if (cert.status == DualityStatus::Unverified || !cert.twist) return std::nullopt;
  const int n = seq.length();
  if (i < 0 || i > n) return std::nullopt;
  const Field& f = *seq.field();
  const TwistVector& x = *cert.twist;
  const int bound = sequence_distance_bound(seq, i);

  if (variant == TwistVariant::B) {
    if (f.degree() % 2 != 0) return std::nullopt;
    const int q = hermitian_root(f);
    for (Elem e : x.entries())
      if (!f.in_subfield(e, q)) return std::nullopt;
    std::vector<int> local;
    if (!power_indices) {
      local = ag_power_indices(seq, q);
      power_indices = &local;
    }
    if (i + (*power_indices)[i] > n) return std::nullopt;
    const TwistVector y = twist_root(x, seq.field());
    auto p = css_hermitian(code_star(y, seq.code(i)), budget, bound);
    p.construction = Construction::B;
    return p;
  }

  // (C): the sequence lives over GF(q); the quantum code is over GF(q).
  if (2 * i > n) return std::nullopt;
  const int q = f.order();
  const LinearCode ci = seq.code(i);
  // y^(q+1) = x makes y*C_i Hermitian self-orthogonal iff x*C_i is
  // orthogonal to C_i, which is checkable over GF(q) itself.
  if (!code_star(x, ci).dual().contains(ci)) return std::nullopt;
  if (static_cast<long long>(q) * q <= kMaxFieldOrder) {
    const auto big = Field::make(f.characteristic(), 2 * f.degree());
    const auto ext = code_star(twist_root(x, big), code_extend(ci, big));
    if (!ext.is_self_orthogonal(InnerProduct::Hermitian)) return std::nullopt;
  }
  // (y*C_i)^perpH = y*C_{n-i}; y* is an isometry and the weights of
  // C_{n-i} \ C_i do not change under scalar extension.
  const LinearCode cni = seq.code(n - i);
  Distance d = relative_distance(cni, ci, budget);
  d = combine_bound(d, bound);
  return make_params(q, n, n - 2 * i, std::max(d.value, 1), d.exact ? DistanceProvenance::Exact : DistanceProvenance::LowerBound,
                     Construction::C);
}

}  // namespace castleqec
