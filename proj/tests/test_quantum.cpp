#include "doctest.h"
#include "oracles.hpp"

#include "castleqec/quantum.hpp"

using namespace castleqec;

namespace {

CurvePtr ell4() { return curve_sep_variable(Field::make(2, 2), {0, 1, 1}, {0, 0, 0, 1}); }

// y^2 = x^3 - x + 1 over GF(9): formally self-dual, twist inside GF(3).
const CodeSequence& odd9() {
  static const CodeSequence s = ag_sequence(curve_eval_set(curve_hyperelliptic(Field::make(3, 2), {1, 2, 0, 1}), "x"));
  return s;
}

const CodeSequence& suzuki() {
  static const CodeSequence s = ag_sequence(curve_eval_set(curve_suzuki(2), "x"));
  return s;
}

// Independent GV arithmetic.
BigInt gv_lhs(int n, int k, int q) {
  BigInt num = 1;
  for (int i = 0; i < n - k + 2; ++i) num *= q;
  return (num - 1) / (q * q - 1);
}

BigInt gv_rhs(int n, int d, int q) {
  BigInt sum = 0, binom = 1, scale = 1;
  for (int i = 1; i <= d - 1; ++i) {
    binom = binom * (n - i + 1) / i;
    sum += scale * binom;
    scale *= q * q - 1;
  }
  return sum;
}

bool same_params(const QuantumParams& a, const QuantumParams& b) { return a.n == b.n && a.k == b.k && a.d == b.d && a.q == b.q; }

}  // namespace

TEST_CASE("css_nested") {
  const auto f2 = Field::make(2, 1);
  const auto full = LinearCode::full(f2, 3);
  const auto p = css_nested(LinearCode(f2, 3), full);
  CHECK(p.n == 3);
  CHECK(p.k == 3);
  CHECK(p.d == 1);
  CHECK(p.provenance == DistanceProvenance::Exact);
  CHECK(css_nested(full, full).k == 0);
  Matrix ones(1, 3);
  for (int t = 0; t < 3; ++t) ones.at(0, t) = 1;
  const auto rep = LinearCode::from_rows(f2, 3, ones);
  CHECK_THROWS_AS(css_nested(full, rep), QuantumError);

  // Steane from the [7,4] Hamming code and its even subcode.
  Matrix g(4, 7);
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) g.at(s, s + t) = std::vector<Elem>{1, 1, 0, 1}[t];
  const auto ham = LinearCode::from_rows(f2, 7, g);
  const auto steane = css_nested(ham.dual(), ham);
  CHECK(steane.k == 1);
  CHECK(steane.d == 3);
}

TEST_CASE("css_nested beyond the budget falls back to the bound") {
  const auto f16 = Field::make(2, 4);
  std::mt19937 rng(2);
  const auto c2 = oracle::random_code(f16, 30, 15, rng);
  const auto c1 = LinearCode::from_rows(f16, 30, c2.generator().top(7));
  const auto p = css_nested(c1, c2, 1000, 3);
  CHECK(p.provenance == DistanceProvenance::LowerBound);
  CHECK(p.d == 3);
  CHECK(p.k == 8);
}

TEST_CASE("construction C on the elliptic curve over GF(9)") {
  const auto seq = ag_sequence(curve_eval_set(curve_hyperelliptic(Field::make(3, 2), {0, 1, 0, 1}), "y"));
  const auto p = construction_BC(seq, 1, TwistVariant::C);
  REQUIRE(p);
  CHECK(p->n == 15);
  CHECK(p->k == 13);
  CHECK(p->d == 2);
  CHECK(p->q == 9);
  CHECK(p->gv == GvStatus::Meets);
  CHECK(p->construction == Construction::C);
  CHECK_FALSE(construction_BC(seq, 8, TwistVariant::C));
}

TEST_CASE("css_self_orthogonal") {
  const auto f8 = Field::make(2, 3);
  const auto z = css_self_orthogonal(LinearCode(f8, 10));
  CHECK(z.n == 10);
  CHECK(z.k == 10);
  CHECK(z.d == 1);

  const auto nt = ag_sequence(curve_eval_set(curve_norm_trace_quotient(2, 3, 7), "x"));
  const auto p = css_self_orthogonal(nt.code(2));
  CHECK(p.n == 32);
  CHECK(p.k == 28);
  CHECK(p.d == 2);
  CHECK(p.q == 8);

  // Listed with d = 3; the exact distance is larger.
  const auto s5 = css_self_orthogonal(suzuki().code(5));
  CHECK(s5.n == 64);
  CHECK(s5.k == 54);
  CHECK(s5.provenance == DistanceProvenance::Exact);
  CHECK(s5.d >= 3);
  CHECK(s5.d == 4);

  CHECK_THROWS_AS(css_self_orthogonal(LinearCode::full(f8, 4)), QuantumError);
}

TEST_CASE("css_hermitian") {
  const auto f4 = Field::make(2, 2);
  const auto z = css_hermitian(LinearCode(f4, 6));
  CHECK(z.q == 2);
  CHECK(z.k == 6);
  CHECK(z.d == 1);
  CHECK_THROWS(css_hermitian(LinearCode(Field::make(2, 3), 6)));
  CHECK_THROWS_AS(css_hermitian(LinearCode::full(f4, 2)), QuantumError);

  const auto s4 = ag_sequence(curve_eval_set(ell4(), "x"));
  const auto p = css_hermitian(s4.code(1));
  CHECK(p.n == 8);
  CHECK(p.k == 6);
  CHECK(p.d == 2);
  CHECK(p.q == 2);
  CHECK(p.gv == GvStatus::Exceeds);

  // y^2 + y = x^9 over GF(64), C(9Q) has dimension 6.
  const auto m26 = ag_sequence(curve_eval_set(curve_hyperelliptic(Field::make(2, 6), {0, 0, 0, 0, 0, 0, 0, 0, 0, 1}), "x"));
  CHECK(m26.pole(6) == 9);
  const auto a = construction_A(m26, 6);
  REQUIRE(a);
  CHECK(a->n == 128);
  CHECK(a->k == 116);
  CHECK(a->q == 8);
  CHECK(a->d >= 4);
}

TEST_CASE("hermitian dual distance matches the Euclidean dual distance") {
  std::mt19937 rng(41);
  for (const auto& f : {Field::make(2, 2), Field::make(3, 2), Field::make(2, 4)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto c = oracle::random_code(f, 7, 4, rng);
      CHECK(code_min_weight(code_hermitian_dual(c)).value == code_min_weight(c.dual()).value);
      CHECK(code_min_weight(code_hermitian_dual(c)).value == oracle::min_weight(code_hermitian_dual(c)));
    }
  }
}

TEST_CASE("construction A") {
  const auto s4 = ag_sequence(curve_eval_set(ell4(), "x"));
  const auto a0 = construction_A(s4, 0);
  REQUIRE(a0);
  CHECK(a0->k == 8);
  CHECK(a0->d == 1);

  // q(i) never exceeds the index of pole order q m_i.
  struct Case {
    const CodeSequence* seq;
    int q;
  };
  const auto he16 = ag_sequence(curve_eval_set(curve_hyperelliptic(Field::make(2, 4), {0, 0, 0, 0, 0, 1}), "x"));
  const auto nt = ag_sequence(curve_eval_set(curve_norm_trace_quotient(2, 4, 3), "x"));
  for (auto [seq, q] : {Case{&s4, 2}, Case{&he16, 4}, Case{&nt, 4}}) {
    const auto qi = ag_power_indices(*seq, q);
    const int n = seq->length();
    for (int i = 0; i <= n; ++i) {
      if (i > 0) CHECK(qi[i] <= seq->index_for_pole(q * seq->pole(i)));
      // Direct check that q(i) is the first j containing C_i^q.
      const auto powered = seq->code(i).power(q);
      CHECK(seq->code(qi[i]).contains(powered));
      if (qi[i] > 0) CHECK_FALSE(seq->code(qi[i] - 1).contains(powered));
      const auto a = construction_A(*seq, i);
      CHECK(static_cast<bool>(a) == (i + qi[i] <= n));
      if (a) {
        CHECK(a->k == n - 2 * i);
        CHECK(a->construction == Construction::A);
      }
    }
  }

  // Availability on y^2 + y = x^5 over GF(16) follows (q + 1) m <= 2 q^2 + u - 3.
  for (int i = 1; i <= he16.length(); ++i)
    CHECK(static_cast<bool>(construction_A(he16, i)) == (5 * he16.pole(i) <= 2 * 16 + 5 - 3));
}

TEST_CASE("construction B") {
  // With the all-ones twist, B and A agree.
  const auto s4 = ag_sequence(curve_eval_set(ell4(), "x"));
  for (int i = 0; i <= 8; ++i) {
    const auto a = construction_A(s4, i);
    const auto b = construction_BC(s4, i, TwistVariant::B);
    REQUIRE(static_cast<bool>(a) == static_cast<bool>(b));
    if (a) CHECK(same_params(*a, *b));
  }

  const auto& seq = odd9();
  REQUIRE(seq.certificate().status == DualityStatus::FormallySelfDual);
  const auto& x = *seq.certificate().twist;
  const auto f3 = Field::make(3, 1);
  const auto& emb = Embedding::get(f3, seq.field());
  std::vector<Elem> small;
  for (Elem v : x.entries()) {
    REQUIRE(seq.field()->in_subfield(v, 3));
    small.push_back(emb.back(v));
  }
  const auto y = twist_root(TwistVector(f3, small), seq.field());
  for (int t = 0; t < y.size(); ++t) CHECK(seq.field()->pow(y[t], 4) == x[t]);

  // Any other root y * zeta, zeta^4 = 1, gives the same parameters.
  std::mt19937 rng(43);
  std::vector<Elem> units;
  for (int a = 1; a < 9; ++a)
    if (seq.field()->pow(static_cast<Elem>(a), 4) == 1) units.push_back(static_cast<Elem>(a));
  REQUIRE(units.size() == 4);
  std::vector<Elem> other(y.size());
  for (int t = 0; t < y.size(); ++t) other[t] = seq.field()->mul(y[t], units[rng() % 4]);
  const TwistVector y2(seq.field(), other);
  int available = 0;
  for (int i = 0; i <= seq.length(); ++i) {
    const auto b = construction_BC(seq, i, TwistVariant::B);
    if (!b) continue;
    ++available;
    const auto c1 = code_star(y, seq.code(i)), c2 = code_star(y2, seq.code(i));
    REQUIRE(c1.is_self_orthogonal(InnerProduct::Hermitian));
    REQUIRE(c2.is_self_orthogonal(InnerProduct::Hermitian));
    CHECK(same_params(css_hermitian(c1), css_hermitian(c2)));
    CHECK(b->k == seq.length() - 2 * i);
    CHECK(b->d <= css_hermitian(c1).d);
  }
  CHECK(available >= 3);
}

TEST_CASE("Euclidean CSS agrees with the nested-pair theorem") {
  std::mt19937 rng(47);
  const auto s4 = ag_sequence(curve_eval_set(ell4(), "x"));
  const auto nt = ag_sequence(curve_eval_set(curve_norm_trace_quotient(2, 3, 7), "x"));
  int compared = 0;
  for (const auto* seq : {&s4, &suzuki(), &nt}) {
    const auto range = ag_self_orthogonality_range(*seq, InnerProduct::Euclidean);
    for (int i = 1; i <= range.index; ++i) {
      const auto c = seq->code(i);
      if (std::pow(seq->field()->order(), i) > 4096) break;
      // The code and a random subcode.
      const auto sub = LinearCode::from_rows(seq->field(), seq->length(), c.generator().top(1 + static_cast<int>(rng() % i)));
      for (const auto& code : {c, sub}) {
        const auto a = css_self_orthogonal(code);
        const auto b = css_nested(code, code.dual());
        REQUIRE(a.provenance == DistanceProvenance::Exact);
        REQUIRE(b.provenance == DistanceProvenance::Exact);
        CHECK(same_params(a, b));
        ++compared;
      }
    }
  }
  CHECK(compared > 10);
}

TEST_CASE("GV classification") {
  const auto e = gv_evaluate(8, 6, 2, 2);
  CHECK(e.status == GvStatus::Exceeds);
  CHECK(e.lhs == 5);
  CHECK(e.rhs == 8);
  CHECK(e.d_max == 1);

  CHECK(gv_status(64, 62, 2, 8) == GvStatus::Meets);
  const auto g64 = gv_evaluate(64, 62, 3, 8);
  CHECK(g64.lhs == 65);
  CHECK(g64.d_max == 2);
  CHECK(gv_status(15, 13, 2, 9) == GvStatus::Meets);
  CHECK(gv_status(8, 5, 2, 2) == GvStatus::NotApplicable);
  CHECK(gv_status(8, 0, 4, 2) == GvStatus::NotApplicable);
  CHECK(gv_status(8, 6, 1, 2) == GvStatus::NotApplicable);
  CHECK(to_string(GvStatus::NotApplicable) == "na");

  for (int q : {2, 3, 4, 8, 9})
    for (int n = 4; n <= 40; n += 3)
      for (int k = 2; k < n; k += 2) {
        if ((n - k) % 2) continue;
        int meets = 0;
        GvStatus prev = GvStatus::Below;
        for (int d = 2; d <= n; ++d) {
          const auto r = gv_evaluate(n, k, d, q);
          CHECK(r.lhs == gv_lhs(n, k, q));
          CHECK(r.rhs == gv_rhs(n, d, q));
          CHECK(static_cast<int>(r.status) >= static_cast<int>(prev));
          prev = r.status;
          meets += r.status == GvStatus::Meets;
          int dmax = 1;
          for (int t = 2; t <= n && gv_lhs(n, k, q) > gv_rhs(n, t, q); ++t) dmax = t;
          CHECK(r.d_max == dmax);
          if (dmax >= 2) CHECK((r.status == GvStatus::Meets) == (d == dmax));
        }
        CHECK(meets <= 1);
      }
}

TEST_CASE("make_params") {
  const auto p = make_params(8, 64, 62, 2, DistanceProvenance::LowerBound, Construction::C);
  CHECK(p.gv == GvStatus::Meets);
  CHECK(to_string(p.provenance) == "lower-bound");
  CHECK(to_string(Construction::HermitianCss) == "hermitian-CSS");
  CHECK_THROWS(make_params(2, 4, 6, 1, DistanceProvenance::Exact, Construction::Nested));
}
