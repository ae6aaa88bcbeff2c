#include "doctest.h"
#include "oracles.hpp"

#include "castleqec/ag_code.hpp"

using namespace castleqec;

namespace {

CurvePtr ell4() { return curve_sep_variable(Field::make(2, 2), {0, 1, 1}, {0, 0, 0, 1}); }
CurvePtr ell9() { return curve_hyperelliptic(Field::make(3, 2), {0, 1, 0, 1}); }

const CodeSequence& suzuki_seq() {
  static const CodeSequence s = ag_sequence(curve_eval_set(curve_suzuki(2), "x"));
  return s;
}

int largest_pole_at_most(const CodeSequence& seq, int bound) {
  int best = -1;
  for (int m : seq.dimension_set())
    if (m <= bound) best = m;
  return best;
}

}  // namespace

TEST_CASE("ag_build") {
  const auto e4 = curve_eval_set(ell4(), "x");
  const auto rep = ag_build(e4, 0, 1u << 20);
  CHECK(rep.dimension() == 1);
  CHECK(rep.exact.value == 8);
  CHECK(rep.goppa == 8);

  const auto ez = curve_eval_set(curve_suzuki(2), "x");
  CHECK(ag_build(ez, 13).dimension() == 5);

  const auto e9 = curve_eval_set(ell9(), "y");
  CHECK(ag_build(e9, 13).dimension() == 13);

  // Dimension from the rank of the evaluation matrix against the semigroup.
  for (const auto& e : {e4, e9, curve_eval_set(curve_norm_trace_quotient(2, 4, 3), "x")}) {
    const auto& s = e->curve()->semigroup();
    const int top = e->length() + 2 * e->curve()->genus() + 2;
    for (int m = 0; m <= top; ++m) {
      const auto c = ag_build(e, m);
      CHECK(c.dimension() == s.ell(m) - s.ell(m - e->length()));
      CHECK(c.abundance == s.ell(m - e->length()));
      CHECK(c.m_perp() == e->length() + 2 * e->curve()->genus() - 2 - m);
    }
  }
}

TEST_CASE("code sequences") {
  const auto seq = ag_sequence(curve_eval_set(ell4(), "x"));
  CHECK(seq.dimension_set() == std::vector<int>{0, 2, 3, 4, 5, 6, 7, 9});
  CHECK(seq.code(0).dimension() == 0);
  CHECK(seq.code(8) == LinearCode::full(seq.field(), 8));
  for (int i = 1; i <= 8; ++i) {
    CHECK(seq.code(i).dimension() == i);
    CHECK(seq.code(i).contains(seq.code(i - 1)));
  }
  CHECK(seq.index_for_pole(1) == 1);
  CHECK(seq.index_for_pole(8) == 7);
  CHECK(seq.index_for_pole(100) == 8);
}

TEST_CASE("Goppa bound") {
  const auto ez = curve_eval_set(curve_suzuki(2), "x");
  CHECK(ag_goppa_bound(*ez, 0) == 64);
  CHECK(ag_goppa_bound(*ez, 57) == 7);
  CHECK(ag_build(ez, 57).abundance == 0);
  // Every code in a sequence gets a usable bound, clamped at 1 where the
  // formula itself goes down to 2 - g.
  for (const auto* seq : {&suzuki_seq()}) {
    for (int m : seq->dimension_set()) CHECK(ag_goppa_bound(*seq->eval(), m) >= 1);
  }
  const auto e4 = curve_eval_set(ell4(), "x");
  for (int m : ag_sequence(e4).dimension_set()) CHECK(ag_goppa_bound(*e4, m) >= 1);
  // Abundant: a = l(1Q) = 1 for m = 9 on n = 8.
  CHECK(ag_build(e4, 9).abundance == 1);
  CHECK(ag_goppa_bound(*e4, 9) == 8 - 9 + 2);
  CHECK(ag_goppa_bound(*ez, suzuki_seq().pole(64)) == 1);
}

TEST_CASE("order bound") {
  const auto e4 = curve_eval_set(ell4(), "x");
  CHECK(ag_order_bound(*e4, -1) == 1);
  CHECK(ag_order_bound(*e4, 5) == 5);
  for (const auto& e : {e4, curve_eval_set(ell9(), "y"), curve_eval_set(curve_suzuki(2), "x")}) {
    const int top = e->length() + 2 * e->curve()->genus() - 2;
    for (int m = 0; m <= top; ++m) CHECK(ag_order_bound(*e, m) >= ag_goppa_bound(*e, top - m));
  }
}

TEST_CASE("bounds never exceed exact distances") {
  for (const auto& e : {curve_eval_set(ell4(), "x"), curve_eval_set(ell9(), "y"), curve_eval_set(curve_norm_trace_quotient(2, 4, 3), "x")}) {
    const auto seq = ag_sequence(e);
    const bool self_dual = seq.certificate().status == DualityStatus::SelfDual;
    for (int m : seq.dimension_set()) {
      const auto c = ag_build(e, m, 1u << 22);
      if (!c.exact.exact()) continue;
      CHECK(c.goppa <= c.exact.value);
      CHECK(ag_distance_order_bound(*e, m) <= c.exact.value);
      // The order bound at m-perp reaches C(mQ) through the duality.
      if (self_dual || seq.certificate().twist) CHECK(c.order <= c.exact.value);
    }
  }
}

TEST_CASE("duality certification") {
  const auto s4 = ag_sequence(curve_eval_set(ell4(), "x"));
  CHECK(s4.certificate().status == DualityStatus::SelfDual);
  CHECK(suzuki_seq().certificate().status == DualityStatus::SelfDual);
  for (int i = 0; i <= 8; ++i) CHECK(s4.code(i).dual() == s4.code(8 - i));

  // y^2 = x^3 - x + 1 over GF(3).
  const auto odd = ag_sequence(curve_eval_set(curve_hyperelliptic(Field::make(3, 1), {1, 2, 0, 1}), "x"));
  REQUIRE(odd.certificate().status == DualityStatus::FormallySelfDual);
  REQUIRE(odd.certificate().twist);
  const auto& x = *odd.certificate().twist;
  CHECK(x[0] == 1);
  CHECK_FALSE(x.is_constant());
  const int n = odd.length();
  for (int i = 0; i <= n; ++i) CHECK(code_star(x, odd.code(n - i)) == odd.code(i).dual());
}

TEST_CASE("self-orthogonality ranges") {
  struct Case {
    std::string name;
    EvalSetPtr e;
    InnerProduct mode;
    int closed_form;
  };
  const auto f81 = Field::make(3, 4);
  const auto f64 = Field::make(2, 6);
  std::vector<Case> cases = {
      {"suzuki", curve_eval_set(curve_suzuki(2), "x"), InnerProduct::Euclidean, 45},
      {"mq9", curve_eval_set(curve_sep_variable(f81, {0, 1, 0, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, f81->exp(5)}), "x"),
       InnerProduct::Hermitian, 25},
      {"mq8", curve_eval_set(curve_sep_variable(f64, {0, 1, 1, 0, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1}), "x"), InnerProduct::Hermitian, 30},
      {"m26", curve_eval_set(curve_hyperelliptic(f64, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1}), "x"), InnerProduct::Hermitian, 14},
      {"nt243", curve_eval_set(curve_norm_trace_quotient(2, 4, 3), "x"), InnerProduct::Hermitian, 8},
      {"nt237", curve_eval_set(curve_norm_trace_quotient(2, 3, 7), "x"), InnerProduct::Euclidean, 24},
  };
  // y^2 + y = x^u over GF(q^2) with u = q + 1, so x^u lies in GF(q) and
  // n = 2 q^2: (q + 1) m <= 2 q^2 + u - 3.
  for (auto [k, u] : {std::pair{2, 3}, std::pair{4, 5}, std::pair{6, 9}}) {
    const auto f = Field::make(2, k);
    Poly g(u + 1, 0);
    g[u] = 1;
    const int q = 1 << (k / 2);
    const auto e = curve_eval_set(curve_hyperelliptic(f, g), "x");
    REQUIRE(e->length() == 2 * q * q);
    cases.push_back({"he", e, InnerProduct::Hermitian, (2 * q * q + u - 3) / (q + 1)});
  }
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto seq = ag_sequence(c.e);
    REQUIRE(seq.certificate().status == DualityStatus::SelfDual);
    const auto r = ag_self_orthogonality_range(seq, c.mode);
    CHECK(r.closed_form == c.closed_form);
    CHECK(r.m == largest_pole_at_most(seq, c.closed_form));
    CHECK(r.index == seq.index_for_pole(c.closed_form));
  }
}

TEST_CASE("trace bases") {
  const auto e4 = curve_eval_set(ell4(), "x");
  const auto t0 = ag_trace_basis(*e4, 0, 2);
  REQUIRE(t0.generators.size() == 1);
  CHECK(t0.generators[0].label == "1");
  CHECK(t0.code() == LinearCode::from_rows(t0.small, 8, [] {
          Matrix m(1, 8);
          for (int t = 0; t < 8; ++t) m.at(0, t) = 1;
          return m;
        }()));

  const auto t3 = ag_trace_basis(*e4, 3, 2);
  std::vector<std::string> labels;
  for (const auto& g : t3.generators) labels.push_back(g.label);
  CHECK(labels == std::vector<std::string>{"1", "tr(x)", "tr(a*x)", "tr(y)", "tr(a*y)"});
  CHECK(t3.code().dimension() == 5);
  const auto dual = code_min_weight(t3.code().dual());
  CHECK(dual.value == 4);

  // The span of the reduced generators is the trace code.
  const auto he16 = curve_eval_set(curve_hyperelliptic(Field::make(2, 4), {0, 0, 0, 0, 0, 1}), "x");
  const auto ez = curve_eval_set(curve_suzuki(2), "x");
  for (const auto& [e, q] : {std::pair{e4, 2}, std::pair{ez, 2}, std::pair{he16, 4}, std::pair{he16, 2},
                             std::pair{curve_eval_set(curve_norm_trace_quotient(4, 2, 5), "x"), 4}}) {
    for (int m = 0; m <= 40; m += 3) CHECK(ag_trace_basis(*e, m, q).code() == code_trace(ag_build(e, m).code, q));
  }

  const auto t30 = ag_trace_basis(*ez, 30, 2);
  CHECK(t30.code().dimension() == 32);
  CHECK(t30.code().dual() == t30.code());
  CHECK_FALSE(ag_trace_basis(*ez, 31, 2).code().is_self_orthogonal(InnerProduct::Euclidean));
  const auto range = ag_trace_self_orthogonal_range(*ez, 2);
  CHECK(range.closed_form == 30);
  CHECK(range.verified == 30);
  CHECK(range.first_failure == 31);

  CHECK_THROWS(ag_trace_basis(*curve_eval_set(ell9(), "y"), 3, 3));
  CHECK_THROWS(ag_trace_basis(*curve_eval_set(curve_norm_trace_quotient(2, 4, 3), "x"), 3, 2));
}

TEST_CASE("traces of basis functions") {
  for (const auto& [e, q] : {std::pair{curve_eval_set(curve_suzuki(2), "x"), 2}, std::pair{curve_eval_set(ell4(), "x"), 2},
                             std::pair{curve_eval_set(curve_norm_trace_quotient(2, 4, 3), "x"), 4}}) {
    const Field& f = *e->field();
    int r = 0;
    for (int s = 1; s < f.order(); s *= q) ++r;
    long long qr1 = 1;
    for (int i = 1; i < r; ++i) qr1 *= q;
    for (const auto& fn : e->curve()->function_basis(40)) {
      auto powered = fn;
      for (auto& x : powered.exponents) x *= q;
      const auto v = e->evaluate(fn), vq = e->evaluate(powered);
      bool nonzero = false;
      for (int t = 0; t < e->length(); ++t) {
        const Elem tr = trace_in_place(f, v[t], q);
        CHECK(tr == trace_in_place(f, vq[t], q));
        nonzero = nonzero || tr != 0;
      }
      if (fn.pole_order > 0 && fn.pole_order * qr1 < e->length()) CHECK(nonzero);
    }
  }
}

TEST_CASE("incomplete trace search") {
  const auto e4 = curve_eval_set(ell4(), "x");
  const auto hit = ag_incomplete_trace_search(*e4, 3, 2);
  REQUIRE(hit);
  CHECK(hit->removed.size() == 1);
  CHECK(ag_trace_basis(*e4, 3, 2).generators[hit->removed[0]].label == "tr(y)");
  CHECK(hit->code.dimension() == 4);
  CHECK(hit->code.dual() == hit->code);
  CHECK(hit->dual_distance.value == 4);
  CHECK(hit->full_dual_distance.value == 4);

  // Already self-orthogonal with nothing left to drop.
  const auto ez = curve_eval_set(curve_suzuki(2), "x");
  const auto zero = ag_incomplete_trace_search(*ez, 0, 2);
  REQUIRE(zero);
  CHECK(zero->removed.empty());
  CHECK(zero->code == ag_trace_basis(*ez, 0, 2).code());
}

TEST_CASE("Suzuki translations") {
  const auto& seq = suzuki_seq();
  const auto perms = ag_suzuki_translations(*seq.eval());
  CHECK(perms.size() == 64);
  CHECK(permutations_transitive(perms, 64));
  for (int i : {1, 5, 20, 40, 63})
    for (std::size_t p = 0; p < perms.size(); p += 9) CHECK(code_has_automorphism(seq.code(i), perms[p]));
  CHECK(ag_suzuki_translations(*curve_eval_set(ell4(), "x")).empty());
}
