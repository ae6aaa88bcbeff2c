#include "doctest.h"
#include "oracles.hpp"

#include "castleqec/curve.hpp"

using namespace castleqec;

namespace {

// Arithmetic through the schoolbook oracle, not the field tables.
struct Slow {
  int p, k;
  std::vector<int> mod;
  explicit Slow(const Field& f) : p(f.characteristic()), k(f.degree()), mod(f.modulus().begin(), f.modulus().end()) {}
  int mul(int a, int b) const { return oracle::poly_mul(p, mod, a, b); }
  int add(int a, int b) const { return oracle::poly_add(p, k, a, b); }
  int pow(int a, int e) const {
    int out = 1;
    while (e-- > 0) out = mul(out, a);
    return out;
  }
  int poly(const Poly& c, int x) const {
    int out = 0;
    for (std::size_t i = 0; i < c.size(); ++i) out = add(out, mul(c[i], pow(x, static_cast<int>(i))));
    return out;
  }
};

// Affine solutions of F(y) = G(x), counted directly.
int brute_count(const Field& f, const Poly& fy, const Poly& gx) {
  const Slow s(f);
  std::vector<int> fv(f.order()), gv(f.order());
  for (int a = 0; a < f.order(); ++a) {
    fv[a] = s.poly(fy, a);
    gv[a] = s.poly(gx, a);
  }
  int count = 0;
  for (int x = 0; x < f.order(); ++x)
    for (int y = 0; y < f.order(); ++y) count += fv[y] == gv[x];
  return count;
}

void check_points_on_curve(const PointedCurve& c) {
  const Slow s(*c.field());
  for (const auto& pt : c.points()) REQUIRE(s.poly(c.f_poly(), pt.y) == s.poly(c.g_poly(), pt.x));
  // Sorted by x, then y, with no repeats.
  for (std::size_t i = 1; i < c.points().size(); ++i) {
    const auto& a = c.points()[i - 1];
    const auto& b = c.points()[i];
    CHECK(std::pair(a.x, a.y) < std::pair(b.x, b.y));
  }
}

int rank_of(const EvaluationSet& e, const std::vector<CurveFunction>& fns) {
  Matrix m(static_cast<int>(fns.size()), e.length());
  for (std::size_t r = 0; r < fns.size(); ++r) {
    const auto v = e.evaluate(fns[r]);
    for (int t = 0; t < e.length(); ++t) m.at(static_cast<int>(r), t) = v[t];
  }
  return LinearCode::from_rows(e.field(), e.length(), m).dimension();
}

CurvePtr ell4() { return curve_sep_variable(Field::make(2, 2), {0, 1, 1}, {0, 0, 0, 1}); }

}  // namespace

TEST_CASE("separated-variable curves") {
  const auto c = ell4();
  CHECK(c->genus() == 1);
  CHECK(c->point_count() == 9);
  CHECK(c->semigroup().generators() == std::vector<int>{2, 3});
  check_points_on_curve(*c);
  CHECK(static_cast<int>(c->points().size()) == brute_count(*c->field(), c->f_poly(), c->g_poly()));

  const auto f81 = Field::make(3, 4);
  const auto mq9 = curve_sep_variable(f81, {0, 1, 0, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, f81->exp(5)});
  CHECK(mq9->point_count() == 244);
  CHECK(mq9->genus() == 9);
  check_points_on_curve(*mq9);
  CHECK(static_cast<int>(mq9->points().size()) == brute_count(*f81, mq9->f_poly(), mq9->g_poly()));

  // y^4 + y^2 + y = x^9 over GF(64), F linearized of degree q/p with q = 8.
  const auto f64 = Field::make(2, 6);
  const auto mq8 = curve_sep_variable(f64, {0, 1, 1, 0, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(mq8->point_count() == 257);
  CHECK(mq8->genus() == 12);
  CHECK(static_cast<int>(mq8->points().size()) == brute_count(*f64, mq8->f_poly(), mq8->g_poly()));

  CHECK_THROWS_AS(curve_sep_variable(f64, {0, 1, 1}, {0, 0, 0, 0, 1}), CurveError);
  CHECK_THROWS_AS(curve_sep_variable(f64, {1}, {0, 1}), CurveError);
}

TEST_CASE("hyperelliptic curves") {
  const auto f3 = Field::make(3, 1);
  // x^3 - x + 1 takes the value 1 everywhere on GF(3).
  const auto c = curve_hyperelliptic(f3, {1, 2, 0, 1});
  CHECK(c->point_count() == 7);
  CHECK(c->family() == CurveFamily::HyperellipticOdd);
  CHECK(c->is_castle());
  check_points_on_curve(*c);

  const auto even = curve_hyperelliptic(Field::make(2, 2), {0, 0, 0, 1});
  CHECK(even->family() == CurveFamily::HyperellipticEven);
  CHECK(even->point_count() == ell4()->point_count());
  const auto sep = ell4();
  REQUIRE(even->points().size() == sep->points().size());
  for (std::size_t i = 0; i < even->points().size(); ++i) {
    CHECK(even->points()[i].x == sep->points()[i].x);
    CHECK(even->points()[i].y == sep->points()[i].y);
  }

  const auto he16 = curve_hyperelliptic(Field::make(2, 4), {0, 0, 0, 0, 0, 1});
  CHECK(he16->genus() == 2);
  CHECK(curve_eval_set(he16, "x")->length() == 32);

  CHECK_THROWS_AS(curve_hyperelliptic(f3, {1, 0, 1}), CurveError);
  // (x - 1)^2 (x + 1) is not squarefree.
  CHECK_THROWS_AS(curve_hyperelliptic(f3, {1, 2, 2, 1}), CurveError);
}

TEST_CASE("Suzuki curve") {
  const auto c = curve_suzuki(2);
  CHECK(c->field()->order() == 8);
  CHECK(c->genus() == 14);
  CHECK(c->point_count() == 65);
  CHECK(c->semigroup().genus() == 14);
  CHECK(c->semigroup().generators() == std::vector<int>{8, 10, 12, 13});
  CHECK(c->is_castle());

  const Slow s(*c->field());
  const auto& gens = c->generators();
  for (std::size_t i = 0; i < c->points().size(); ++i) {
    const int x = c->points()[i].x, y = c->points()[i].y;
    REQUIRE(s.add(s.pow(y, 8), y) == s.mul(s.pow(x, 2), s.add(s.pow(x, 8), x)));
    const int z = s.add(s.pow(x, 5), s.pow(y, 4));
    CHECK(gens[2].values[i] == z);
    CHECK(gens[3].values[i] == s.add(s.mul(x, s.pow(y, 4)), s.pow(z, 4)));
  }
  int solutions = 0;
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) solutions += s.add(s.pow(y, 8), y) == s.mul(s.pow(x, 2), s.add(s.pow(x, 8), x));
  CHECK(solutions == 64);

  CHECK(curve_eval_set(c, "x", std::vector<Elem>{0, 1, 2, 3, 4, 5, 6, 7})->length() == 64);
  CHECK_THROWS_AS(curve_suzuki(3), CurveError);
  CHECK_THROWS_AS(curve_suzuki(32), UnsupportedFieldError);
}

TEST_CASE("norm-trace quotients") {
  struct Case { int q, r, u, affine; };
  // GF(q^r) has q^(r-1) trace preimages per value; x^u hits each norm class.
  for (auto [q, r, u, affine] : {Case{2, 4, 3, 32}, Case{2, 3, 7, 32}, Case{2, 2, 3, 8}, Case{4, 2, 5, 64}, Case{3, 2, 4, 27}}) {
    const auto c = curve_norm_trace_quotient(q, r, u);
    CHECK(static_cast<int>(c->points().size()) == affine);
    CHECK(static_cast<int>(c->points().size()) == brute_count(*c->field(), c->f_poly(), c->g_poly()));
    int qr1 = 1;
    for (int i = 0; i < r - 1; ++i) qr1 *= q;
    CHECK(c->genus() == (qr1 - 1) * (u - 1) / 2);
    check_points_on_curve(*c);
  }
  CHECK(curve_eval_set(curve_norm_trace_quotient(2, 4, 3), "x")->length() == 32);
  CHECK(curve_norm_trace_quotient(2, 4, 3)->field()->order() == 16);
  CHECK(curve_norm_trace_quotient(2, 3, 7)->field()->order() == 8);
  CHECK_THROWS_AS(curve_norm_trace_quotient(2, 4, 4), CurveError);
  CHECK_THROWS_AS(curve_norm_trace_quotient(2, 11, 1), UnsupportedFieldError);
  CHECK_THROWS(curve_norm_trace_quotient(6, 2, 7));
}

TEST_CASE("genus equals the number of gaps") {
  std::vector<CurvePtr> curves = {ell4(), curve_suzuki(2), curve_norm_trace_quotient(2, 4, 3), curve_norm_trace_quotient(2, 3, 7),
                                  curve_hyperelliptic(Field::make(3, 2), {0, 1, 0, 1})};
  for (const auto& c : curves) CHECK(c->genus() == c->semigroup().genus());
}

TEST_CASE("Castle identity") {
  for (const auto& c : {ell4(), curve_suzuki(2), curve_hyperelliptic(Field::make(2, 4), {0, 0, 0, 0, 0, 1})}) {
    CHECK(c->is_castle());
    CHECK(c->point_count() == c->field()->order() * c->semigroup().multiplicity() + 1);
  }
}

TEST_CASE("evaluation sets") {
  const auto f3 = Field::make(3, 1);
  const auto odd = curve_hyperelliptic(f3, {1, 2, 0, 1});
  const auto e = curve_eval_set(odd, "x");
  // F(a) = 1 is a nonzero square for every a.
  CHECK(e->split_values() == std::vector<Elem>{0, 1, 2});
  CHECK(e->length() == 6);
  CHECK(e->is_castle_type());

  // y^2 = x^3 + x over GF(9), fibred by y.
  const auto f9 = Field::make(3, 2);
  const auto ell9 = curve_hyperelliptic(f9, {0, 1, 0, 1});
  const auto ey = curve_eval_set(ell9, "y");
  CHECK(ey->length() == 15);
  CHECK(ey->is_complete());
  CHECK(ey->is_weak_castle());
  CHECK_FALSE(ell9->is_castle());
  CHECK_FALSE(ey->is_castle_type());
  for (Elem a : ey->split_values()) {
    int fiber = 0;
    for (int idx : ey->point_indices()) fiber += ell9->points()[idx].y == a;
    CHECK(fiber == 3);
  }

  // Points grouped by fibre in the order of U, then by the other coordinate.
  const auto ex = curve_eval_set(ell4(), "x");
  CHECK(ex->length() == 8);
  for (int i = 1; i < ex->length(); ++i) {
    const auto& a = ex->curve()->points()[ex->point_indices()[i - 1]];
    const auto& b = ex->curve()->points()[ex->point_indices()[i]];
    CHECK(std::pair(a.x, a.y) < std::pair(b.x, b.y));
  }
  CHECK(curve_eval_set(ell4(), "x", std::vector<Elem>{3, 1})->split_values() == std::vector<Elem>{1, 3});

  CHECK_THROWS_AS(curve_eval_set(ell4(), "t"), CurveError);
  // Over GF(4), y^2 + y = b has no root when b has trace 1, so the y-fibre
  // over such a value is empty.
  bool threw = false;
  for (Elem a = 0; a < 4 && !threw; ++a) {
    try {
      curve_eval_set(ell4(), "y", std::vector<Elem>{a});
    } catch (const CurveError&) {
      threw = true;
    }
  }
  CHECK(threw);
}

TEST_CASE("function bases") {
  const auto c = ell4();
  const auto b0 = curve_function_basis(*c, 0);
  REQUIRE(b0.size() == 1);
  CHECK(b0[0].exponents == std::vector<int>{0, 0});
  CHECK(curve_function_basis(*c, -1).empty());

  const auto b5 = curve_function_basis(*c, 5);
  std::vector<int> poles;
  for (const auto& f : b5) poles.push_back(f.pole_order);
  CHECK(poles == std::vector<int>{0, 2, 3, 4, 5});
  CHECK(b5[1].exponents == std::vector<int>{1, 0});
  CHECK(b5[2].exponents == std::vector<int>{0, 1});
  CHECK(b5[3].exponents == std::vector<int>{2, 0});
  CHECK(b5[4].exponents == std::vector<int>{1, 1});

  // Pole order 6 = 2 * 3: x^3 by default, y^2 under the q = 2 convention.
  CHECK(curve_function_basis(*c, 6).back().exponents == std::vector<int>{3, 0});
  CHECK(curve_function_basis(*c, 6, 2).back().exponents == std::vector<int>{0, 2});

  // Below n the evaluation map is injective on L(mQ).
  for (const auto& curve : {ell4(), curve_suzuki(2), curve_norm_trace_quotient(2, 4, 3)}) {
    const auto e = curve_eval_set(curve, curve->generators()[0].name);
    for (int m = 0; m < e->length(); m += 3) {
      const auto fns = curve_function_basis(*curve, m);
      CHECK(static_cast<long long>(fns.size()) == curve->semigroup().ell(m));
      for (const auto& f : fns) {
        int pole = 0;
        for (std::size_t i = 0; i < f.exponents.size(); ++i) pole += f.exponents[i] * curve->generators()[i].pole_order;
        CHECK(pole == f.pole_order);
      }
      CHECK(rank_of(*e, fns) == static_cast<int>(fns.size()));
    }
  }
}

TEST_CASE("kernel basis") {
  const auto e = curve_eval_set(ell4(), "x");
  CHECK(curve_kernel_basis(*e, 7).empty());
  const auto k8 = curve_kernel_basis(*e, 8);
  REQUIRE(k8.size() == 1);
  CHECK(k8[0].phi_power == 1);
  CHECK(k8[0].pole_order == 8);
  for (const auto& f : curve_kernel_basis(*e, 12)) {
    const auto v = e->evaluate(f);
    CHECK(std::all_of(v.begin(), v.end(), [](Elem a) { return a == 0; }));
  }
  CHECK(curve_kernel_basis(*e, 12).size() == 4);
  // The kernel accounts exactly for the rank drop of L(mQ).
  for (int m = 8; m <= 14; ++m)
    CHECK(rank_of(*e, curve_function_basis(*ell4(), m)) ==
          ell4()->semigroup().ell(m) - static_cast<long long>(curve_kernel_basis(*e, m).size()));

  const auto ell9 = curve_hyperelliptic(Field::make(3, 2), {0, 1, 0, 1});
  CHECK_THROWS_AS(curve_kernel_basis(*curve_eval_set(ell9, "y"), 20), CurveError);
}
