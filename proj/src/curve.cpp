#include "castleqec/curve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace castleqec {

// Polynomials

Elem poly_eval(const Field& field, const Poly& p, Elem x) {
  Elem acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = field.add(field.mul(acc, x), *it);
  return acc;
}

int poly_degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

namespace {

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly poly_rem(const Field& f, Poly a, const Poly& b) {
  a = trim(std::move(a));
  const int db = poly_degree(b);
  const Elem lead_inv = f.inv(b[db]);
  while (poly_degree(a) >= db) {
    const int da = poly_degree(a);
    const Elem c = f.mul(a[da], lead_inv);
    for (int j = 0; j <= db; ++j) a[da - db + j] = f.sub(a[da - db + j], f.mul(c, b[j]));
    a = trim(std::move(a));
  }
  return a;
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool poly_is_squarefree(const Field& field, const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) {
    Elem c = 0;
    for (std::size_t t = 0; t < i; ++t) c = field.add(c, p[i]);  // i * p_i
    d.push_back(c);
  }
  if (poly_degree(d) < 0) return poly_degree(p) <= 0;
  return poly_degree(poly_gcd(field, p, d)) == 0;
}

std::string family_tag(CurveFamily family) {
  switch (family) {
    case CurveFamily::SepVariable: return "sep";
    case CurveFamily::HyperellipticOdd: return "hyperodd";
    case CurveFamily::HyperellipticEven: return "hypereven";
    case CurveFamily::Suzuki: return "suzuki";
    case CurveFamily::NormTraceQuotient: return "ntq";
  }
  return "unknown";
}

std::string CurveFunction::label(const std::vector<GeneratorFunction>& gens) const {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += gens[i].name;
    if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
  }
  if (phi_power > 0) {
    if (!out.empty()) out += "*";
    out += phi_power == 1 ? "phi" : "phi^" + std::to_string(phi_power);
  }
  return out.empty() ? "1" : out;
}

// PointedCurve

PointedCurve::PointedCurve(Data data) : d_(std::move(data)), semigroup_(d_.generator_poles) {
  if (semigroup_.genus() != d_.family_genus)
    throw CurveError("family genus " + std::to_string(d_.family_genus) + " disagrees with the semigroup gap count " +
                     std::to_string(semigroup_.genus()));
  for (const auto& g : d_.generators)
    if (g.values.size() != d_.points.size()) throw CurveError("generator values do not cover the points");
}

int PointedCurve::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < d_.generators.size(); ++i)
    if (d_.generators[i].name == name) return static_cast<int>(i);
  throw CurveError("curve has no generator function named '" + name + "'");
}

bool PointedCurve::is_castle() const {
  return semigroup_.is_symmetric() &&
         point_count() == static_cast<long long>(d_.field->order()) * semigroup_.multiplicity() + 1;
}

Elem PointedCurve::evaluate(const CurveFunction& f, int point) const {
  if (f.phi_power != 0) throw CurveError("phi needs an evaluation set");
  const Field& fld = *d_.field;
  Elem acc = 1;
  for (std::size_t i = 0; i < f.exponents.size(); ++i)
    if (f.exponents[i] != 0) acc = fld.mul(acc, fld.pow(d_.generators[i].values[point], f.exponents[i]));
  return acc;
}

std::optional<CurveFunction> PointedCurve::monomial_with_pole(int rho) const {
  const auto& poles = d_.generator_poles;
  const int count = static_cast<int>(poles.size());
  std::vector<int> exps(count, 0);
  // Depth-first from the last generator, smallest exponent first.
  std::function<bool(int, int)> search = [&](int idx, int remaining) -> bool {
    if (idx == 0) {
      if (remaining % poles[0] != 0) return false;
      exps[0] = remaining / poles[0];
      return true;
    }
    for (int e = 0; e * poles[idx] <= remaining; ++e) {
      exps[idx] = e;
      if (search(idx - 1, remaining - e * poles[idx])) return true;
    }
    exps[idx] = 0;
    return false;
  };
  if (rho < 0 || !search(count - 1, rho)) return std::nullopt;
  return CurveFunction{exps, 0, rho};
}

std::vector<CurveFunction> PointedCurve::function_basis(int m, int q_convention) const {
  std::vector<CurveFunction> out;
  std::map<int, CurveFunction> by_pole;
  for (int rho : semigroup_.elements_up_to(std::max(m, -1))) {
    CurveFunction f;
    if (q_convention > 1 && rho > 0 && rho % q_convention == 0 && semigroup_.contains(rho / q_convention)) {
      f = by_pole.at(rho / q_convention);
      for (auto& e : f.exponents) e *= q_convention;
      f.phi_power *= q_convention;
      f.pole_order = rho;
    } else {
      f = *monomial_with_pole(rho);
    }
    by_pole[rho] = f;
    out.push_back(std::move(f));
  }
  return out;
}

// Constructors

namespace {

std::vector<AffinePoint> solve_separated(const Field& f, const Poly& fy, const Poly& gx) {
  std::vector<std::vector<Elem>> by_value(f.order());
  for (int y = 0; y < f.order(); ++y) by_value[poly_eval(f, fy, static_cast<Elem>(y))].push_back(static_cast<Elem>(y));
  std::vector<AffinePoint> pts;
  for (int x = 0; x < f.order(); ++x)
    for (Elem y : by_value[poly_eval(f, gx, static_cast<Elem>(x))]) pts.push_back({static_cast<Elem>(x), y});
  return pts;
}

PointedCurve::Data separated_data(CurveFamily family, const FieldPtr& field, const Poly& f, const Poly& g) {
  const int a = poly_degree(f);
  const int b = poly_degree(g);
  if (a < 1 || b < 1) throw CurveError("separated-variable model needs nonconstant F and G");
  if (std::gcd(a, b) != 1)
    throw CurveError("deg F = " + std::to_string(a) + " and deg G = " + std::to_string(b) + " are not coprime");
  PointedCurve::Data d{};
  d.family = family;
  d.field = field;
  d.f_poly = trim(f);
  d.g_poly = trim(g);
  d.family_genus = (a - 1) * (b - 1) / 2;
  d.generator_poles = {a, b};
  d.points = solve_separated(*field, d.f_poly, d.g_poly);
  GeneratorFunction x{"x", a, {}};
  GeneratorFunction y{"y", b, {}};
  for (const auto& p : d.points) {
    x.values.push_back(p.x);
    y.values.push_back(p.y);
  }
  d.generators = {std::move(x), std::move(y)};
  return d;
}

}  // namespace

CurvePtr curve_sep_variable(const FieldPtr& field, const Poly& f, const Poly& g) {
  return std::make_shared<const PointedCurve>(separated_data(CurveFamily::SepVariable, field, f, g));
}

CurvePtr curve_hyperelliptic(const FieldPtr& field, const Poly& f) {
  const int deg = poly_degree(f);
  if (deg < 1 || deg % 2 == 0) throw CurveError("hyperelliptic model needs F of odd degree, got " + std::to_string(deg));
  if (field->characteristic() != 2) {
    if (!poly_is_squarefree(*field, f)) throw CurveError("F is not squarefree");
    return std::make_shared<const PointedCurve>(separated_data(CurveFamily::HyperellipticOdd, field, Poly{0, 0, 1}, f));
  }
  return std::make_shared<const PointedCurve>(separated_data(CurveFamily::HyperellipticEven, field, Poly{0, 1, 1}, f));
}

CurvePtr curve_suzuki(int q0) {
  if (q0 < 2 || (q0 & (q0 - 1)) != 0) throw CurveError("Suzuki parameter q0 must be a power of 2, at least 2");
  const int q = 2 * q0 * q0;
  if (q > kMaxFieldOrder) throw UnsupportedFieldError("Suzuki field GF(" + std::to_string(q) + ") exceeds the supported bound");
  auto field = Field::of_order(q);
  const Field& f = *field;
  PointedCurve::Data d{};
  d.family = CurveFamily::Suzuki;
  d.field = field;
  d.q0 = q0;
  d.family_genus = q0 * (q - 1);
  d.generator_poles = {q, q + q0, q + 2 * q0, q + 2 * q0 + 1};
  // y^q + y = x^q0 (x^q + x); y^q + y is F_2-linear with q-to-1 image.
  std::vector<std::vector<Elem>> by_value(q);
  for (int y = 0; y < q; ++y) by_value[f.add(f.pow(static_cast<Elem>(y), q), static_cast<Elem>(y))].push_back(static_cast<Elem>(y));
  GeneratorFunction gx{"x", q, {}}, gy{"y", q + q0, {}}, gz{"z", q + 2 * q0, {}}, gw{"w", q + 2 * q0 + 1, {}};
  for (int xi = 0; xi < q; ++xi) {
    const Elem x = static_cast<Elem>(xi);
    const Elem rhs = f.mul(f.pow(x, q0), f.add(f.pow(x, q), x));
    for (Elem y : by_value[rhs]) {
      d.points.push_back({x, y});
      const Elem z = f.sub(f.pow(x, 2 * q0 + 1), f.pow(y, 2 * q0));
      const Elem w = f.sub(f.mul(x, f.pow(y, 2 * q0)), f.pow(z, 2 * q0));
      gx.values.push_back(x);
      gy.values.push_back(y);
      gz.values.push_back(z);
      gw.values.push_back(w);
    }
  }
  d.generators = {std::move(gx), std::move(gy), std::move(gz), std::move(gw)};
  return std::make_shared<const PointedCurve>(std::move(d));
}

CurvePtr curve_norm_trace_quotient(int q, int r, int u) {
  if (q < 2 || r < 2 || u < 1) throw CurveError("norm-trace quotient needs q >= 2, r >= 2, u >= 1");
  long long qr = 1;
  for (int i = 0; i < r; ++i) {
    qr *= q;
    if (qr > kMaxFieldOrder) throw UnsupportedFieldError("GF(q^r) exceeds the supported bound");
  }
  const long long norm_exp = (qr - 1) / (q - 1);
  if (norm_exp % u != 0)
    throw CurveError("u = " + std::to_string(u) + " does not divide (q^r - 1)/(q - 1) = " + std::to_string(norm_exp));
  auto field = Field::of_order(static_cast<int>(qr));
  Field::of_order(q);  // validates q as a prime power
  Poly fy(static_cast<std::size_t>(qr / q) + 1, 0);
  for (long long e = 1; e <= qr / q; e *= q) fy[static_cast<std::size_t>(e)] = 1;
  Poly gx(static_cast<std::size_t>(u) + 1, 0);
  gx[u] = 1;
  auto d = separated_data(CurveFamily::NormTraceQuotient, field, fy, gx);
  d.ntq_q = q;
  d.ntq_r = r;
  d.ntq_u = u;
  return std::make_shared<const PointedCurve>(std::move(d));
}

PointList curve_points(const PointedCurve& curve) { return {curve.points(), curve.point_count()}; }

// Evaluation sets

EvaluationSet::EvaluationSet(CurvePtr curve, int generator, std::vector<Elem> split_values, std::vector<int> point_indices)
    : curve_(std::move(curve)), generator_(generator), split_values_(std::move(split_values)), points_(std::move(point_indices)) {}

bool EvaluationSet::is_complete() const { return length() == static_cast<int>(curve_->points().size()); }

bool EvaluationSet::is_weak_castle() const { return curve_->semigroup().is_symmetric() && length() > 0; }

bool EvaluationSet::is_castle_type() const {
  return curve_->is_castle() && fiber_size() == curve_->semigroup().multiplicity() &&
         static_cast<int>(split_values_.size()) == field()->order();
}

Elem EvaluationSet::phi_at(int curve_point) const {
  const Field& f = *field();
  const Elem v = curve_->generators()[generator_].values[curve_point];
  Elem acc = 1;
  for (Elem a : split_values_) acc = f.mul(acc, f.sub(v, a));
  return acc;
}

std::vector<Elem> EvaluationSet::evaluate(const CurveFunction& fn) const {
  const Field& f = *field();
  CurveFunction mono = fn;
  mono.phi_power = 0;
  std::vector<Elem> out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    Elem v = curve_->evaluate(mono, points_[i]);
    if (fn.phi_power > 0) v = f.mul(v, f.pow(phi_at(points_[i]), fn.phi_power));
    out[i] = v;
  }
  return out;
}

EvalSetPtr curve_eval_set(const CurvePtr& curve, int generator, std::optional<std::vector<Elem>> split_values) {
  if (generator < 0 || generator >= static_cast<int>(curve->generators().size()))
    throw CurveError("generator index out of range");
  const auto& gen = curve->generators()[generator];
  const int q = curve->field()->order();
  std::vector<std::vector<int>> fibers(q);
  for (std::size_t i = 0; i < curve->points().size(); ++i) fibers[gen.values[i]].push_back(static_cast<int>(i));
  for (int a = 0; a < q; ++a)
    if (static_cast<int>(fibers[a].size()) > gen.pole_order)
      throw CurveError("fiber of " + gen.name + " over element " + std::to_string(a) + " exceeds the pole order");

  std::vector<Elem> u;
  if (split_values) {
    u = *split_values;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    for (Elem a : u)
      if (a >= q || static_cast<int>(fibers[a].size()) != gen.pole_order)
        throw CurveError("fiber of " + gen.name + " over element " + std::to_string(a) + " is not totally split");
  } else {
    for (int a = 0; a < q; ++a)
      if (static_cast<int>(fibers[a].size()) == gen.pole_order) u.push_back(static_cast<Elem>(a));
  }
  if (u.empty()) throw CurveError("no totally split fiber for " + gen.name);

  const auto& pts = curve->points();
  std::vector<int> order;
  for (Elem a : u) {
    auto fib = fibers[a];
    // Within a fiber: by the other affine coordinate, then the remaining one.
    std::sort(fib.begin(), fib.end(), [&](int l, int r) {
      if (gen.name == "x") return pts[l].y < pts[r].y;
      if (gen.name == "y") return pts[l].x < pts[r].x;
      return std::pair(pts[l].x, pts[l].y) < std::pair(pts[r].x, pts[r].y);
    });
    order.insert(order.end(), fib.begin(), fib.end());
  }
  return std::make_shared<const EvaluationSet>(curve, generator, std::move(u), std::move(order));
}

EvalSetPtr curve_eval_set(const CurvePtr& curve, const std::string& generator, std::optional<std::vector<Elem>> split_values) {
  return curve_eval_set(curve, curve->generator_index(generator), std::move(split_values));
}

std::vector<CurveFunction> curve_function_basis(const PointedCurve& curve, int m, int q_convention) {
  return curve.function_basis(m, q_convention);
}

std::vector<CurveFunction> curve_kernel_basis(const EvaluationSet& e, int m) {
  if (!e.is_castle_type()) throw CurveError("kernel basis needs a Castle evaluation set");
  std::vector<CurveFunction> out;
  for (auto f : e.curve()->function_basis(m - e.length())) {
    f.phi_power += 1;
    f.pole_order += e.length();
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace castleqec
