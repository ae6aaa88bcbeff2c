#ifndef CASTLEQEC_CURVE_HPP
#define CASTLEQEC_CURVE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "castleqec/field.hpp"
#include "castleqec/semigroup.hpp"

namespace castleqec {

/// Univariate polynomial over a field, low degree first.
using Poly = std::vector<Elem>;

Elem poly_eval(const Field& field, const Poly& p, Elem x);
int poly_degree(const Poly& p);
/// Squarefree test via gcd(P, P') over the field.
bool poly_is_squarefree(const Field& field, const Poly& p);

enum class CurveFamily { SepVariable, HyperellipticOdd, HyperellipticEven, Suzuki, NormTraceQuotient };

std::string family_tag(CurveFamily family);

struct AffinePoint {
  Elem x;
  Elem y;
};

/// A function with poles only at Q, evaluated at every affine point.
struct GeneratorFunction {
  std::string name;
  int pole_order;
  std::vector<Elem> values;  // indexed like PointedCurve::points()
};

/// Monomial in the generator functions, optionally times a power of the
/// fibration product phi of an evaluation set.
struct CurveFunction {
  std::vector<int> exponents;
  int phi_power = 0;
  int pole_order = 0;

  std::string label(const std::vector<GeneratorFunction>& gens) const;
  bool operator==(const CurveFunction&) const = default;
};

class PointedCurve {
public:
  struct Data {
    CurveFamily family;
    FieldPtr field;
    Poly f_poly;  // F(y) for separated-variable models
    Poly g_poly;  // G(x)
    int q0 = 0;   // Suzuki parameter
    int ntq_q = 0, ntq_r = 0, ntq_u = 0;
    int family_genus = 0;
    std::vector<int> generator_poles;
    std::vector<AffinePoint> points;
    std::vector<GeneratorFunction> generators;
  };

  explicit PointedCurve(Data data);

  CurveFamily family() const { return d_.family; }
  std::string tag() const { return family_tag(d_.family); }
  const FieldPtr& field() const { return d_.field; }
  const Poly& f_poly() const { return d_.f_poly; }
  const Poly& g_poly() const { return d_.g_poly; }
  int q0() const { return d_.q0; }
  int ntq_q() const { return d_.ntq_q; }
  int ntq_r() const { return d_.ntq_r; }
  int ntq_u() const { return d_.ntq_u; }

  int genus() const { return d_.family_genus; }
  const NumericalSemigroup& semigroup() const { return semigroup_; }
  const std::vector<AffinePoint>& points() const { return d_.points; }
  /// Rational points including Q.
  int point_count() const { return static_cast<int>(d_.points.size()) + 1; }
  const std::vector<GeneratorFunction>& generators() const { return d_.generators; }
  int generator_index(const std::string& name) const;

  /// S(Q) symmetric and #X = q * rho_2 + 1.
  bool is_castle() const;

  /// Value of a monomial (phi_power must be 0) at an affine point.
  Elem evaluate(const CurveFunction& f, int point) const;

  /// One monomial per pole order rho <= m. With q_convention > 1, a pole
  /// order rho = q * rho_t uses f_t^q.
  std::vector<CurveFunction> function_basis(int m, int q_convention = 0) const;
  /// First monomial (last generator most significant, ascending) with the
  /// given pole order.
  std::optional<CurveFunction> monomial_with_pole(int rho) const;

private:
  Data d_;
  NumericalSemigroup semigroup_;
};

using CurvePtr = std::shared_ptr<const PointedCurve>;

/// F(y) = G(x) with gcd(deg F, deg G) = 1; x has pole order deg F, y deg G.
CurvePtr curve_sep_variable(const FieldPtr& field, const Poly& f, const Poly& g);
/// y^2 = F(x) (odd q) or y^2 + y = F(x) (even q), F of odd degree.
CurvePtr curve_hyperelliptic(const FieldPtr& field, const Poly& f);
/// y^q + y = x^q0 (x^q + x) over GF(q), q = 2 q0^2.
CurvePtr curve_suzuki(int q0);
/// y^(q^(r-1)) + ... + y^q + y = x^u over GF(q^r), u | (q^r - 1)/(q - 1).
CurvePtr curve_norm_trace_quotient(int q, int r, int u);

/// Rational points: the affine list plus the point Q at infinity.
struct PointList {
  std::vector<AffinePoint> affine;
  int count;
};
PointList curve_points(const PointedCurve& curve);

/// Evaluation set D = sum of the fibers of a generator function over U.
class EvaluationSet {
public:
  EvaluationSet(CurvePtr curve, int generator, std::vector<Elem> split_values, std::vector<int> point_indices);

  const CurvePtr& curve() const { return curve_; }
  const FieldPtr& field() const { return curve_->field(); }
  int length() const { return static_cast<int>(points_.size()); }
  int generator() const { return generator_; }
  int fiber_size() const { return curve_->generators()[generator_].pole_order; }
  const std::vector<Elem>& split_values() const { return split_values_; }
  /// Indices into curve()->points(), in evaluation order.
  const std::vector<int>& point_indices() const { return points_; }

  /// Every affine point is in D.
  bool is_complete() const;
  /// (C1) plus (C2'): S(Q) symmetric with totally split fibers.
  bool is_weak_castle() const;
  /// Castle curve, fibration of pole order rho_2, U the whole field.
  bool is_castle_type() const;

  /// phi = prod_{a in U} (f - a) at an affine point.
  Elem phi_at(int curve_point) const;
  /// (f(P_1), ..., f(P_n)).
  std::vector<Elem> evaluate(const CurveFunction& f) const;

private:
  CurvePtr curve_;
  int generator_;
  std::vector<Elem> split_values_;
  std::vector<int> points_;
};

using EvalSetPtr = std::shared_ptr<const EvaluationSet>;

/// Builds the evaluation set for a generator function. When U is omitted
/// every value whose fiber is totally split is used. Throws CurveError
/// naming the first value whose fiber is not totally split.
EvalSetPtr curve_eval_set(const CurvePtr& curve, int generator, std::optional<std::vector<Elem>> split_values = std::nullopt);
EvalSetPtr curve_eval_set(const CurvePtr& curve, const std::string& generator,
                          std::optional<std::vector<Elem>> split_values = std::nullopt);

std::vector<CurveFunction> curve_function_basis(const PointedCurve& curve, int m, int q_convention = 0);
/// {phi * f : f in the basis of L((m - n)Q)}; requires a Castle-type set.
std::vector<CurveFunction> curve_kernel_basis(const EvaluationSet& e, int m);

class CurveError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace castleqec

#endif  // CASTLEQEC_CURVE_HPP
