#ifndef CASTLEQEC_AG_CODE_HPP
#define CASTLEQEC_AG_CODE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "castleqec/curve.hpp"
#include "castleqec/linear_code.hpp"

namespace castleqec {

class AgError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Rows ev(f) for each function, in order.
Matrix ag_evaluation_matrix(const EvaluationSet& e, const std::vector<CurveFunction>& functions);

/// C(X, D, mQ) with its attached distance bounds.
struct OnePointCode {
  EvalSetPtr eval;
  int m = 0;
  LinearCode code;
  int abundance = 0;
  long long goppa = 0;  // n - m + gamma_{a+1} with the gonality floor
  long long order = 0;  // order bound at m-perp, valid under C(mQ)^perp = x*C(m-perp Q)
  MinWeight exact;      // NotComputed unless requested and within budget

  int length() const { return code.length(); }
  int dimension() const { return code.dimension(); }
  int m_perp() const;
};

/// exact_budget = 0 skips the exact distance.
OnePointCode ag_build(const EvalSetPtr& e, int m, std::uint64_t exact_budget = 0);

/// n - m + gamma_{a+1}: gamma_1 = 0; gamma_{a+1} >= a + 1 for a >= 1 on
/// curves of positive genus; gamma_{a+1} = a in genus 0.
long long ag_goppa_bound(const EvaluationSet& e, int m);
long long ag_goppa_bound(const OnePointCode& c);
/// min{nu(r) : rho_r > m}, a lower bound for d(C(mQ)^perp).
long long ag_order_bound(const EvaluationSet& e, int m);
/// Lower bound for d(C(mQ)) itself: the order bound at n + 2g - 2 - m.
long long ag_distance_order_bound(const EvaluationSet& e, int m);

enum class DualityStatus { SelfDual, FormallySelfDual, Unverified };
std::string to_string(DualityStatus status);

struct DualityCertificate {
  DualityStatus status = DualityStatus::Unverified;
  std::optional<TwistVector> twist;  // all-ones when self-dual
  std::optional<int> failing_m;      // first m in M whose duality identity failed
};

/// C_0 = (0) < C_1 < ... < C_n from the dimension set M.
class CodeSequence {
public:
  explicit CodeSequence(EvalSetPtr e);

  const EvalSetPtr& eval() const { return eval_; }
  const FieldPtr& field() const { return eval_->field(); }
  int length() const { return eval_->length(); }
  int genus() const { return eval_->curve()->genus(); }
  /// n + 2g - 2 - m.
  int m_perp(int m) const { return length() + 2 * genus() - 2 - m; }

  /// M = {m_1 < ... < m_n}.
  const std::vector<int>& dimension_set() const { return poles_; }
  int pole(int i) const { return poles_.at(i - 1); }
  /// Largest i with m_i <= m (so C(mQ) = C_i).
  int index_for_pole(int m) const;
  /// Row i-1 is ev(f_{m_i}); C_i is spanned by the first i rows.
  const Matrix& basis() const { return basis_; }
  const std::vector<CurveFunction>& functions() const { return functions_; }
  LinearCode code(int i) const;

  const DualityCertificate& certificate() const { return certificate_; }

private:
  EvalSetPtr eval_;
  std::vector<int> poles_;
  std::vector<CurveFunction> functions_;
  Matrix basis_;
  DualityCertificate certificate_;
};

/// Builds the sequence and certifies its duality.
CodeSequence ag_sequence(const EvalSetPtr& e);
DualityCertificate ag_certify_duality(const CodeSequence& seq);

/// For each i in 0..n the smallest j with C_i^e contained in C_j.
std::vector<int> ag_power_indices(const CodeSequence& seq, long long e);

struct SelfOrthogonalityRange {
  int index = 0;         // largest i with C_i self-orthogonal
  int m = -1;            // m_index, -1 when only C_0 qualifies
  int closed_form = -1;  // largest m with c*m <= n + 2g - 2
};

/// Matrix test on every C_i, compared against the closed form with c = 2
/// (Euclidean) or sqrt(q) + 1 (Hermitian).
SelfOrthogonalityRange ag_self_orthogonality_range(const CodeSequence& seq, InnerProduct mode);

/// Coordinate permutations of D induced by the curve automorphisms
/// x -> x + a, y -> y + a^q0 x + b (a, b in GF(q)) of a Suzuki curve.
/// Empty for other families or when D is not closed under them. These fix
/// Q, so they preserve every C(mQ); callers should still verify that with
/// code_has_automorphism before relying on it.
std::vector<std::vector<int>> ag_suzuki_translations(const EvaluationSet& e);

// Traces

struct TraceGenerator {
  std::string label;      // "1" or "tr(a^j*f)"
  int function = -1;      // index into the q-convention function basis, -1 for 1
  int shift = 0;          // j
  std::vector<Elem> values;  // over the subfield
};

struct TraceBasis {
  FieldPtr small;
  int degree = 1;  // r
  int m = 0;
  std::vector<TraceGenerator> generators;
  std::vector<CurveFunction> functions;  // q-convention basis of L(mQ)
  /// Generators coming from the last function of L'_m.
  int last_block_begin = 0;

  LinearCode code() const;
  LinearCode code_without(const std::vector<int>& removed) const;
};

/// ev of {1} and tr(a^j f) for f in L'_m = {1} u (L_m \ L^q), j < r.
TraceBasis ag_trace_basis(const EvaluationSet& e, int m, int q);

struct TraceRange {
  int closed_form = -1;  // largest m with m q^floor(r/2) <= n + 2g - 2 - m
  int verified = -1;     // largest m whose trace passes the matrix test
  int first_failure = -1;
};
TraceRange ag_trace_self_orthogonal_range(const EvaluationSet& e, int q);

struct IncompleteTrace {
  std::vector<int> removed;  // generator indices dropped from the basis
  LinearCode code;
  MinWeight full_dual_distance;
  MinWeight dual_distance;
};

/// Drops up to r-1 generators of the last block, most first and in
/// lexicographic order; first self-orthogonal subcode with the full trace
/// code's dual distance wins.
std::optional<IncompleteTrace> ag_incomplete_trace_search(const EvaluationSet& e, int m, int q,
                                                          std::uint64_t budget = kDefaultBudget);

}  // namespace castleqec

#endif  // CASTLEQEC_AG_CODE_HPP
