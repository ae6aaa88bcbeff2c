#ifndef CASTLEQEC_QUANTUM_HPP
#define CASTLEQEC_QUANTUM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "castleqec/ag_code.hpp"
#include "castleqec/linear_code.hpp"

namespace castleqec {

class QuantumError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class DistanceProvenance { Exact, LowerBound, Claimed };
enum class Construction { Nested, EuclidCss, HermitianCss, A, B, C, Trace };
enum class GvStatus { Below, Meets, Exceeds, NotApplicable };

std::string to_string(DistanceProvenance p);
std::string to_string(Construction c);
/// "below", "meets", "exceeds", "na".
std::string to_string(GvStatus s);

struct GvResult {
  GvStatus status = GvStatus::NotApplicable;
  int d_max = 0;  // largest d with lhs > rhs(d); 1 when d = 2 already fails
  BigInt lhs;     // (q^(n-k+2) - 1)/(q^2 - 1)
  BigInt rhs;     // sum_{i=1}^{d-1} (q^2-1)^(i-1) binom(n, i) at the queried d
};

GvResult gv_evaluate(int n, int k, int d, int q);
GvStatus gv_status(int n, int k, int d, int q);

struct QuantumParams {
  int q = 2;
  int n = 0;
  int k = 0;
  int d = 1;
  DistanceProvenance provenance = DistanceProvenance::LowerBound;
  Construction construction = Construction::Nested;
  GvStatus gv = GvStatus::NotApplicable;
};

/// Fills in the GV status from (n, k, d, q).
QuantumParams make_params(int q, int n, int k, int d, DistanceProvenance p, Construction c);

/// CSS code from C1 contained in C2. `bound` is a known lower bound on the
/// distance, used when enumeration exceeds the budget.
QuantumParams css_nested(const LinearCode& c1, const LinearCode& c2, std::uint64_t budget = kDefaultBudget,
                         std::optional<int> bound = std::nullopt);
/// [[n, n-2k, d]]_q from a Euclidean self-orthogonal code over GF(q).
QuantumParams css_self_orthogonal(const LinearCode& c, std::uint64_t budget = kDefaultBudget,
                                  std::optional<int> bound = std::nullopt);
/// [[n, n-2k, d]]_q from a Hermitian self-orthogonal code over GF(q^2).
QuantumParams css_hermitian(const LinearCode& c, std::uint64_t budget = kDefaultBudget,
                            std::optional<int> bound = std::nullopt);

/// Lower bound for d(C_{n-i}) from the order and Goppa bounds.
int sequence_distance_bound(const CodeSequence& seq, int i);

/// Construction (A) on a self-dual sequence over GF(q^2). Pass
/// power_indices (from ag_power_indices with e = q) to reuse them.
std::optional<QuantumParams> construction_A(const CodeSequence& seq, int i, std::uint64_t budget = kDefaultBudget,
                                            const std::vector<int>* power_indices = nullptr);

enum class TwistVariant { B, C };

/// (B): sequence over GF(q^2) whose twist lies in GF(q); threshold
/// i + q(i) <= n. (C): sequence over GF(q), extended to GF(q^2); threshold
/// 2i <= n. nullopt when unavailable.
std::optional<QuantumParams> construction_BC(const CodeSequence& seq, int i, TwistVariant variant,
                                             std::uint64_t budget = kDefaultBudget,
                                             const std::vector<int>* power_indices = nullptr);

/// (q+1)-th root of a twist with entries in GF(q), inside GF(q^2).
TwistVector twist_root(const TwistVector& x, const FieldPtr& big);

}  // namespace castleqec

#endif  // CASTLEQEC_QUANTUM_HPP
