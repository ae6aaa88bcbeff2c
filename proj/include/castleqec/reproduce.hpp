#ifndef CASTLEQEC_REPRODUCE_HPP
#define CASTLEQEC_REPRODUCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "castleqec/quantum.hpp"

namespace castleqec {

enum class CheckMode { Exact, Bound, Dimension };
/// None, dagger (meets GV), double dagger (exceeds GV).
enum class GvTag { None, Meets, Exceeds };

std::string to_string(CheckMode m);
std::string tag_suffix(GvTag t);
/// Untagged triples must classify as below or na.
bool tag_matches(GvTag t, GvStatus s);

enum class Recipe { A, C, EuclidSelfOrthogonal, Trace, IncompleteTrace };

struct ExpectedRow {
  int n, k, d, q;
  GvTag tag;
  CheckMode mode;
  std::string curve;  // key into the curve table
  Recipe recipe;
  int index;          // i for sequence constructions, m for traces
  int sub_q = 0;      // trace target field
  std::string source; // where the triple is listed

  std::string label() const;
};

struct ReproTarget {
  std::string id;
  std::string description;
  std::vector<ExpectedRow> rows;
};

const std::vector<ReproTarget>& repro_manifest();
const ReproTarget* repro_find(const std::string& id);

/// Curve keys used by the manifest.
EvalSetPtr repro_curve(const std::string& key);

struct RowCheck {
  ExpectedRow expected;
  std::optional<QuantumParams> computed;
  GvStatus listed_gv = GvStatus::NotApplicable;  // classification of the listed triple
  bool pass = false;
  std::string reason;  // empty on PASS
  std::string note;    // how d was certified
};

std::vector<RowCheck> repro_run(const ReproTarget& t, std::uint64_t budget = kDefaultBudget);
RowCheck repro_check(const ExpectedRow& row, std::optional<QuantumParams> computed, std::string note = {});

/// Lower bound for d(C_j) by searching for dependent sets of at most
/// max_weight columns of a parity check matrix. Uses Suzuki translations,
/// each verified as an automorphism of C_j, to pin the first coordinate.
/// Returns the exact d(C_j) when a dependent set is found.
struct ColumnBound {
  int bound = 1;
  bool exact = false;
  bool used_symmetry = false;
};
ColumnBound column_distance_bound(const CodeSequence& seq, int j, int max_weight);

}  // namespace castleqec

#endif  // CASTLEQEC_REPRODUCE_HPP
