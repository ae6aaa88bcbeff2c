#ifndef CASTLEQEC_IO_HPP
#define CASTLEQEC_IO_HPP

#include "json.hpp"
#include <stdexcept>
#include <string>
#include <vector>

#include "castleqec/ag_code.hpp"
#include "castleqec/quantum.hpp"

namespace castleqec {

using Json = nlohmann::ordered_json;

/// Malformed input document (exit code 2 at the command line).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

Json field_to_json(const Field& f);
/// {"p","k"} with an optional "modulus" that must equal the canonical one.
FieldPtr field_from_json(const Json& j);

Json semigroup_to_json(const NumericalSemigroup& s);

/// Generators as rows of element indices.
Json code_to_json(const LinearCode& c);
LinearCode code_from_json(const Json& j);

/// Integer index, "0", "1", "g" or "g^k" (powers of the primitive element).
Elem parse_element(const Field& f, const Json& j);
/// Dense coefficient list (low degree first) or {"exponent": coefficient}.
Poly parse_poly(const Field& f, const Json& j);

struct CurveSpec {
  CurvePtr curve;
  EvalSetPtr eval;
  std::string label;
};

/// {"family", "field", "params", optional "eval": {"f", "U"}}.
CurveSpec curve_spec_from_json(const Json& j);

Json code_report(const OnePointCode& c, const std::string& label);
Json trace_report(const TraceBasis& t, const LinearCode& code, const MinWeight& dual_distance, int n,
                  const std::string& label);
Json quantum_row(const QuantumParams& p);

inline const std::vector<std::string> kQuantumColumns = {"n", "k", "d", "q", "d_provenance", "construction", "gv"};

/// Column names of a row with nested objects flattened as "outer.inner".
std::vector<std::string> csv_columns(const Json& row);
std::string csv_line(const std::vector<std::string>& cells);
std::string csv_row(const Json& row, const std::vector<std::string>& columns);

}  // namespace castleqec

#endif  // CASTLEQEC_IO_HPP
