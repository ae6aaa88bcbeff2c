#include "castleqec/io.hpp"

#include <sstream>

namespace castleqec {

Json field_to_json(const Field& f) {
  Json j;
  j["p"] = f.characteristic();
  j["k"] = f.degree();
  j["modulus"] = std::vector<int>(f.modulus().begin(), f.modulus().end());
  return j;
}

FieldPtr field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("k")) throw InputError("field needs integer \"p\" and \"k\"");
  if (!j["p"].is_number_integer() || !j["k"].is_number_integer()) throw InputError("field \"p\" and \"k\" must be integers");
  const auto field = Field::make(j["p"].get<int>(), j["k"].get<int>());
  if (j.contains("modulus")) {
    const auto given = j["modulus"].get<std::vector<int>>();
    if (given != std::vector<int>(field->modulus().begin(), field->modulus().end()))
      throw InputError("only the canonical (lexicographically smallest) modulus is supported");
  }
  return field;
}

Json semigroup_to_json(const NumericalSemigroup& s) {
  Json j;
  j["generators"] = s.generators();
  j["genus"] = s.genus();
  j["gaps"] = s.gaps();
  return j;
}

Json code_to_json(const LinearCode& c) {
  Json j;
  j["field"] = field_to_json(*c.field());
  j["n"] = c.length();
  j["k"] = c.dimension();
  Json rows = Json::array();
  const Matrix& g = c.generator();
  for (int r = 0; r < g.rows(); ++r) {
    std::vector<int> row(g.cols());
    for (int t = 0; t < g.cols(); ++t) row[t] = g.at(r, t);
    rows.push_back(row);
  }
  j["generators"] = rows;
  return j;
}

LinearCode code_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("n")) throw InputError("code needs \"field\" and \"n\"");
  const auto field = field_from_json(j["field"]);
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 0) throw InputError("code length must be a non-negative integer");
  const int n = j["n"].get<int>();
  const Json rows = j.value("generators", Json::array());
  if (!rows.is_array()) throw InputError("\"generators\" must be a list of rows");
  Matrix m(static_cast<int>(rows.size()), n);
  for (int r = 0; r < m.rows(); ++r) {
    if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != n) throw InputError("generator row has the wrong length");
    for (int t = 0; t < n; ++t) m.at(r, t) = parse_element(*field, rows[r][t]);
  }
  return LinearCode::from_rows(field, n, m);
}

Elem parse_element(const Field& f, const Json& j) {
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v < 0 || v >= f.order()) throw InputError("element index " + std::to_string(v) + " out of range");
    return static_cast<Elem>(v);
  }
  if (!j.is_string()) throw InputError("field element must be an integer or a string");
  const std::string s = j.get<std::string>();
  if (s == "g") return f.primitive();
  if (s.rfind("g^", 0) == 0) {
    try {
      std::size_t used = 0;
      const long long e = std::stoll(s.substr(2), &used);
      if (used + 2 != s.size()) throw InputError("bad exponent in '" + s + "'");
      return f.exp(e);
    } catch (const std::logic_error&) {
      throw InputError("bad exponent in '" + s + "'");
    }
  }
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size()) return parse_element(f, Json(v));
  } catch (const std::logic_error&) {
  }
  throw InputError("cannot parse field element '" + s + "'");
}

Poly parse_poly(const Field& f, const Json& j) {
  Poly p;
  if (j.is_array()) {
    for (const auto& c : j) p.push_back(parse_element(f, c));
  } else if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      int e = -1;
      try {
        e = std::stoi(key);
      } catch (const std::logic_error&) {
      }
      if (e < 0 || e > 4096) throw InputError("bad exponent '" + key + "'");
      if (static_cast<int>(p.size()) <= e) p.resize(e + 1, 0);
      p[e] = f.add(p[e], parse_element(f, value));
    }
  } else {
    throw InputError("polynomial must be a coefficient list or an exponent map");
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) throw InputError("zero polynomial");
  return p;
}

namespace {

int param_int(const Json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_number_integer()) throw InputError(std::string("missing integer param \"") + key + "\"");
  return params[key].get<int>();
}

std::string field_label(const Field& f) { return "GF(" + std::to_string(f.order()) + ")"; }

}  // namespace

CurveSpec curve_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family")) throw InputError("curve file needs \"family\"");
  const std::string family = j["family"].get<std::string>();
  const Json params = j.value("params", Json::object());
  CurveSpec out;
  try {
    if (family == "suzuki") {
      const int q0 = param_int(params, "q0");
      if (q0 < 1) throw InputError("q0 must be positive");
      if (2LL * q0 * q0 > kMaxFieldOrder) throw UnsupportedFieldError("Suzuki field GF(2q0^2) is too large");
      out.curve = curve_suzuki(q0);
      out.label = "suzuki(q0=" + std::to_string(q0) + ")";
    } else if (family == "ntq") {
      const int q = param_int(params, "q"), r = param_int(params, "r"), u = param_int(params, "u");
      out.curve = curve_norm_trace_quotient(q, r, u);
      out.label = "ntq(q=" + std::to_string(q) + ",r=" + std::to_string(r) + ",u=" + std::to_string(u) + ")";
    } else if (family == "sep" || family == "hyperodd" || family == "hypereven") {
      if (!j.contains("field")) throw InputError("curve family " + family + " needs \"field\"");
      const auto field = field_from_json(j["field"]);
      if (family == "sep") {
        if (!params.contains("F") || !params.contains("G")) throw InputError("sep curve needs params F and G");
        out.curve = curve_sep_variable(field, parse_poly(*field, params["F"]), parse_poly(*field, params["G"]));
      } else {
        if (!params.contains("F")) throw InputError(family + " curve needs param F");
        const bool even = field->characteristic() == 2;
        if (even != (family == "hypereven")) throw InputError(family + " does not match the field characteristic");
        out.curve = curve_hyperelliptic(field, parse_poly(*field, params["F"]));
      }
      out.label = family + "(" + field_label(*field) + ")";
    } else {
      throw InputError("unknown curve family '" + family + "'");
    }
    std::string f = "x";
    std::optional<std::vector<Elem>> u;
    if (j.contains("eval")) {
      const Json& ev = j["eval"];
      f = ev.value("f", std::string("x"));
      if (ev.contains("U")) {
        std::vector<Elem> vals;
        for (const auto& v : ev["U"]) vals.push_back(parse_element(*out.curve->field(), v));
        u = vals;
      }
    }
    out.eval = curve_eval_set(out.curve, f, u);
  } catch (const UnsupportedFieldError&) {
    throw;
  } catch (const InputError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    // Curve, field and parameter errors from the constructors.
    throw InputError(e.what());
  }
  return out;
}

Json code_report(const OnePointCode& c, const std::string& label) {
  Json j;
  j["curve"] = label;
  j["n"] = c.length();
  j["m"] = c.m;
  j["k"] = c.dimension();
  j["abundance"] = c.abundance;
  j["goppa"] = c.goppa;
  j["order"] = c.order;
  if (c.exact.exact()) j["d_exact"] = c.exact.value;
  const Field& f = *c.code.field();
  bool square = f.degree() % 2 == 0;
  j["self_orth"] = {{"euclidean", c.code.is_self_orthogonal(InnerProduct::Euclidean)},
                    {"hermitian", square && c.code.is_self_orthogonal(InnerProduct::Hermitian)}};
  return j;
}

Json trace_report(const TraceBasis& t, const LinearCode& code, const MinWeight& dual_distance, int n,
                  const std::string& label) {
  Json j;
  j["curve"] = label;
  j["n"] = n;
  j["m"] = t.m;
  j["k"] = code.dimension();
  j["q"] = t.small->order();
  if (dual_distance.exact()) j["d_dual_exact"] = dual_distance.value;
  j["self_orth"] = {{"euclidean", code.is_self_orthogonal(InnerProduct::Euclidean)}};
  return j;
}

Json quantum_row(const QuantumParams& p) {
  Json j;
  j["n"] = p.n;
  j["k"] = p.k;
  j["d"] = p.d;
  j["q"] = p.q;
  j["d_provenance"] = to_string(p.provenance);
  j["construction"] = to_string(p.construction);
  j["gv"] = to_string(p.gv);
  return j;
}

std::vector<std::string> csv_columns(const Json& row) {
  std::vector<std::string> out;
  for (const auto& [key, value] : row.items()) {
    if (value.is_object()) {
      for (const auto& [inner, _] : value.items()) out.push_back(key + "." + inner);
    } else {
      out.push_back(key);
    }
  }
  return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    const std::string& c = cells[i];
    if (c.find_first_of(",\"\n") == std::string::npos) {
      os << c;
    } else {
      os << '"';
      for (char ch : c) os << (ch == '"' ? "\"\"" : std::string(1, ch));
      os << '"';
    }
  }
  return os.str();
}

std::string csv_row(const Json& row, const std::vector<std::string>& columns) {
  std::vector<std::string> cells;
  for (const auto& col : columns) {
    const Json* v = nullptr;
    const auto dot = col.find('.');
    if (dot == std::string::npos) {
      if (row.contains(col)) v = &row[col];
    } else {
      const auto outer = col.substr(0, dot), inner = col.substr(dot + 1);
      if (row.contains(outer) && row[outer].contains(inner)) v = &row[outer][inner];
    }
    if (!v || v->is_null()) cells.emplace_back();
    else if (v->is_string()) cells.push_back(v->get<std::string>());
    else cells.push_back(v->dump());
  }
  return csv_line(cells);
}

}  // namespace castleqec
