#include "qcr/json_io.hpp"

namespace qcr::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

std::vector<Json> rows_of(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a matrix as an array of rows");
  std::vector<Json> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix row is not an array");
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a string such as \"-3/4\"");
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

RationalMatrix matrix_from_json(const Json& j, std::size_t cols) {
  const auto rows = rows_of(j);
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw ParseError("matrix row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                       " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(rows[r][c]);
  }
  return m;
}

RationalMatrix square_matrix_from_json(const Json& j) { return matrix_from_json(j, rows_of(j).size()); }

Json to_json(const Quaternion& q) { return to_string(q); }

Quaternion quaternion_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("quaternion must be a string \"w,x,y,z\"");
  return parse_quaternion(j.get<std::string>());
}

Json to_json(const Matrix<Quaternion>& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix<Quaternion> quaternion_matrix_from_json(const Json& j) {
  const auto rows = rows_of(j);
  Matrix<Quaternion> m(rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw ParseError("quaternionic matrix must be square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = quaternion_from_json(rows[r][c]);
  }
  return m;
}

Json to_json(const HypercomplexStructure& s) {
  Json out;
  out["dim"] = s.dim();
  out["I"] = to_json(s.i());
  out["J"] = to_json(s.j());
  out["K"] = to_json(s.k());
  return out;
}

HypercomplexStructure structure_from_json(const Json& j) {
  const Json& dim = field(j, "dim");
  if (!dim.is_number_unsigned()) throw ParseError("structure 'dim' must be a non-negative integer");
  const auto n = dim.get<std::size_t>();
  auto read = [&](const char* key) {
    RationalMatrix m = matrix_from_json(field(j, key), n);
    if (m.rows() != n) throw ParseError(std::string("structure matrix ") + key + " must be square of size dim");
    return m;
  };
  return HypercomplexStructure(read("I"), read("J"), read("K"));
}

Json to_json(const Pair& p) {
  Json out;
  out["structure"] = to_json(p.structure);
  out["subspace"] = to_json(p.subspace.basis());
  return out;
}

Pair pair_from_json(const Json& j) {
  forward_upstream_error(j);
  if (j.is_object() && j.contains("pair")) return pair_from_json(j["pair"]);
  HypercomplexStructure s = structure_from_json(field(j, "structure"));
  const RationalMatrix rows = matrix_from_json(field(j, "subspace"), s.dim());
  return Pair(std::move(s), Subspace<Rational>::span(rows.cols(), rows));
}

Json to_json(const SheafReport& r) {
  Json out;
  out["cr"] = r.is_cr;
  out["cocr"] = r.is_co_cr;
  out["minus"] = r.minus.degrees;
  if (r.plus_is_torsion())
    out["plus"] = Json{{"torsion", std::get<TorsionMarker>(r.plus).factors}};
  else
    out["plus"] = r.plus_splitting().degrees;
  return out;
}

SheafReport report_from_json(const Json& j) {
  forward_upstream_error(j);
  SheafReport r;
  try {
    r.is_cr = field(j, "cr").get<bool>();
    r.is_co_cr = field(j, "cocr").get<bool>();
    r.minus = SplittingType(field(j, "minus").get<std::vector<int>>());
    const Json& plus = field(j, "plus");
    if (plus.is_object())
      r.plus = TorsionMarker{field(plus, "torsion").get<std::vector<std::string>>()};
    else
      r.plus = SplittingType(plus.get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed sheaf report: ") + e.what());
  }
  return r;
}

Json to_json(const Decomposition& d) {
  Json out = Json::array();
  for (const auto& f : d) out.push_back(Json{{"tag", tag_name(f.tag)}, {"k", f.k}});
  return out;
}

Decomposition decomposition_from_json(const Json& j) {
  forward_upstream_error(j);
  const Json& list = j.is_object() ? field(j, "decomposition") : j;
  if (!list.is_array()) throw ParseError("decomposition must be an array");
  Decomposition out;
  for (const auto& item : list) {
    const Json& k = field(item, "k");
    if (!k.is_number_integer()) throw ParseError("factor 'k' must be an integer");
    const Json& tag = field(item, "tag");
    if (!tag.is_string()) throw ParseError("factor 'tag' must be a string");
    FactorSpec f{parse_tag(tag.get<std::string>()), k.get<int>()};
    f.validate();
    out.push_back(f);
  }
  return out;
}

Json to_json(const FQuatTriple& t) {
  Json out;
  out["structure"] = to_json(t.structure);
  out["u"] = to_json(t.u.basis());
  out["v"] = to_json(t.v.basis());
  return out;
}

FQuatTriple triple_from_json(const Json& j) {
  forward_upstream_error(j);
  if (j.is_object() && j.contains("triple")) return triple_from_json(j["triple"]);
  HypercomplexStructure s = structure_from_json(field(j, "structure"));
  const std::size_t n = s.dim();
  const RationalMatrix u = matrix_from_json(field(j, "u"), n);
  const RationalMatrix v = matrix_from_json(field(j, "v"), n);
  return {std::move(s), Subspace<Rational>::span(n, u), Subspace<Rational>::span(n, v)};
}

Json to_json(const GroupElement& g) {
  Json out;
  out["A"] = to_json(g.a());
  out["q"] = to_json(g.q());
  out["B"] = to_json(g.b());
  return out;
}

GroupElement group_element_from_json(const Json& j) {
  return GroupElement(square_matrix_from_json(field(j, "A")), quaternion_from_json(field(j, "q")),
                      quaternion_matrix_from_json(field(j, "B")));
}

Json to_json(const RealForm& f) {
  Json out;
  out["u"] = to_json(f.u.basis());
  out["iso"] = to_json(f.iso);
  out["rotation"] = to_json(f.rotation);
  return out;
}

RealForm real_form_from_json(const Json& j) {
  forward_upstream_error(j);
  if (j.is_object() && j.contains("real_form")) return real_form_from_json(j["real_form"]);
  RationalMatrix iso = square_matrix_from_json(field(j, "iso"));
  RationalMatrix rotation = square_matrix_from_json(field(j, "rotation"));
  if (rotation.rows() != 3) throw ParseError("rotation must be 3 x 3");
  const std::size_t n = iso.rows();
  return {Subspace<Rational>::span(n, matrix_from_json(field(j, "u"), n)), std::move(iso), std::move(rotation)};
}

Json error_document(const Error& e) {
  Json err;
  err["name"] = e.name();
  err["module"] = e.module();
  err["message"] = e.what();
  err["details"] = e.details();
  return Json{{"error", err}};
}

void forward_upstream_error(const Json& j) {
  if (!j.is_object() || !j.contains("error")) return;
  const Json& err = j["error"];
  auto text = [&](const char* key) {
    return err.is_object() && err.contains(key) && err[key].is_string() ? err[key].get<std::string>() : std::string();
  };
  std::vector<std::string> details;
  if (err.is_object() && err.contains("details") && err["details"].is_array())
    for (const auto& d : err["details"])
      if (d.is_string()) details.push_back(d.get<std::string>());
  const std::string name = text("name");
  if (name == "parse-error") throw ParseError(text("message"));
  throw Error(name.empty() ? "upstream-error" : name, text("module"), text("message"), details);
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace qcr::io
