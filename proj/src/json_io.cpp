#include "relufibre/json_io.hpp"

#include <set>

#include "relufibre/error.hpp"

namespace relufibre {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::Schema, (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error("/" + std::string(key), "missing field");
  return *it;
}

std::size_t dim_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  auto v = j.get<long long>();
  if (v < 1)
    throw Error(ErrorCode::InvalidArchitecture, path + ": must be >= 1, got " + std::to_string(v));
  return static_cast<std::size_t>(v);
}

RatVec vec_from_json(const Json& j, std::size_t len, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  if (j.size() != len)
    throw Error(ErrorCode::DimensionMismatch, path + ": expected " + std::to_string(len) +
                                                  " entries, got " + std::to_string(j.size()));
  RatVec out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(rat_from_json(j[i], path + "/" + std::to_string(i)));
  return out;
}

Matrix mat_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of rows");
  if (j.size() != rows)
    throw Error(ErrorCode::DimensionMismatch, path + ": expected " + std::to_string(rows) +
                                                  " rows, got " + std::to_string(j.size()));
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto row = vec_from_json(j[r], cols, path + "/" + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = std::move(row[c]);
  }
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json index_json(const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

}  // namespace

Rat rat_from_json(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat::parse(j.dump());
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedRational, path + ": " + e.what());
  }
  if (j.is_number_float())
    throw Error(ErrorCode::MalformedRational,
                path + ": floating-point literal " + j.dump() + " is not accepted");
  schema_error(path, "expected a rational string or integer");
}

Json to_json(const Rat& r) { return r.str(); }

Json to_json(std::span<const Rat> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Parameter parameter_from_json(const Json& j) {
  if (!j.is_object()) schema_error("", "expected an object");
  static const std::set<std::string> known{"m", "n", "k", "M", "A", "b", "c"};
  for (const auto& item : j.items())
    if (!known.count(item.key())) schema_error("/" + item.key(), "unknown field");
  const std::size_t m = dim_from_json(field(j, "m"), "/m");
  const std::size_t n = dim_from_json(field(j, "n"), "/n");
  const std::size_t k = dim_from_json(field(j, "k"), "/k");
  Matrix M = mat_from_json(field(j, "M"), k, n, "/M");
  Matrix A = mat_from_json(field(j, "A"), n, m, "/A");
  RatVec b = vec_from_json(field(j, "b"), n, "/b");
  RatVec c = vec_from_json(field(j, "c"), k, "/c");
  return Parameter(std::move(M), std::move(A), std::move(b), std::move(c));
}

Parameter parse_parameter(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    schema_error("", std::string("invalid JSON: ") + e.what());
  }
  return parameter_from_json(j);
}

Json to_json(const Parameter& theta) {
  Json out;
  out["m"] = theta.m();
  out["n"] = theta.n();
  out["k"] = theta.k();
  out["M"] = matrix_json(theta.M());
  out["A"] = matrix_json(theta.A());
  out["b"] = to_json(theta.b());
  out["c"] = to_json(theta.c());
  return out;
}

std::string serialize(const Parameter& theta) { return to_json(theta).dump(); }

GroupElement group_element_from_json(const Json& j) {
  if (!j.is_object()) schema_error("", "expected an object");
  const Json& perm = field(j, "perm");
  if (!perm.is_array()) schema_error("/perm", "expected an array");
  std::vector<std::size_t> images;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (!perm[i].is_number_integer() || perm[i].get<long long>() < 1)
      schema_error("/perm/" + std::to_string(i), "expected a one-based index");
    images.push_back(static_cast<std::size_t>(perm[i].get<long long>() - 1));
  }
  RatVec scale = vec_from_json(field(j, "scale"), images.size(), "/scale");
  return GroupElement(std::move(images), std::move(scale));
}

Json to_json(const GroupElement& g) {
  Json out;
  out["perm"] = index_json(g.perm());
  out["scale"] = to_json(g.scale());
  return out;
}

Json to_json(const StabilizerDescription& s) {
  Json out;
  Json pairs = Json::array();
  for (const auto& p : s.pairs) pairs.push_back(Json::array({p.i + 1, p.j + 1, p.lambda.str()}));
  out["pairs"] = std::move(pairs);
  out["zero_block"] = index_json(s.zero_block);
  out["group"] = "⟨S⟩ × H_" + std::to_string(s.zero_block.size());
  return out;
}

Json to_json(const MinimalForm& mf) {
  Json out;
  out["u"] = mf.u;
  Json rows = Json::array();
  for (const auto& r : mf.rows) {
    Json row;
    row["a"] = to_json(r.a);
    row["b"] = r.b.str();
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  out["C"] = mf.C.str();
  return out;
}

Json to_json(const Reduction& r) {
  if (const auto* z = std::get_if<ZeroReduction>(&r)) {
    Json out;
    out["zero_reduction"] = true;
    out["C"] = z->C.str();
    return out;
  }
  return to_json(std::get<Parameter>(r));
}

Json to_json(const EquivalenceCertificate& cert) {
  Json out;
  if (cert.kind == EquivalenceCertificate::Kind::Zero) {
    out["kind"] = "zero";
    return out;
  }
  out["kind"] = "mirrored";
  Json pairs = Json::array();
  for (const auto& [p, q] : cert.pairs) pairs.push_back(Json::array({p + 1, q + 1}));
  out["pairs"] = std::move(pairs);
  out["sum_a"] = to_json(cert.sum_a);
  out["sum_b_plus_C"] = cert.sum_b_plus_C.str();
  out["difference"] = to_json(cert.difference);
  return out;
}

Json to_json(const EquivalenceResult& result) {
  Json out;
  out["equivalent"] = result.equivalent;
  Json certs = Json::array();
  for (const auto& c : result.per_output) certs.push_back(c ? to_json(*c) : Json(nullptr));
  out["outputs"] = std::move(certs);
  return out;
}

Json to_json(const Violation& v) {
  Json out;
  out["condition"] = to_string(v.condition);
  out["projection"] = v.projection + 1;
  if (!v.indices.empty()) out["indices"] = index_json(v.indices);
  if (!v.beta.empty()) out["beta"] = v.beta;
  out["message"] = v.describe();
  return out;
}

Json to_json(const FibreVerdict& v) {
  Json out;
  out["state"] = to_string(v.state);
  out["reason"] = v.reason;
  if (v.witness) out["witness"] = to_json(*v.witness);
  if (v.violation) out["violation"] = to_json(*v.violation);
  return out;
}

Json to_json(const SampleComparison& s) {
  Json out;
  out["equal"] = s.equal;
  if (s.counterexample) out["counterexample"] = to_json(*s.counterexample);
  return out;
}

}  // namespace relufibre
