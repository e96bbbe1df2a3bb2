#include "canrep/repfile.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace canrep {

namespace {

using Json = nlohmann::ordered_json;

Json algebra_to_json(const CanonicalAlgebra& alg) {
  Json j;
  j["p"] = alg.weights().p;
  Json lam = Json::array();
  for (const Rat& q : alg.lambdas()) lam.push_back(rat_to_string(q));
  j["lambda"] = std::move(lam);
  return j;
}

CanonicalAlgebra algebra_from_json(const Json& j, const std::string& where) {
  if (!j.is_object())
    throw RepFileError(where + ": expected an object with p and lambda");
  if (!j.contains("p") || !j["p"].is_array())
    throw RepFileError(where + ".p: expected an array of weights");
  std::vector<long long> p;
  for (const auto& w : j["p"]) {
    if (!w.is_number_integer())
      throw RepFileError(where + ".p: weights must be integers");
    p.push_back(w.get<long long>());
  }
  if (!j.contains("lambda") || !j["lambda"].is_array())
    throw RepFileError(where + ".lambda: expected an array of rationals");
  std::vector<Rat> lambda;
  for (size_t i = 0; i < j["lambda"].size(); ++i) {
    const auto& entry = j["lambda"][i];
    const std::string slot = where + ".lambda[" + std::to_string(i) + "]";
    if (!entry.is_string())
      throw RepFileError(slot + ": rationals are written as strings");
    const auto q = rat_from_string(entry.get<std::string>());
    if (!q) throw RepFileError(slot + ": not a rational");
    lambda.push_back(*q);
  }
  for (const auto& key : j.items())
    if (key.key() != "p" && key.key() != "lambda")
      throw RepFileError(where + "." + key.key() + ": unknown key");
  try {
    return CanonicalAlgebra(make_weights(std::move(p)), std::move(lambda));
  } catch (const std::invalid_argument& e) {
    throw RepFileError(where + ": " + e.what());
  }
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const Json& j, int rows, int cols, const std::string& where) {
  if (!j.is_array()) throw RepFileError(where + ": expected an array of rows");
  if (static_cast<int>(j.size()) != rows)
    throw RepFileError(where + ": has " + std::to_string(j.size()) +
                       " rows, expected " + std::to_string(rows));
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j[r];
    const std::string at_row = where + " row " + std::to_string(r);
    if (!row.is_array()) throw RepFileError(at_row + ": expected an array");
    if (static_cast<int>(row.size()) != cols)
      throw RepFileError(at_row + ": has " + std::to_string(row.size()) +
                         " entries, expected " + std::to_string(cols));
    for (int c = 0; c < cols; ++c) {
      const std::string at = where + "[" + std::to_string(r) + "][" +
                             std::to_string(c) + "]";
      if (!row[c].is_string())
        throw RepFileError(at + ": rationals are written as strings");
      const auto q = rat_from_string(row[c].get<std::string>());
      if (!q) throw RepFileError(at + ": not a rational");
      m.at(r, c) = *q;
    }
  }
  return m;
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw RepFileError(std::string("representation file: ") + e.what());
  }
}

}  // namespace

std::string emit_algebra(const CanonicalAlgebra& alg) {
  return algebra_to_json(alg).dump(2) + "\n";
}

CanonicalAlgebra parse_algebra(const std::string& text) {
  return algebra_from_json(parse_document(text), "algebra");
}

std::string emit_rep(const Rep& m) {
  Json j;
  j["algebra"] = algebra_to_json(m.alg);
  Json dims;
  for (VertexId v = 0; v < m.alg.vertex_count(); ++v)
    dims[m.alg.vertex_label(v)] = m.dims[v];
  j["dims"] = std::move(dims);
  Json mats;
  for (int id = 0; id < m.alg.arrow_count(); ++id)
    mats[m.alg.arrow_label(id)] = mat_to_json(m.mats[id]);
  j["mats"] = std::move(mats);
  return j.dump(2) + "\n";
}

Rep parse_rep(const std::string& text) {
  const Json j = parse_document(text);
  if (!j.is_object())
    throw RepFileError("representation file: expected a top-level object");
  for (const auto& key : j.items())
    if (key.key() != "algebra" && key.key() != "dims" && key.key() != "mats")
      throw RepFileError(key.key() + ": unknown top-level key");
  if (!j.contains("algebra"))
    throw RepFileError("representation file: missing algebra descriptor");
  CanonicalAlgebra alg = algebra_from_json(j["algebra"], "algebra");

  if (!j.contains("dims") || !j["dims"].is_object())
    throw RepFileError("dims: expected an object keyed by vertex labels");
  std::vector<int> dims(static_cast<size_t>(alg.vertex_count()), -1);
  for (const auto& item : j["dims"].items()) {
    const auto v = alg.vertex_by_label(item.key());
    if (!v) throw RepFileError("dims." + item.key() + ": unknown vertex label");
    if (!item.value().is_number_integer() || item.value().get<long long>() < 0)
      throw RepFileError("dims." + item.key() +
                         ": expected a nonnegative integer");
    dims[*v] = item.value().get<int>();
  }
  for (VertexId v = 0; v < alg.vertex_count(); ++v)
    if (dims[v] < 0)
      throw RepFileError("dims: missing vertex " + alg.vertex_label(v));

  if (!j.contains("mats") || !j["mats"].is_object())
    throw RepFileError("mats: expected an object keyed by arrow labels");
  std::vector<Mat> mats(static_cast<size_t>(alg.arrow_count()));
  std::vector<bool> seen(static_cast<size_t>(alg.arrow_count()), false);
  for (const auto& item : j["mats"].items()) {
    const auto id = alg.arrow_by_label(item.key());
    if (!id) throw RepFileError("mats." + item.key() + ": unknown arrow label");
    const Arrow& a = alg.arrow(*id);
    mats[*id] = mat_from_json(item.value(), dims[a.src], dims[a.tgt],
                              "mats." + item.key());
    seen[*id] = true;
  }
  for (int id = 0; id < alg.arrow_count(); ++id)
    if (!seen[id])
      throw RepFileError("mats: missing arrow " + alg.arrow_label(id));

  Rep m{std::move(alg), std::move(dims), std::move(mats)};
  validate_shapes(m);
  return m;
}

std::string latex_matrices(const Rep& m) {
  std::string out;
  for (int id = 0; id < m.alg.arrow_count(); ++id) {
    const Arrow& a = m.alg.arrow(id);
    out += "\\alpha^{(" + std::to_string(a.arm) + ")}_{" +
           std::to_string(a.idx) + "} = \\begin{pmatrix}";
    const Mat& f = m.mats[id];
    for (int r = 0; r < f.rows(); ++r) {
      if (r) out += " \\\\ ";
      for (int c = 0; c < f.cols(); ++c) {
        if (c) out += " & ";
        out += rat_to_latex(f.at(r, c));
      }
    }
    out += "\\end{pmatrix}\n";
  }
  return out;
}

}  // namespace canrep
