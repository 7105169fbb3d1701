#include "qpbl/space_io.hpp"

#include <fstream>

namespace qpbl {

namespace {

Rational entry_from_json(const nlohmann::json& v, const std::string& what) {
  if (v.is_string()) {
    const auto r = Rational::parse(v.get<std::string>());
    if (!r) throw FileFormatError(what + ": cannot parse fraction '" + v.get<std::string>() + "'");
    return *r;
  }
  if (v.is_number()) {
    const auto r = Rational::from_double(v.get<double>());
    if (!r)
      throw FileFormatError(what + ": value not representable as a 64-bit ratio; "
                                   "use a \"p/q\" string");
    return *r;
  }
  throw FileFormatError(what + ": expected a number or a \"p/q\" string");
}

nlohmann::json entry_to_json(const Rational& r) {
  if (r.den() == 1) return nlohmann::json(r.num());
  const auto back = Rational::from_double(r.to_double());
  if (back && *back == r) return nlohmann::json(r.to_double());
  return nlohmann::json(r.to_string());
}

}  // namespace

Space space_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FileFormatError("space file must be a JSON object");
  for (const char* key : {"name", "points", "matrix", "s"})
    if (!j.contains(key)) throw FileFormatError(std::string("missing field '") + key + "'");

  const std::string name = j.at("name").get<std::string>();
  std::vector<std::string> labels;
  for (const auto& p : j.at("points")) {
    if (p.is_string())
      labels.push_back(p.get<std::string>());
    else
      labels.push_back(p.dump());
  }
  const std::size_t n = labels.size();
  if (n == 0) throw FileFormatError("space must have at least one point");

  const auto& m = j.at("matrix");
  if (!m.is_array() || m.size() != n) throw FileFormatError("matrix must be n x n");
  std::vector<std::vector<Rational>> matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n) throw FileFormatError("matrix must be n x n");
    matrix[i].reserve(n);
    for (std::size_t k = 0; k < n; ++k)
      matrix[i].push_back(entry_from_json(m[i][k], "matrix[" + std::to_string(i) + "][" +
                                                       std::to_string(k) + "]"));
  }

  const Rational s = entry_from_json(j.at("s"), "s");
  if (s < Rational(1)) throw FileFormatError("coefficient s must be >= 1");
  return Space::finite_table(name, std::move(labels), std::move(matrix), s);
}

nlohmann::json space_to_json(const Space& space) {
  if (!space.is_finite() || !space.table())
    throw BadParams("only table-backed finite spaces can be serialized");
  nlohmann::json j;
  j["name"] = space.name();
  j["points"] = space.finite().labels;
  nlohmann::json m = nlohmann::json::array();
  for (const auto& row : *space.table()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(entry_to_json(v));
    m.push_back(std::move(r));
  }
  j["matrix"] = std::move(m);
  j["s"] = space.coefficient_exact() ? entry_to_json(*space.coefficient_exact())
                                     : nlohmann::json(space.coefficient());
  return j;
}

Space load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open space file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FileFormatError("invalid JSON in " + path + ": " + e.what());
  }
  return space_from_json(j);
}

void save_space(const Space& space, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileFormatError("cannot write space file: " + path);
  out << space_to_json(space).dump(2) << "\n";
}

}  // namespace qpbl
