#include "flagcx/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "flagcx/error.hpp"

namespace flagcx {

namespace {

nlohmann::ordered_json vertex_json(const Vertex& v) {
  if (v.is_colored()) return to_string(v);
  return v.index();
}

Vertex vertex_from_json(const nlohmann::ordered_json& j) {
  if (j.is_number_integer()) return Vertex::plain(j.get<std::int64_t>());
  if (j.is_string()) return parse_vertex(j.get<std::string>());
  throw Error(Errc::parse, "bad vertex " + j.dump());
}

}  // namespace

nlohmann::ordered_json to_json(const Complex& c) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : c.vertices()) j["vertices"].push_back(vertex_json(v));
  j["facets"] = nlohmann::ordered_json::array();
  for (const auto& f : c.facets()) {
    auto face = nlohmann::ordered_json::array();
    for (const auto& v : f.vertices()) face.push_back(vertex_json(v));
    j["facets"].push_back(std::move(face));
  }
  return j;
}

nlohmann::ordered_json to_json(const ColoredComplex& cc) {
  nlohmann::ordered_json j;
  j["colors"] = cc.d();
  const auto plain = to_json(cc.complex());
  for (const auto& [key, value] : plain.items()) j[key] = value;
  return j;
}

Complex complex_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("facets") || !j["vertices"].is_array() ||
      !j["facets"].is_array()) {
    throw Error(Errc::parse, "complex JSON needs \"vertices\" and \"facets\" arrays");
  }
  std::vector<Vertex> vertices;
  for (const auto& v : j["vertices"]) vertices.push_back(vertex_from_json(v));
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw Error(Errc::parse, "duplicate entry in \"vertices\"");
  }
  std::vector<Face> generators{Face{}};
  for (const auto& v : vertices) generators.push_back(Face{v});
  for (const auto& facet : j["facets"]) {
    if (!facet.is_array()) throw Error(Errc::parse, "facet must be an array");
    std::vector<Vertex> vs;
    for (const auto& v : facet) {
      const auto vertex = vertex_from_json(v);
      if (!std::binary_search(vertices.begin(), vertices.end(), vertex)) {
        throw Error(Errc::parse, "facet vertex " + to_string(vertex) + " missing from \"vertices\"");
      }
      vs.push_back(vertex);
    }
    generators.push_back(Face(std::move(vs)));
  }
  return generate(generators);
}

bool is_colored_json(const nlohmann::ordered_json& j) { return j.is_object() && j.contains("colors"); }

ColoredComplex colored_from_json(const nlohmann::ordered_json& j) {
  if (!is_colored_json(j) || !j["colors"].is_number_integer()) {
    throw Error(Errc::parse, "colored complex JSON needs an integer \"colors\" field");
  }
  return ColoredComplex::over(j["colors"].get<int>(), complex_from_json(j));
}

nlohmann::ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open " + path);
  try {
    return nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse, path + ": " + e.what());
  }
}

}  // namespace flagcx
