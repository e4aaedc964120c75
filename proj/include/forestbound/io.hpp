#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "multigraph.hpp"

namespace forestbound {

// graph-v1: {"format": "graph-v1", "num_vertices": n, "edges": [[u, v], ...]}
// sign-v1:  {"format": "sign-v1", "signs": [1, -1, ...]}
// Both are parsed strictly: every field required, no others allowed.

inline nlohmann::json graph_to_json(const Multigraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"format", "graph-v1"}, {"num_vertices", g.num_vertices()}, {"edges", std::move(edges)}};
}

inline nlohmann::json signs_to_json(const SignAssignment& s) {
  return {{"format", "sign-v1"}, {"signs", s.signs()}};
}

namespace detail {

inline void require_exact_fields(const nlohmann::json& j, std::initializer_list<const char*> fields,
                                 const std::string& format) {
  if (!j.is_object()) throw InputError(format + ": top level must be an object");
  for (const char* f : fields)
    if (!j.contains(f)) throw InputError(format + ": missing field '" + f + "'");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* f : fields) known = known || key == f;
    if (!known) throw InputError(format + ": unknown field '" + key + "'");
  }
  if (j["format"] != format) throw InputError(format + ": wrong format tag");
}

inline nlohmann::json parse_json_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline std::size_t as_index(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw InputError(std::string(what) + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace detail

inline Multigraph graph_from_json(const nlohmann::json& j) {
  detail::require_exact_fields(j, {"format", "num_vertices", "edges"}, "graph-v1");
  const std::size_t n = detail::as_index(j["num_vertices"], "num_vertices");
  if (!j["edges"].is_array()) throw InputError("graph-v1: edges must be an array");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw InputError("graph-v1: each edge must be a [u, v] pair");
    edges.push_back({detail::as_index(e[0], "edge endpoint"), detail::as_index(e[1], "edge endpoint")});
  }
  return Multigraph(n, std::move(edges));
}

inline SignAssignment signs_from_json(const nlohmann::json& j) {
  detail::require_exact_fields(j, {"format", "signs"}, "sign-v1");
  if (!j["signs"].is_array()) throw InputError("sign-v1: signs must be an array");
  std::vector<int> signs;
  for (const auto& s : j["signs"]) {
    if (!s.is_number_integer() || (s.get<long long>() != 1 && s.get<long long>() != -1))
      throw InputError("sign-v1: signs must be +1 or -1");
    signs.push_back(static_cast<int>(s.get<long long>()));
  }
  return SignAssignment(std::move(signs));
}

inline Multigraph parse_graph(const std::string& text) { return graph_from_json(detail::parse_json_text(text)); }
inline SignAssignment parse_signs(const std::string& text) {
  return signs_from_json(detail::parse_json_text(text));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Multigraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }
inline SignAssignment load_signs(const std::string& path) { return parse_signs(read_file(path)); }

}  // namespace forestbound
