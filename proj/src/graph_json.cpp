// Copyright 2026 The pstlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pstlab/graph_json.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pstlab/errors.hpp"

namespace pstlab::io {

using nlohmann::json;

std::string formatReal(double x) {
  if (!std::isfinite(x)) throw NumericError("formatReal: non-finite value");
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  if (ec != std::errc{}) throw NumericError("formatReal: conversion failed");
  return {buf, end};
}

namespace {

std::string quote(const std::string& s) { return json(s).dump(); }

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::size_t asIndex(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InputError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

std::string toJson(const Graph& g) {
  std::ostringstream os;
  os << "{\n";
  if (!g.name().empty()) os << "  \"name\": " << quote(g.name()) << ",\n";
  os << "  \"n\": " << g.order() << ",\n";
  os << "  \"edges\": [";
  bool first = true;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u; v < g.order(); ++v) {
      const double w = g.weight(u, v);
      if (w == 0.0) continue;
      os << (first ? "\n" : ",\n") << "    [" << u << ", " << v << ", " << formatReal(w) << "]";
      first = false;
    }
  os << (first ? "]" : "\n  ]");
  if (!g.vertexLabels().empty()) {
    os << ",\n  \"vertex_labels\": [";
    for (std::size_t i = 0; i < g.vertexLabels().size(); ++i)
      os << (i ? ", " : "") << quote(g.vertexLabels()[i]);
    os << "]";
  }
  os << "\n}\n";
  return os.str();
}

Graph graphFromJson(std::string_view text) {
  const json j = parse(text);
  if (!j.is_object()) throw InputError("graph JSON must be an object");
  if (!j.contains("n")) throw InputError("graph JSON is missing \"n\"");
  const std::size_t n = asIndex(j.at("n"), "\"n\"");
  if (n == 0) throw InputError("graph must have at least one vertex");
  if (n > 4096) throw InputError("graph exceeds the 4096-vertex size guard");
  Matrix adj(n, n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) throw InputError("\"edges\" must be an array");
    for (const json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw InputError("each edge must be [u, v, w]");
      const std::size_t u = asIndex(e[0], "edge endpoint");
      const std::size_t v = asIndex(e[1], "edge endpoint");
      if (!e[2].is_number()) throw InputError("edge weight must be a number");
      const double w = e[2].get<double>();
      if (u > v) throw InputError("edge endpoints must satisfy u <= v");
      if (v >= n) throw InputError("edge endpoint out of range");
      if (!std::isfinite(w) || w < 0.0) throw InputError("edge weight must be finite and non-negative");
      if (!seen.emplace(u, v).second)
        throw InputError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
      adj(u, v) = w;
      adj(v, u) = w;
    }
  }
  std::string name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw InputError("\"name\" must be a string");
    name = j.at("name").get<std::string>();
  }
  std::vector<std::string> labels;
  if (j.contains("vertex_labels")) labels = j.at("vertex_labels").get<std::vector<std::string>>();
  return Graph(std::move(adj), std::move(name), std::move(labels));
}

std::string toJson(const Partition& p) {
  std::ostringstream os;
  os << "{\"m\": " << p.cellCount() << ", \"cells\": [";
  const auto cells = p.cells();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    os << (c ? ", " : "") << "[";
    for (std::size_t i = 0; i < cells[c].size(); ++i) os << (i ? ", " : "") << cells[c][i];
    os << "]";
  }
  os << "]}\n";
  return os.str();
}

Partition partitionFromJson(std::string_view text, std::size_t n) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("cells") || !j.at("cells").is_array())
    throw InputError("partition JSON must be an object with a \"cells\" array");
  std::vector<std::vector<Vertex>> cells;
  for (const json& c : j.at("cells")) {
    if (!c.is_array()) throw InputError("each cell must be an array of vertices");
    std::vector<Vertex> cell;
    for (const json& v : c) cell.push_back(asIndex(v, "cell vertex"));
    cells.push_back(std::move(cell));
  }
  Partition p = Partition::fromCells(n, cells);
  if (j.contains("m") && asIndex(j.at("m"), "\"m\"") != p.cellCount())
    throw InputError("\"m\" does not match the number of cells");
  return p;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace pstlab::io
