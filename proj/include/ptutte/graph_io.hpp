#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ptutte/bip_graph.hpp"
#include "ptutte/error.hpp"
#include "ptutte/multigraph.hpp"

namespace ptutte {

using GraphDocument = std::variant<BipGraph, MultiGraph>;

namespace detail {

inline GraphDocument parse_json_graph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("edges")) throw Error(ErrorCode::Parse, "graph document needs an \"edges\" array");
    if (doc.contains("n")) {
      std::vector<Endpoints> edges;
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::Parse, "edge entries must be [u, v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
      return MultiGraph::make(doc.at("n").get<int>(), std::move(edges));
    }
    if (doc.contains("A") && doc.contains("B")) {
      std::vector<IdEdge> edges;
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::Parse, "edge entries must be [u, v] pairs");
        edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
      }
      return make_bipartite(doc.at("A").get<std::vector<VertexId>>(), doc.at("B").get<std::vector<VertexId>>(), edges);
    }
    throw Error(ErrorCode::Parse, "graph document needs \"A\" and \"B\", or \"n\"");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed graph document: ") + e.what());
  }
}

// "bip a b" (A = 1..a, B = a+1..a+b) or "multi n", then one "u v" per line.
// Blank lines and lines starting with '#' are ignored.
inline GraphDocument parse_text_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line, kind;
  long p = 0, q = 0;
  bool have_header = false;
  std::vector<std::pair<long, long>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    auto bad = [&](const std::string& why) {
      return Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + why);
    };
    if (!have_header) {
      ls >> kind;
      if (kind == "bip") {
        if (!(ls >> p >> q) || p < 0 || q < 0) throw bad("expected 'bip a b'");
      } else if (kind == "multi") {
        if (!(ls >> p) || p < 1) throw bad("expected 'multi n'");
      } else {
        throw bad("header must be 'bip a b' or 'multi n'");
      }
      std::string extra;
      if (ls >> extra) throw bad("trailing text in header");
      have_header = true;
      continue;
    }
    long u = 0, v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) throw bad("expected 'u v'");
    edges.emplace_back(u, v);
  }
  if (!have_header) throw Error(ErrorCode::Parse, "empty graph file");
  if (kind == "multi") {
    std::vector<Endpoints> e;
    for (auto [u, v] : edges) e.emplace_back(static_cast<int>(u), static_cast<int>(v));
    return MultiGraph::make(static_cast<int>(p), std::move(e));
  }
  std::vector<VertexId> a, b;
  for (long i = 1; i <= p; ++i) a.push_back(i);
  for (long j = 1; j <= q; ++j) b.push_back(p + j);
  return make_bipartite(a, b, edges);
}

}  // namespace detail

// JSON when the first non-blank character is '{', edge-list text otherwise.
inline GraphDocument parse_graph(const std::string& text) {
  auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') return detail::parse_json_graph(text);
  return detail::parse_text_graph(text);
}

inline GraphDocument load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

inline nlohmann::json to_json(const BipGraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : h.edges()) edges.push_back({u, v});
  return {{"A", h.side_ids(Side::A)}, {"B", h.side_ids(Side::B)}, {"edges", edges}};
}

inline nlohmann::json to_json(const MultiGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

}  // namespace ptutte
