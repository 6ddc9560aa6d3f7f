#include "affcrys/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <json.hpp>

#include "affcrys/crystal.hpp"

namespace affcrys {

namespace {

// Generic BFS; Ops provides key(x), text(x), cwt(x), f(i, x) -> optional<X>.
template <class X, class Ops>
GraphDump bfs(const X& root, int depth, int colors, const Ops& ops) {
  GraphDump g;
  std::map<std::string, int> seen;
  std::vector<X> items{root};
  seen[ops.key(root)] = 0;
  g.nodes.push_back({0, ops.text(root), ops.cwt(root), 0});
  for (size_t u = 0; u < items.size(); ++u) {
    if (g.nodes[u].depth >= depth) continue;
    for (int i = 0; i < colors; ++i) {
      auto y = ops.f(i, items[u]);
      if (!y) continue;
      const std::string k = ops.key(*y);
      auto it = seen.find(k);
      int v;
      if (it == seen.end()) {
        v = static_cast<int>(items.size());
        seen.emplace(k, v);
        items.push_back(*y);
        g.nodes.push_back({v, ops.text(*y), ops.cwt(*y), g.nodes[u].depth + 1});
      } else {
        v = it->second;
      }
      g.edges.push_back({static_cast<int>(u), v, i});
    }
  }
  return g;
}

}  // namespace

GraphDump wall_graph(const WallCrystal& W, int depth) {
  struct Ops {
    const WallCrystal& W;
    std::string key(const Wall& w) const { return W.to_string(w); }
    std::string text(const Wall& w) const { return W.to_string(w); }
    ClassicalWeight cwt(const Wall& w) const { return W.cwt(w); }
    std::optional<Wall> f(int i, const Wall& w) const { return W.f(i, w); }
  };
  GraphDump g = bfs(W.ground_wall(), depth, W.type().size(), Ops{W});
  g.meta = {W.type().name(), W.type().n, W.level(), W.lambda().str(), depth, "wall"};
  return g;
}

GraphDump path_graph(const PathCrystal& P, int depth) {
  struct Ops {
    const PathCrystal& P;
    std::string key(const Path& p) const { return P.to_string(p); }
    std::string text(const Path& p) const { return P.to_string(p); }
    ClassicalWeight cwt(const Path& p) const { return P.cwt(p); }
    std::optional<Path> f(int i, const Path& p) const { return P.f(i, p); }
  };
  GraphDump g = bfs(P.ground_path(), depth, P.type().size(), Ops{P});
  g.meta = {P.type().name(), P.type().n, P.level(), P.lambda().str(), depth, "path"};
  return g;
}

GraphDump slice_graph(const AffineType& t, int l) {
  const auto slices = all_slices(t, l);
  std::map<Slice, int> id;
  for (size_t k = 0; k < slices.size(); ++k) id.emplace(slices[k], static_cast<int>(k));
  GraphDump g;
  std::vector<std::vector<int>> adj(slices.size());
  for (size_t k = 0; k < slices.size(); ++k) {
    g.nodes.push_back({static_cast<int>(k), to_string(slices[k]), cwt_slice(slices[k]), -1});
    for (int i = 0; i <= t.n; ++i) {
      auto y = f_slice(i, slices[k]);
      if (!y) continue;
      const int v = id.at(*y);
      g.edges.push_back({static_cast<int>(k), v, i});
      adj[k].push_back(v);
      adj[v].push_back(static_cast<int>(k));
    }
  }
  int maxd = 0;
  if (!slices.empty()) {
    std::deque<int> q{0};
    g.nodes[0].depth = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      for (int v : adj[u])
        if (g.nodes[v].depth < 0) {
          g.nodes[v].depth = g.nodes[u].depth + 1;
          maxd = std::max(maxd, g.nodes[v].depth);
          q.push_back(v);
        }
    }
  }
  g.meta = {t.name(), t.n, l, "", maxd, "slice-perfect"};
  return g;
}

std::string to_dot(const GraphDump& g) {
  auto quote = [](const std::string& s) {
    std::string r = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') r += '\\';
      r += c;
    }
    return r + "\"";
  };
  std::string s = "digraph crystal {\n";
  s += "  // " + g.meta.type + " level " + std::to_string(g.meta.level) + " model " + g.meta.model;
  if (!g.meta.lambda.empty()) s += " lambda " + g.meta.lambda;
  s += "\n";
  for (const auto& n : g.nodes)
    s += "  n" + std::to_string(n.id) + " [label=" + quote(n.element + "\\nwt " + n.weight.str()) + "];\n";
  for (const auto& e : g.edges)
    s += "  n" + std::to_string(e.src) + " -> n" + std::to_string(e.dst) + " [label=\"" + std::to_string(e.color) + "\"];\n";
  return s + "}\n";
}

std::string to_json(const GraphDump& g, int indent) {
  nlohmann::json j;
  j["meta"] = {{"type", g.meta.type},   {"rank", g.meta.rank},   {"level", g.meta.level},
               {"lambda", g.meta.lambda}, {"depth", g.meta.depth}, {"model", g.meta.model}};
  j["nodes"] = nlohmann::json::array();
  for (const auto& n : g.nodes)
    j["nodes"].push_back({{"id", n.id}, {"element", n.element}, {"weight", n.weight.c}, {"depth", n.depth}});
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges) j["edges"].push_back({{"src", e.src}, {"dst", e.dst}, {"color", e.color}});
  return j.dump(indent) + "\n";
}

}  // namespace affcrys
