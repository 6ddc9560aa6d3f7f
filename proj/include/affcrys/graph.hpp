#pragma once

#include <string>
#include <vector>

#include "affcrys/path.hpp"
#include "affcrys/wall.hpp"

namespace affcrys {

struct GraphNode {
  int id = 0;
  std::string element;
  ClassicalWeight weight;  // classical weight
  int depth = 0;
};

struct GraphEdge {
  int src = 0, dst = 0, color = 0;
};

struct GraphMeta {
  std::string type;  // e.g. "B1:3"
  int rank = 0;
  int level = 0;
  std::string lambda;  // empty for slice-perfect
  int depth = 0;
  std::string model;  // wall | path | slice-perfect
};

struct GraphDump {
  GraphMeta meta;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;  // sorted by (src, color)
};

// BFS from the highest-weight element applying every f̃_i; node ids are BFS
// order with colors tried in increasing order, so they are stable.
GraphDump wall_graph(const WallCrystal& W, int depth);
GraphDump path_graph(const PathCrystal& P, int depth);
// The whole crystal of normalized level-l slices; depth is the BFS distance
// from the first slice in canonical order along edges in either direction.
GraphDump slice_graph(const AffineType& t, int l);

std::string to_dot(const GraphDump& g);
std::string to_json(const GraphDump& g, int indent = 2);

}  // namespace affcrys
