#include <doctest.h>

#include <json.hpp>

#include "affcrys/graph.hpp"

using namespace affcrys;

TEST_CASE("top of the wall graph of 3Λ_0 for B_3") {
  const WallCrystal W(AffineType::parse("B1:3"), ClassicalWeight({3, 0, 0, 0}));
  const GraphDump g = wall_graph(W, 2);
  int depth1 = 0;
  for (const auto& n : g.nodes) depth1 += n.depth == 1;
  CHECK(depth1 == 1);
  int out0 = 0;
  for (const auto& e : g.edges)
    if (e.src == 0) {
      ++out0;
      CHECK(e.color == 0);
    }
  CHECK(out0 == 1);
}

TEST_CASE("depth 0 is a single node") {
  const PathCrystal P(AffineType::parse("C1:2"), ClassicalWeight({1, 1, 0}));
  const GraphDump g = path_graph(P, 0);
  CHECK(g.nodes.size() == 1);
  CHECK(g.edges.empty());
}

TEST_CASE("JSON and DOT dumps") {
  const AffineType t = AffineType::parse("C1:2");
  const GraphDump g = slice_graph(t, 1);
  CHECK(g.nodes.size() == 11);
  for (const auto& n : g.nodes) CHECK(n.depth >= 0);
  const auto j = nlohmann::json::parse(to_json(g));
  CHECK(j["meta"]["model"] == "slice-perfect");
  CHECK(j["nodes"].size() == g.nodes.size());
  CHECK(j["edges"].size() == g.edges.size());
  const std::string dot = to_dot(g);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("wall and path graphs have equal shape for C_2, Λ_0 + Λ_1") {
  const AffineType t = AffineType::parse("C1:2");
  const ClassicalWeight lam({1, 1, 0});
  const GraphDump a = wall_graph(WallCrystal(t, lam), 6);
  const GraphDump b = path_graph(PathCrystal(t, lam), 6);
  REQUIRE(a.nodes.size() == b.nodes.size());
  REQUIRE(a.edges.size() == b.edges.size());
  // BFS ids are canonical, so an isomorphism must be the identity on ids.
  for (size_t k = 0; k < a.nodes.size(); ++k) {
    CHECK(a.nodes[k].weight == b.nodes[k].weight);
    CHECK(a.nodes[k].depth == b.nodes[k].depth);
  }
  for (size_t k = 0; k < a.edges.size(); ++k) {
    CHECK(a.edges[k].src == b.edges[k].src);
    CHECK(a.edges[k].dst == b.edges[k].dst);
    CHECK(a.edges[k].color == b.edges[k].color);
  }
}
