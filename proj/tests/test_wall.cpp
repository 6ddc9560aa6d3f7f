#include <doctest.h>

#include <set>

#include "affcrys/path.hpp"
#include "affcrys/wall.hpp"

using namespace affcrys;

namespace {

struct Point {
  const char* type;
  int level;
};
const Point kGrid[] = {{"A1:2", 1}, {"A1:2", 2}, {"B1:3", 1}, {"B1:3", 2}, {"B1:3", 3}, {"C1:2", 1}, {"C1:2", 2},
                       {"A2:5", 1}, {"A2:5", 2}, {"A2:2", 1}, {"A2:2", 2}, {"D2:3", 1}, {"D2:3", 2}};

// Walls within `depth` f-steps of Y_λ.
std::vector<Wall> reachable(const WallCrystal& W, int depth) {
  std::vector<Wall> out{W.ground_wall()};
  std::set<std::string> seen{W.to_string(W.ground_wall())};
  size_t begin = 0;
  for (int d = 0; d < depth; ++d) {
    const size_t end = out.size();
    for (size_t u = begin; u < end; ++u)
      for (int i = 0; i <= W.type().n; ++i)
        if (auto y = W.f(i, out[u]); y && seen.insert(W.to_string(*y)).second) out.push_back(*y);
    begin = end;
  }
  return out;
}

}  // namespace

TEST_CASE("ground-state walls are reduced proper") {
  for (const auto& g : kGrid) {
    const AffineType t = AffineType::parse(g.type);
    for (const auto& lam : dominant_weights(t, g.level)) {
      CAPTURE(t.name());
      CAPTURE(lam.str());
      const WallCrystal W(t, lam);
      std::string why;
      CHECK_MESSAGE(W.is_proper(W.ground_wall(), &why), why);
      CHECK(W.is_reduced(W.ground_wall()));
      CHECK(W.wt(W.ground_wall()).lambda == lam);
    }
  }
}

TEST_CASE("ground-state walls are highest weight of weight λ, except a known set") {
  // Mixed-weight ground walls whose layers are forced into flat full-depth
  // tops lose arrows; this pins the exact set.
  std::set<std::string> bad;
  for (const auto& g : kGrid) {
    const AffineType t = AffineType::parse(g.type);
    for (const auto& lam : dominant_weights(t, g.level)) {
      const WallCrystal W(t, lam);
      for (int i = 0; i <= t.n; ++i) {
        CHECK(W.eps(i, W.ground_wall()) == 0);
        if (W.phi(i, W.ground_wall()) != lam[i]) bad.insert(t.name() + " " + lam.str());
      }
      if (W.cwt(W.ground_wall()) != lam) CHECK(bad.count(t.name() + " " + lam.str()));
    }
  }
  const std::set<std::string> known{"B1:3 1,1,0,0", "B1:3 1,1,0,1", "B1:3 1,2,0,0", "B1:3 2,1,0,0",
                                    "A2:5 1,1,0,0", "D2:3 0,0,2"};
  CHECK(bad == known);
}

TEST_CASE("the first arrow out of Y_{3Λ_0} for B_3 is f_0 on column 0") {
  const AffineType t = AffineType::parse("B1:3");
  const WallCrystal W(t, ClassicalWeight({3, 0, 0, 0}));
  const Wall y = W.ground_wall();
  CHECK(W.wall_signature(y, 0).f_at == 0);
  for (int i = 1; i <= 3; ++i) CHECK_FALSE(W.f(i, y));
  const auto w = W.f(0, y);
  REQUIRE(w);
  CHECK(w->cols.size() == 1);
  CHECK(W.added_blocks(*w) == std::vector<std::int64_t>{1, 0, 0, 0});
  // Every layer of the ground column is a half-depth stub.
  for (const auto& a : W.ground(0).layers) CHECK(a.part != Side::None);
}

TEST_CASE("wall operators: inverses, weights, signatures, text") {
  for (const char* s : {"C1:2", "A1:2", "A2:2"}) {
    const AffineType t = AffineType::parse(s);
    for (const auto& lam : dominant_weights(t, 2)) {
      CAPTURE(s);
      CAPTURE(lam.str());
      const WallCrystal W(t, lam);
      for (const auto& w : reachable(W, 4)) {
        CHECK(W.is_proper(w));
        CHECK(W.is_reduced(w));
        CHECK(W.parse(W.to_string(w)) == w);
        CHECK(W.trim(w) == w);
        std::vector<Slice> classes(w.cols.begin(), w.cols.end());
        CHECK(W.realize(classes) == w);
        for (int i = 0; i <= t.n; ++i) {
          const Signature sg = W.wall_signature(w, i);
          if (sg.f_at >= 0) CHECK(W.column_signature(w, sg.f_at, i).second > 0);
          if (auto y = W.f(i, w)) {
            CHECK(W.e(i, *y) == w);
            CHECK(W.wt(*y) == W.wt(w) - affine_root(t, i));
            CHECK(W.phi(i, *y) == sg.zeros - 1);
          } else {
            CHECK(sg.zeros == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("Φ sends Y_λ to the ground-state path and commutes with f") {
  const AffineType t = AffineType::parse("C1:2");
  const ClassicalWeight lam({1, 1, 0});
  const WallCrystal W(t, lam);
  const PathCrystal P(t, lam);
  CHECK(phi_map(W, P, W.ground_wall()) == P.ground_path());
  for (const auto& w : reachable(W, 5)) {
    const Path p = phi_map(W, P, w);
    CHECK(phi_map_inverse(W, P, p) == w);
    CHECK(P.cwt(p) == W.cwt(w));
    for (int i = 0; i <= t.n; ++i) {
      auto fw = W.f(i, w);
      auto fp = P.f(i, p);
      REQUIRE(bool(fw) == bool(fp));
      if (fw) CHECK(phi_map(W, P, *fw) == *fp);
    }
  }
}

TEST_CASE("halving tables") {
  CHECK(default_halving(AffineType::parse("C1:2"))[0] == Rational(1, 2));
  CHECK(default_halving(AffineType::parse("A2:5"))[3] == Rational(1, 2));
  for (const auto& h : default_halving(AffineType::parse("D2:3"))) CHECK(h == Rational(1));
}

TEST_CASE("walls reject bad input") {
  const WallCrystal W(AffineType::parse("B1:3"), ClassicalWeight({3, 0, 0, 0}));
  CHECK_THROWS(W.parse("lambda=3,0,0,0; cols=B10:1"));
  CHECK_THROWS(W.parse("nonsense"));
  CHECK_THROWS_AS(WallCrystal(AffineType::parse("B1:3"), ClassicalWeight({1, -1, 0, 0})), std::invalid_argument);
  CHECK_THROWS(W.f(7, W.ground_wall()));
}
