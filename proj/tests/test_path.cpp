#include <doctest.h>

#include "affcrys/path.hpp"

using namespace affcrys;

TEST_CASE("the ground-state path is highest weight") {
  for (const char* s : {"A1:2", "B1:3", "C1:2", "A2:5", "A2:2", "D2:3"})
    for (int l = 1; l <= 2; ++l) {
      const AffineType t = AffineType::parse(s);
      for (const auto& lam : dominant_weights(t, l)) {
        CAPTURE(s);
        CAPTURE(lam.str());
        const PathCrystal P(t, lam);
        const Path p = P.ground_path();
        CHECK(P.cwt(p) == lam);
        for (int i = 0; i <= t.n; ++i) {
          CHECK(P.eps(i, p) == 0);
          CHECK(P.phi(i, p) == lam[i]);
        }
      }
    }
}

TEST_CASE("path operators act on one factor and invert each other") {
  const AffineType t = AffineType::parse("B1:3");
  const PathCrystal P(t, ClassicalWeight({1, 1, 0, 0}));
  std::vector<Path> layer{P.ground_path()};
  for (int d = 0; d < 4; ++d) {
    std::vector<Path> next;
    for (const auto& p : layer)
      for (int i = 0; i <= t.n; ++i) {
        auto q = P.f(i, p);
        if (!q) continue;
        CHECK(P.e(i, *q) == p);
        CHECK(P.parse(P.to_string(*q)) == *q);
        CHECK(P.phi(i, *q) == P.phi(i, p) - 1);
        CHECK(*q->wt == *p.wt - affine_root(t, i));
        CHECK(q->wt->lambda == P.cwt(*q));
        int differ = 0;
        for (std::int64_t k = 0; k < 12; ++k) differ += P.factor(p, k) != P.factor(*q, k);
        CHECK(differ == 1);
        next.push_back(*q);
      }
    layer = std::move(next);
  }
  CHECK_FALSE(layer.empty());
}
