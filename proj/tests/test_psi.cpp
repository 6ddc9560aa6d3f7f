#include <doctest.h>

#include <set>

#include "affcrys/crystal.hpp"
#include "affcrys/psi.hpp"

using namespace affcrys;

namespace {
const char* kTypes[] = {"A1:2", "B1:3", "C1:2", "A2:5", "A2:2", "D2:3"};
}

TEST_CASE("bracket of a level-2 B_3 element") {
  const AffineType t = AffineType::parse("B1:3");
  const auto br = bracket_of_coord(t, 2, parse_coord(t, "0,1,0|0|0,0,1"));
  CHECK(to_string(t, br) == "[0,1,0|0|0,0,1]");
  CHECK(parse_bracket(t, "[0,1,0|0|0,0,1]") == br);
}

TEST_CASE("x'_0 absorbs 2 min(x_n, x̄_n) for B") {
  const AffineType t = AffineType::parse("B1:3");
  const auto br = bracket_of_coord(t, 3, parse_coord(t, "0,0,1|1|1,0,0"));
  CHECK(br.u[0] == 3);
  CHECK(br.u[3] == 0);
  CHECK(br.v[3] == 0);
}

TEST_CASE("all-zero coordinates become copies of w_0") {
  // 2(l - k) copies for C, l - k for A_{2n}, with 2k resp. k the coordinate sum.
  const AffineType t = AffineType::parse("C1:2");
  CHECK(bracket_of_coord(t, 2, parse_coord(t, "0,0|0,0")).t0 == 4);
  CHECK(bracket_of_coord(t, 2, parse_coord(t, "0,1|1,0")).t0 == 2);
  const AffineType a = AffineType::parse("A2:2");
  CHECK(bracket_of_coord(a, 2, parse_coord(a, "0|0")).t0 == 2);
}

TEST_CASE("ψ is a bijection intertwining the operators") {
  for (const char* s : kTypes)
    for (int l = 1; l <= 2; ++l) {
      CAPTURE(s);
      CAPTURE(l);
      const AffineType t = AffineType::parse(s);
      const auto B = perfect_crystal(t, l);
      std::set<Slice> image;
      for (int id = 0; id < B->size(); ++id) {
        const CoordElement& b = B->element(id);
        const auto br = bracket_of_coord(t, l, b);
        CHECK(bracket_valid(t, l, br));
        CHECK(coord_of_bracket(t, br) == b);
        const Slice c = psi(t, l, b);
        CHECK(psi_inverse(c, l) == b);
        image.insert(c);
        CHECK(cwt_slice(c) == B->cwt(id));
        for (int i = 0; i <= t.n; ++i) {
          CHECK(eps_slice(i, c) == B->eps(i, id));
          CHECK(phi_slice(i, c) == B->phi(i, id));
          const int fb = B->f(i, id);
          auto fc = f_slice(i, c);
          CHECK(bool(fc) == (fb != PerfectCrystal::kNull));
          if (fc) CHECK(*fc == psi(t, l, B->element(fb)));
        }
      }
      const auto all = all_slices(t, l);
      CHECK(image == std::set<Slice>(all.begin(), all.end()));
    }
}
