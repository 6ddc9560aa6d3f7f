#include <doctest.h>

#include "affcrys/coord.hpp"
#include "affcrys/psi.hpp"
#include "affcrys/slice.hpp"

using namespace affcrys;

namespace {
const char* kTypes[] = {"A1:2", "B1:3", "C1:2", "A2:5", "A2:2", "D2:3"};
}

TEST_CASE("adding δ to a level-1 B_3 slice appends one full cycle") {
  const AffineType t = AffineType::parse("B1:3");
  // {0,1,2} + δ = {0,1,2,3,3,2,0,1,2}; the 0/1 cube counts as two tokens.
  const Slice c = parse_slice(t, "B01:3");
  CHECK(to_string(add_delta(c)) == "B01:9");
  CHECK(normalize(parse_slice(t, "B01:9")) == c);
  CHECK_THROWS_AS(sub_delta(c), std::underflow_error);
}

TEST_CASE("δ rotates the layers of a level-2 slice") {
  const AffineType t = AffineType::parse("B1:3");
  CHECK(to_string(add_delta(parse_slice(t, "B01:1f,2"))) == "B01:2,7f");
  CHECK(to_string(add_delta(parse_slice(t, "B01:2,7"))) == "B01:7,8");
}

TEST_CASE("δ shifts, normalization and lifting") {
  for (const char* s : kTypes)
    for (int l = 1; l <= 2; ++l) {
      CAPTURE(s);
      CAPTURE(l);
      const AffineType t = AffineType::parse(s);
      for (const auto& c : all_slices(t, l)) {
        CHECK(is_valid(c));
        CHECK(normalize(c) == c);
        const Slice d = add_delta(c);
        CHECK(is_valid(d));
        CHECK(sub_delta(d) == c);
        CHECK(normalize(add_delta(d)) == c);
        CHECK(equivalent(lift(c), c));
        CHECK(parse_slice(t, to_string(d)) == d);
      }
    }
}

TEST_CASE("split forms conserve volume and are fixpoints") {
  int nontrivial = 0;
  for (const char* s : {"B1:3", "C1:2", "A2:5", "A2:2", "D2:3"})
    for (int l = 1; l <= 3; ++l) {
      const AffineType t = AffineType::parse(s);
      for (const auto& c : all_slices(t, l)) {
        const SplitView v = split_form(c);
        int sum = 0;
        for (const auto& x : v) {
          CHECK(x.adj >= -1);
          CHECK(x.adj <= 1);
          sum += x.adj;
          nontrivial += x.adj != 0;
        }
        CHECK(sum == 0);
        SplitView w = v;
        for (int color : splittable_colors(t)) CHECK_FALSE(split_one(*c.pat, w, color));
        if (layer_count(t, l) == 1)
          for (const auto& x : v) CHECK(x.adj == 0);
      }
    }
  CHECK(nontrivial > 0);
  CHECK(splittable_colors(AffineType::parse("A1:2")).empty());
}

TEST_CASE("slice operators: e inverts f and ε, φ count iterations") {
  for (const char* s : kTypes)
    for (int l = 1; l <= 2; ++l) {
      CAPTURE(s);
      CAPTURE(l);
      const AffineType t = AffineType::parse(s);
      for (const auto& c : all_slices(t, l))
        for (int i = 0; i <= t.n; ++i) {
          int phi = 0;
          for (auto y = f_slice(i, c); y; y = f_slice(i, *y)) ++phi;
          int eps = 0;
          for (auto y = e_slice(i, c); y; y = e_slice(i, *y)) ++eps;
          CHECK(phi == phi_slice(i, c));
          CHECK(eps == eps_slice(i, c));
          if (auto y = f_slice(i, c)) CHECK(e_slice(i, *y) == c);
          // Operators commute with δ up to equivalence.
          auto a = f_slice(i, add_delta(c));
          auto b = f_slice(i, c);
          CHECK(bool(a) == bool(b));
          if (a && b) CHECK(normalize(*a) == *b);
        }
    }
}

TEST_CASE("f_0 on a level-2 B_3 slice matches the coordinate operator") {
  const AffineType t = AffineType::parse("B1:3");
  const Slice c = psi(t, 2, parse_coord(t, "0,1,0|0|0,0,1"));
  CHECK(f_slice(0, c) == psi(t, 2, parse_coord(t, "0,2,0|0|0,0,0")));
}

TEST_CASE("malformed slices are rejected") {
  const AffineType t = AffineType::parse("B1:3");
  CHECK_THROWS(parse_slice(t, "B01:1,1f"));
  CHECK_THROWS(parse_slice(t, "Q:1"));
  CHECK_THROWS(f_slice(9, parse_slice(t, "B01:3")));
}
