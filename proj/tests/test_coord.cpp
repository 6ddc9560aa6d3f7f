#include <doctest.h>

#include "affcrys/coord.hpp"
#include "affcrys/crystal.hpp"
#include "oracle.hpp"

using namespace affcrys;

namespace {

std::string family(const AffineType& t) {
  switch (t.family) {
    case Family::A1: return "A1";
    case Family::B1: return "B1";
    case Family::C1: return "C1";
    case Family::A2odd: return "A2odd";
    case Family::A2even: return "A2even";
    case Family::D2: return "D2";
  }
  return "";
}

CoordElement b3(const std::string& s) { return parse_coord(AffineType::parse("B1:3"), s); }

}  // namespace

TEST_CASE("enumeration agrees with the brute-force constraint scan") {
  for (const char* s : {"A1:2", "B1:3", "C1:2", "A2:5", "A2:2", "D2:3"})
    for (int l = 1; l <= 2; ++l) {
      CAPTURE(s);
      CAPTURE(l);
      const AffineType t = AffineType::parse(s);
      const auto all = enumerate(t, l);
      std::set<std::string> got;
      for (size_t k = 0; k < all.size(); ++k) {
        got.insert(to_string(t, all[k]));
        CHECK(is_valid(t, l, all[k]));
        if (k > 0) CHECK(canonical_less(t, all[k - 1], all[k]));
      }
      CHECK(got.size() == all.size());
      CHECK(got == oracle::coords(family(t), t.n, l));
    }
}

TEST_CASE("brute-force sizes") {
  CHECK(oracle::coords("B1", 3, 1).size() == 7);
  CHECK(oracle::coords("B1", 3, 2).size() == 27);
  CHECK(oracle::coords("C1", 2, 1).size() == 11);
  CHECK(enumerate(AffineType::parse("B1:3"), 1).size() == 7);
  CHECK(enumerate(AffineType::parse("B1:3"), 2).size() == 27);
  CHECK(enumerate(AffineType::parse("C1:2"), 1).size() == 11);
}

TEST_CASE("B_3 operator values") {
  CHECK(bn::f(3, 0, b3("0,1,0|0|0,0,1")) == b3("0,2,0|0|0,0,0"));
  CHECK(bn::e(3, 3, b3("0,0,0|1|0,0,1")) == b3("0,0,1|0|0,0,1"));
  CHECK(bn::eps(3, 3, b3("0,0,0|1|1,0,0")) == 3);
  CHECK(bn::phi(3, 0, b3("0,1,0|0|0,0,1")) == 1);
}

TEST_CASE("B_3 closed forms: e and f are inverse and shift ε, φ by one") {
  for (int l = 1; l <= 3; ++l)
    for (const auto& b : enumerate(AffineType::parse("B1:3"), l))
      for (int i = 0; i <= 3; ++i) {
        auto y = bn::f(3, i, b);
        CHECK(bool(y) == (bn::phi(3, i, b) > 0));
        if (!y) continue;
        CHECK(bn::e(3, i, *y) == b);
        CHECK(bn::eps(3, i, *y) == bn::eps(3, i, b) + 1);
        CHECK(bn::phi(3, i, *y) == bn::phi(3, i, b) - 1);
      }
}

TEST_CASE("coordinate text round trips") {
  for (const char* s : {"A1:2", "B1:3", "C1:2", "A2:5", "A2:2", "D2:3"}) {
    const AffineType t = AffineType::parse(s);
    for (const auto& b : enumerate(t, 2)) CHECK(parse_coord(t, to_string(t, b)) == b);
  }
  CHECK_THROWS(parse_coord(AffineType::parse("B1:3"), "1,2"));
}

TEST_CASE("tabulated crystals satisfy the axioms and are perfect") {
  for (const char* s : {"A1:2", "B1:3", "C1:2", "A2:5", "A2:2", "D2:3"})
    for (int l = 1; l <= 2; ++l) {
      CAPTURE(s);
      CAPTURE(l);
      const AffineType t = AffineType::parse(s);
      CHECK(check_axioms(*perfect_crystal(t, l)).empty());
      CHECK(check_perfect(t, l).ok());
    }
  CHECK(check_axioms(*perfect_crystal(AffineType::parse("B1:3"), 3)).empty());
  CHECK(check_perfect(AffineType::parse("B1:3"), 3).ok());
}

TEST_CASE("extremal elements") {
  const AffineType t = AffineType::parse("B1:3");
  const auto B = perfect_crystal(t, 2);
  for (const auto& lam : dominant_weights(t, 2)) {
    const int b = B->b_lower(lam);
    CHECK(B->phi_weight(b) == lam);
    CHECK(level(t, B->eps_weight(b)) == 2);
    CHECK(B->eps_weight(B->b_upper(lam)) == lam);
  }
}

TEST_CASE("ground-state sequence chains ε(b_k) = φ(b_{k+1})") {
  const AffineType t = AffineType::parse("C1:2");
  for (const auto& lam : dominant_weights(t, 2)) {
    const GroundState g = ground_state(t, lam);
    CHECK(g.crystal->phi_weight(g.at(0)) == lam);
    for (int k = 0; k < 8; ++k) CHECK(g.crystal->eps_weight(g.at(k)) == g.crystal->phi_weight(g.at(k + 1)));
  }
  CHECK_THROWS_AS(ground_state(t, ClassicalWeight({-1, 1, 1})), std::invalid_argument);
}
