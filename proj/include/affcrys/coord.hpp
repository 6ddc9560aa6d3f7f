#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affcrys/cartan.hpp"

namespace affcrys {

// For A_n^(1) only x is used, x[i] = x_i for i = 0..n.
// Otherwise x[i] = x_i, xb[i] = x̄_i for i = 1..n, and x[0] is the 0/1 flag
// x_0 (B_n^(1), D_{n+1}^(2); always 0 elsewhere). xb[0] is unused.
struct CoordElement {
  std::vector<int> x;
  std::vector<int> xb;

  bool operator==(const CoordElement&) const = default;
};

bool has_x0(const AffineType& t);
bool has_bar(const AffineType& t);

// The tuple in display order; also the canonical sort key.
std::vector<int> flat(const AffineType& t, const CoordElement& b);
bool canonical_less(const AffineType& t, const CoordElement& a, const CoordElement& b);

std::string to_string(const AffineType& t, const CoordElement& b);
CoordElement parse_coord(const AffineType& t, const std::string& s);

bool is_valid(const AffineType& t, int l, const CoordElement& b);

// Canonical order.
std::vector<CoordElement> enumerate(const AffineType& t, int l);

// Closed forms, B_n^(1) only.
namespace bn {
int eps(int n, int i, const CoordElement& b);
int phi(int n, int i, const CoordElement& b);
std::optional<CoordElement> e(int n, int i, const CoordElement& b);
std::optional<CoordElement> f(int n, int i, const CoordElement& b);
}  // namespace bn

}  // namespace affcrys
