#pragma once

#include <string>
#include <vector>

#include "affcrys/coord.hpp"
#include "affcrys/slice.hpp"

namespace affcrys {

// Multiplicities of the building blocks pasted together by ψ.
// A_n^(1):          u[i] for i = 0..n
// C/A_{2n}/D:       t0 = #w_0, u[1..n], v[1..n], and u[0] = #u_0 for D
// B/A_{2n-1}:       u[1..n], v[1..n], and u[0] = x'_0 (#u_0, resp. #w_0)
struct Bracket {
  int t0 = 0;
  std::vector<int> u, v;
  bool operator==(const Bracket&) const = default;
};

Bracket bracket_of_coord(const AffineType& t, int l, const CoordElement& b);
CoordElement coord_of_bracket(const AffineType& t, const Bracket& br);
bool bracket_valid(const AffineType& t, int l, const Bracket& br, std::string* why = nullptr);

std::string to_string(const AffineType& t, const Bracket& br);
Bracket parse_bracket(const AffineType& t, const std::string& s);

Slice slice_of_bracket(const AffineType& t, int l, const Bracket& br, int variant = 0);
Bracket bracket_of_slice(const Slice& c, int l);

// ψ and its inverse; the slice is returned normalized.
Slice psi(const AffineType& t, int l, const CoordElement& b, int variant = 0);
CoordElement psi_inverse(const Slice& c, int l);

}  // namespace affcrys
