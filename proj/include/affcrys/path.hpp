#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affcrys/crystal.hpp"
#include "affcrys/wall.hpp"

namespace affcrys {

// A λ-path: ids[k] is p(k) as an element id of the perfect crystal; p(k) = b_k
// for k >= ids.size(). The affine weight is carried along when known.
struct Path {
  std::vector<int> ids;
  std::optional<AffineWeight> wt;
  bool operator==(const Path& o) const { return ids == o.ids; }
};

class PathCrystal {
 public:
  PathCrystal(const AffineType& t, const ClassicalWeight& lambda);

  const AffineType& type() const { return gs_.type; }
  int level() const { return gs_.level; }
  const ClassicalWeight& lambda() const { return gs_.lambda; }
  const GroundState& ground_state() const { return gs_; }
  const PerfectCrystal& crystal() const { return *gs_.crystal; }

  Path ground_path() const { return {{}, AffineWeight{lambda(), Rational(0)}}; }
  int factor(const Path& p, std::int64_t k) const;
  Path trim(Path p) const;

  // The tail beyond the stored factors reduces to 0^{φ_i(b_N)} on factor N.
  Signature signature(const Path& p, int i) const;
  std::optional<Path> f(int i, const Path& p) const;
  std::optional<Path> e(int i, const Path& p) const;
  int eps(int i, const Path& p) const { return signature(p, i).ones; }
  int phi(int i, const Path& p) const { return signature(p, i).zeros; }
  ClassicalWeight cwt(const Path& p) const;

  // "lambda=c0,...,cn; N=k; p=<elem>;<elem>;..." with p(0) first.
  std::string to_string(const Path& p) const;
  Path parse(const std::string& s) const;

 private:
  GroundState gs_;
};

// Φ and its inverse.
Path phi_map(const WallCrystal& W, const PathCrystal& P, const Wall& w);
Wall phi_map_inverse(const WallCrystal& W, const PathCrystal& P, const Path& p);

}  // namespace affcrys
