#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affcrys/cartan.hpp"
#include "affcrys/crystal.hpp"
#include "affcrys/slice.hpp"

namespace affcrys {

// A level-l Young wall built on Y_λ. cols[k] is column k (k = 0 rightmost) as a
// concrete stacking in the pattern variant of that column; columns k >= size
// are the ground-state columns.
struct Wall {
  std::vector<Slice> cols;
  bool operator==(const Wall& o) const { return cols == o.cols; }
};

// Multiplier applied to the number of added i-blocks when computing k_i.
using HalvingTable = std::vector<Rational>;
HalvingTable default_halving(const AffineType& t);

// A reduced i-signature: ones 1's followed by zeros 0's; e_at / f_at is the
// column under the rightmost surviving 1 / leftmost surviving 0 (-1 if none).
struct Signature {
  int ones = 0, zeros = 0;
  std::int64_t e_at = -1, f_at = -1;
  bool operator==(const Signature&) const = default;
};

class WallCrystal {
 public:
  WallCrystal(const AffineType& t, const ClassicalWeight& lambda);

  const AffineType& type() const { return ground_state_.type; }
  int level() const { return ground_state_.level; }
  const ClassicalWeight& lambda() const { return ground_state_.lambda; }
  const GroundState& ground_state() const { return ground_state_; }

  const Slice& ground(std::int64_t k) const;
  Wall ground_wall() const { return {}; }
  Slice column(const Wall& w, std::int64_t k) const;

  // Drops stored columns that coincide with the ground continuation.
  Wall trim(Wall w) const;

  bool is_proper(const Wall& w, std::string* why = nullptr) const;
  bool has_removable_delta(const Wall& w, std::int64_t k) const;
  bool is_reduced(const Wall& w) const;
  Wall reduce(Wall w) const;

  // (ε̄_i, φ̄_i) of column k.
  std::pair<int, int> column_signature(const Wall& w, std::int64_t k, int i) const;
  Signature wall_signature(const Wall& w, int i) const;

  std::optional<Wall> f(int i, const Wall& w) const;
  std::optional<Wall> e(int i, const Wall& w) const;
  int eps(int i, const Wall& w) const { return wall_signature(w, i).ones; }
  int phi(int i, const Wall& w) const { return wall_signature(w, i).zeros; }
  ClassicalWeight cwt(const Wall& w) const;

  // Added i-blocks relative to Y_λ, before halving.
  std::vector<std::int64_t> added_blocks(const Wall& w) const;
  AffineWeight wt(const Wall& w, const HalvingTable& h) const;
  AffineWeight wt(const Wall& w) const { return wt(w, default_halving(type())); }

  // Wall whose column k is equivalent to classes[k], choosing from left to
  // right the fewest δ's that keep each column proper against the columns
  // already placed to its left. Throws std::domain_error if the result is
  // not reduced proper.
  Wall realize(const std::vector<Slice>& classes) const;

  // "lambda=c0,...,cn; cols=<slice>;<slice>;..." with k = 0 first.
  std::string to_string(const Wall& w) const;
  Wall parse(const std::string& s) const;

  // Number of extra ground columns the signature needed to stabilize.
  static constexpr int kWindow = 2;
  static constexpr int kWindowCap = 8;

 private:
  struct Occ {
    std::vector<std::pair<std::int64_t, std::int64_t>> hw;  // per layer (back, front) half-unit heights
    std::vector<bool> flat;  // integer height with a unit-depth top
    bool ground = false;     // the ground column at its own index
  };
  // Columns 0..m of a wall with their occupancies, grown on demand.
  struct Window {
    std::vector<Slice> cols;
    std::vector<Occ> occ;
  };
  Occ occupancy(const Slice& c, std::int64_t k) const;
  bool fits(const std::vector<Occ>& occ, std::int64_t m, std::int64_t k, const Occ& o, std::string* why) const;
  void extend(Window& v, const Wall& w, std::int64_t m) const;
  Signature wall_signature(const Wall& w, int i, Window& v) const;
  std::vector<Slice> window(const Wall& w, std::int64_t m) const;
  Signature signature_in(const Window& v, std::int64_t m, int i) const;

  GroundState ground_state_;
  std::vector<Slice> ground_;  // k < pre', then periodic
  std::int64_t gpre_ = 0, gperiod_ = 1;
  bool check_flat_ = true;  // false for A_n^(1)
};

}  // namespace affcrys
