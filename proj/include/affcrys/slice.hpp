#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "affcrys/cartan.hpp"

namespace affcrys {

enum class Role : std::uint8_t { Supporting, Covering, Both };
enum class Side : std::uint8_t { None, Back, Front };

// One step of the stacking pattern. The 0/1 base cube of B_n^(1) and
// A_{2n-1}^(2) is a single unit made of two half-depth halves that can be
// placed independently.
struct Unit {
  bool cube = false;
  int color = 0;
  int back = 0, front = 0;  // cube only
  int height = 2;           // half-units
  Role role = Role::Both;
};

class Pattern {
 public:
  Pattern(const AffineType& t, int variant);

  static int variant_count(const AffineType& t);
  // Column k of a wall: A_n^(1) puts color -k mod (n+1) at the bottom,
  // B/A_{2n-1} alternate the cube halves.
  static int column_variant(const AffineType& t, std::int64_t k);

  const AffineType& type() const { return type_; }
  int variant() const { return variant_; }
  int units() const { return static_cast<int>(units_.size()); }
  int period_height() const { return period_h_; }
  const Unit& unit(std::int64_t k) const { return units_[mod(k)]; }
  std::int64_t height(std::int64_t k) const;  // height of the first k units
  int tokens_per_period() const;
  int color_count(int c) const { return per_period_[c]; }  // tokens of color c per period
  std::string variant_name() const;
  bool has_cube() const { return units_[0].cube; }

 private:
  int mod(std::int64_t k) const {
    auto u = static_cast<std::int64_t>(units_.size());
    return static_cast<int>(((k % u) + u) % u);
  }
  AffineType type_;
  int variant_;
  std::vector<Unit> units_;
  std::vector<std::int64_t> prefix_;
  std::vector<int> per_period_;
  int period_h_ = 0;
};

using PatternPtr = std::shared_ptr<const Pattern>;
PatternPtr pattern(const AffineType& t, int variant);

// A layer is a prefix of the pattern stream: n whole units, plus possibly
// one half of the cube sitting at unit n.
struct Layer {
  std::int64_t n = 0;
  Side part = Side::None;
  bool operator==(const Layer&) const = default;
};

bool contains(const Layer& a, const Layer& b);  // a ⊆ b
Layer shifted(const Pattern& p, Layer a, std::int64_t periods);
std::int64_t base_height(const Pattern& p, const Layer& a);  // full-depth part
bool empty(const Layer& a);

// An exposed block (height = its top) or slot (height = its bottom).
struct Exposed {
  int color;
  Role role;
  std::int64_t height;
  Side side;  // which cube half, None otherwise
};
std::vector<Exposed> top_blocks(const Pattern& p, const Layer& a);
std::vector<Exposed> top_slots(const Pattern& p, const Layer& a);
Layer add_block(const Pattern& p, const Layer& a, int color);
Layer remove_block(const Pattern& p, const Layer& a, int color);
std::int64_t color_tokens(const Pattern& p, const Layer& a, int c);

std::string layer_text(const Pattern& p, const Layer& a);
Layer parse_layer(const Pattern& p, const std::string& s);

// Number of layers in a level-l slice: l, or 2l for C_n^(1).
int layer_count(const AffineType& t, int l);

struct Slice {
  PatternPtr pat;
  std::vector<Layer> layers;

  bool operator==(const Slice& o) const {
    return pat->variant() == o.pat->variant() && layers == o.layers;
  }
  bool operator<(const Slice& o) const;
  const AffineType& type() const { return pat->type(); }
};

// Nesting chain plus the per-type parity/top constraints.
bool is_valid(const Slice& c, std::string* why = nullptr);

Slice add_delta(const Slice& c);
Slice sub_delta(const Slice& c);  // throws std::underflow_error
bool can_sub_delta(const Slice& c);
Slice normalize(const Slice& c);
// Representative with every layer non-empty and inside one period.
Slice lift(const Slice& c);
bool equivalent(const Slice& a, const Slice& b);

std::string to_string(const Slice& c);
Slice parse_slice(const AffineType& t, const std::string& s);

// Split forms.
constexpr int kCube = -1;  // the "01" color of the base cube
struct SplitLayer {
  Layer layer;
  int adj = 0;  // -1 lost a top half, +1 received one
};
using SplitView = std::vector<SplitLayer>;

SplitView plain_view(const Slice& c);
std::vector<int> splittable_colors(const AffineType& t);
// One splitting move; returns false when no (block, slot) pair remains.
bool split_one(const Pattern& p, SplitView& v, int color);
SplitView i_split_form(const Slice& c, int color);
SplitView split_form(const Slice& c);

// Kashiwara operators applied to this concrete stacking (used inside walls).
std::optional<Slice> e_physical(int i, const Slice& c);
std::optional<Slice> f_physical(int i, const Slice& c);

// Operators on equivalence classes; results are normalized.
std::optional<Slice> e_slice(int i, const Slice& c);
std::optional<Slice> f_slice(int i, const Slice& c);
int eps_slice(int i, const Slice& c);
int phi_slice(int i, const Slice& c);
ClassicalWeight cwt_slice(const Slice& c);

// Direct generator: every normalized slice of the given level.
std::vector<Slice> all_slices(const AffineType& t, int l, int variant = 0);

}  // namespace affcrys
