#include "affcrys/slice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace affcrys {

namespace {

std::int64_t floordiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool cube_family(const AffineType& t) {
  return t.family == Family::B1 || t.family == Family::A2odd;
}

char family_letter(Family f) {
  switch (f) {
    case Family::A1: return 'A';
    case Family::B1: return 'B';
    case Family::C1: return 'C';
    case Family::A2odd: return 'O';
    case Family::A2even: return 'E';
    case Family::D2: return 'D';
  }
  return '?';
}

}  // namespace

Pattern::Pattern(const AffineType& t, int variant) : type_(t), variant_(variant) {
  if (variant < 0 || variant >= variant_count(t))
    throw std::invalid_argument("pattern variant " + std::to_string(variant) + " out of range for " + t.pretty());
  const int n = t.n;
  auto push = [&](int c, int h, Role r) {
    Unit u;
    u.color = c;
    u.height = h;
    u.role = r;
    units_.push_back(u);
  };
  using R = Role;
  switch (t.family) {
    case Family::A1:
      for (int j = 0; j <= n; ++j) push((variant + j) % (n + 1), 2, R::Both);
      break;
    case Family::B1:
    case Family::A2odd: {
      Unit cube;
      cube.cube = true;
      cube.back = variant == 0 ? 0 : 1;
      cube.front = 1 - cube.back;
      cube.height = 2;
      units_.push_back(cube);
      for (int i = 2; i < n; ++i) push(i, 2, R::Supporting);
      push(n, 1, R::Supporting);
      push(n, 1, R::Covering);
      for (int i = n - 1; i >= 2; --i) push(i, 2, R::Covering);
      break;
    }
    case Family::C1:
    case Family::A2even:
      push(0, 1, R::Covering);
      push(0, 1, R::Supporting);
      for (int i = 1; i < n; ++i) push(i, 2, R::Supporting);
      push(n, 2, R::Both);
      for (int i = n - 1; i >= 1; --i) push(i, 2, R::Covering);
      break;
    case Family::D2:
      push(0, 1, R::Covering);
      push(0, 1, R::Supporting);
      for (int i = 1; i < n; ++i) push(i, 2, R::Supporting);
      push(n, 1, R::Supporting);
      push(n, 1, R::Covering);
      for (int i = n - 1; i >= 1; --i) push(i, 2, R::Covering);
      break;
  }
  prefix_.assign(1, 0);
  per_period_.assign(n + 1, 0);
  for (const auto& u : units_) {
    prefix_.push_back(prefix_.back() + u.height);
    if (u.cube) {
      ++per_period_[u.back];
      ++per_period_[u.front];
    } else {
      ++per_period_[u.color];
    }
  }
  period_h_ = static_cast<int>(prefix_.back());
}

int Pattern::variant_count(const AffineType& t) {
  if (t.family == Family::A1) return t.n + 1;
  if (cube_family(t)) return 2;
  return 1;
}

int Pattern::column_variant(const AffineType& t, std::int64_t k) {
  if (t.family == Family::A1) {
    std::int64_t m = t.n + 1;
    return static_cast<int>(((-k) % m + m) % m);
  }
  if (cube_family(t)) return static_cast<int>(((k % 2) + 2) % 2);
  return 0;
}

std::int64_t Pattern::height(std::int64_t k) const {
  const std::int64_t u = units();
  std::int64_t m = floordiv(k, u);
  return m * period_h_ + prefix_[k - m * u];
}

int Pattern::tokens_per_period() const { return units() + (has_cube() ? 1 : 0); }

std::string Pattern::variant_name() const {
  std::string s(1, family_letter(type_.family));
  if (type_.family == Family::A1) s += std::to_string(variant_);
  if (cube_family(type_)) s += variant_ == 0 ? "01" : "10";
  return s;
}

PatternPtr pattern(const AffineType& t, int variant) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, PatternPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(static_cast<int>(t.family), t.n, variant);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto p = std::make_shared<const Pattern>(t, variant);
  cache.emplace(key, p);
  return p;
}

bool contains(const Layer& a, const Layer& b) {
  if (a.n != b.n) return a.n < b.n;
  return a.part == Side::None || a.part == b.part;
}

Layer shifted(const Pattern& p, Layer a, std::int64_t periods) {
  a.n += periods * p.units();
  return a;
}

std::int64_t base_height(const Pattern& p, const Layer& a) { return p.height(a.n); }

bool empty(const Layer& a) { return a.n == 0 && a.part == Side::None; }

std::vector<Exposed> top_blocks(const Pattern& p, const Layer& a) {
  std::vector<Exposed> out;
  out.reserve(2);
  const auto h = p.height(a.n);
  if (a.part != Side::None) {
    const Unit& u = p.unit(a.n);
    out.push_back({a.part == Side::Back ? u.back : u.front, Role::Both, h + u.height, a.part});
  } else if (a.n > 0) {
    const Unit& u = p.unit(a.n - 1);
    if (u.cube) {
      out.push_back({u.back, Role::Both, h, Side::Back});
      out.push_back({u.front, Role::Both, h, Side::Front});
    } else {
      out.push_back({u.color, u.role, h, Side::None});
    }
  }
  return out;
}

std::vector<Exposed> top_slots(const Pattern& p, const Layer& a) {
  std::vector<Exposed> out;
  out.reserve(2);
  const auto h = p.height(a.n);
  const Unit& u = p.unit(a.n);
  if (a.part == Side::Back) {
    out.push_back({u.front, Role::Both, h, Side::Front});
  } else if (a.part == Side::Front) {
    out.push_back({u.back, Role::Both, h, Side::Back});
  } else if (u.cube) {
    out.push_back({u.back, Role::Both, h, Side::Back});
    out.push_back({u.front, Role::Both, h, Side::Front});
  } else {
    out.push_back({u.color, u.role, h, Side::None});
  }
  return out;
}

Layer add_block(const Pattern& p, const Layer& a, int color) {
  const Unit& u = p.unit(a.n);
  Layer r = a;
  if (u.cube) {
    Side s = u.back == color ? Side::Back : (u.front == color ? Side::Front : Side::None);
    if (s == Side::None || s == a.part) throw std::logic_error("no slot of that color");
    if (a.part == Side::None) {
      r.part = s;
    } else {
      r.n += 1;
      r.part = Side::None;
    }
    return r;
  }
  if (u.color != color || a.part != Side::None) throw std::logic_error("no slot of that color");
  r.n += 1;
  return r;
}

Layer remove_block(const Pattern& p, const Layer& a, int color) {
  Layer r = a;
  if (a.part != Side::None) {
    const Unit& u = p.unit(a.n);
    if ((a.part == Side::Back ? u.back : u.front) != color) throw std::logic_error("no block of that color");
    r.part = Side::None;
    return r;
  }
  if (a.n <= 0) throw std::logic_error("no block to remove");
  const Unit& u = p.unit(a.n - 1);
  r.n -= 1;
  if (u.cube) {
    if (u.back == color) {
      r.part = Side::Front;
    } else if (u.front == color) {
      r.part = Side::Back;
    } else {
      throw std::logic_error("no block of that color");
    }
    return r;
  }
  if (u.color != color) throw std::logic_error("no block of that color");
  return r;
}

std::int64_t color_tokens(const Pattern& p, const Layer& a, int c) {
  const std::int64_t u = p.units();
  std::int64_t m = floordiv(a.n, u), r = a.n - m * u;
  std::int64_t total = m * p.color_count(c);
  for (std::int64_t k = 0; k < r; ++k) {
    const Unit& x = p.unit(k);
    if (x.cube) {
      total += (x.back == c) + (x.front == c);
    } else {
      total += x.color == c;
    }
  }
  if (a.part != Side::None) {
    const Unit& x = p.unit(a.n);
    total += (a.part == Side::Back ? x.back : x.front) == c;
  }
  return total;
}

std::string layer_text(const Pattern& p, const Layer& a) {
  if (!p.has_cube()) return std::to_string(a.n);
  const std::int64_t u = p.units();
  std::int64_t m = floordiv(a.n, u), r = a.n - m * u;
  std::int64_t tok = m * (u + 1) + (r > 0 ? r + 1 : 0);
  if (a.part == Side::Back) return std::to_string(tok + 1);
  if (a.part == Side::Front) return std::to_string(tok + 1) + "f";
  return std::to_string(tok);
}

Layer parse_layer(const Pattern& p, const std::string& s) {
  std::string body = s;
  bool front = !body.empty() && body.back() == 'f';
  if (front) body.pop_back();
  size_t used = 0;
  long long tok;
  try {
    tok = std::stoll(body, &used);
  } catch (...) {
    throw std::invalid_argument("bad layer count '" + s + "'");
  }
  if (used != body.size() || tok < 0) throw std::invalid_argument("bad layer count '" + s + "'");
  Layer a;
  if (!p.has_cube()) {
    if (front) throw std::invalid_argument("bad layer count '" + s + "'");
    a.n = tok;
    return a;
  }
  const std::int64_t u = p.units();
  std::int64_t m = tok / (u + 1), r = tok % (u + 1);
  a.n = m * u + (r >= 2 ? r - 1 : 0);
  if (r == 1) a.part = front ? Side::Front : Side::Back;
  if (front && r != 1) throw std::invalid_argument("bad layer count '" + s + "'");
  return a;
}

int layer_count(const AffineType& t, int l) { return t.family == Family::C1 ? 2 * l : l; }

bool Slice::operator<(const Slice& o) const {
  if (pat->variant() != o.pat->variant()) return pat->variant() < o.pat->variant();
  return std::lexicographical_compare(layers.begin(), layers.end(), o.layers.begin(), o.layers.end(),
                                      [](const Layer& a, const Layer& b) {
                                        if (a.n != b.n) return a.n < b.n;
                                        return a.part < b.part;
                                      });
}

namespace {

// The unit just below the top of a whole-unit layer, if any.
const Unit* top_unit(const Pattern& p, const Layer& a) {
  if (a.part != Side::None || a.n <= 0) return nullptr;
  return &p.unit(a.n - 1);
}

bool tops_half_n(const Pattern& p, const Layer& a, int color, Role r) {
  const Unit* u = top_unit(p, a);
  return u && !u->cube && u->color == color && u->height == 1 && u->role == r;
}

}  // namespace

bool is_valid(const Slice& c, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s + " in " + to_string(c);
    return false;
  };
  const Pattern& p = *c.pat;
  const auto& L = c.layers;
  if (L.empty()) return fail("no layers");
  for (const auto& a : L) {
    if (a.n < 0) return fail("negative count");
    if (a.part != Side::None && !p.unit(a.n).cube) return fail("stray half block");
  }
  for (size_t j = 0; j + 1 < L.size(); ++j)
    if (!contains(L[j], L[j + 1])) return fail("layers not nested");
  if (!contains(L.back(), shifted(p, L.front(), 1))) return fail("last layer exceeds first + delta");
  const AffineType& t = p.type();
  if (t.family == Family::A2odd) {
    int k = 0;
    for (const auto& a : L) k += tops_half_n(p, a, t.n, Role::Supporting);
    if (k % 2) return fail("odd number of n-blocks");
  } else if (t.family == Family::C1) {
    int k = 0;
    for (const auto& a : L) k += tops_half_n(p, a, 0, Role::Covering);
    if (k % 2) return fail("odd number of 0-blocks");
  } else if (t.family == Family::D2) {
    int k = 0;
    for (const auto& a : L) k += tops_half_n(p, a, t.n, Role::Supporting);
    if (k > 1) return fail("more than one supporting n-block on top");
  }
  return true;
}

Slice add_delta(const Slice& c) {
  Slice r = c;
  std::rotate(r.layers.begin(), r.layers.begin() + 1, r.layers.end());
  r.layers.back() = shifted(*c.pat, c.layers.front(), 1);
  return r;
}

bool can_sub_delta(const Slice& c) { return c.layers.back().n >= c.pat->units(); }

Slice sub_delta(const Slice& c) {
  if (!can_sub_delta(c)) throw std::underflow_error("cannot remove a delta from " + to_string(c));
  Slice r = c;
  std::rotate(r.layers.rbegin(), r.layers.rbegin() + 1, r.layers.rend());
  r.layers.front() = shifted(*c.pat, c.layers.back(), -1);
  return r;
}

Slice normalize(const Slice& c) {
  Slice r = c;
  while (can_sub_delta(r)) r = sub_delta(r);
  return r;
}

Slice lift(const Slice& c) {
  Slice r = normalize(c);
  for (size_t k = 0; k < r.layers.size() && empty(r.layers.front()); ++k) r = add_delta(r);
  return r;
}

bool equivalent(const Slice& a, const Slice& b) { return normalize(a) == normalize(b); }

std::string to_string(const Slice& c) {
  std::string s = c.pat->variant_name() + ":";
  for (size_t j = 0; j < c.layers.size(); ++j) {
    if (j) s += ',';
    s += layer_text(*c.pat, c.layers[j]);
  }
  return s;
}

Slice parse_slice(const AffineType& t, const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad slice '" + s + "'");
  std::string vname = s.substr(0, colon);
  PatternPtr pat;
  for (int v = 0; v < Pattern::variant_count(t); ++v) {
    auto p = pattern(t, v);
    if (p->variant_name() == vname) pat = p;
  }
  if (!pat) throw std::invalid_argument("unknown pattern variant '" + vname + "' for " + t.name());
  Slice c{pat, {}};
  std::stringstream ss(s.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) c.layers.push_back(parse_layer(*pat, item));
  std::string why;
  if (!is_valid(c, &why)) throw std::invalid_argument("invalid slice: " + why);
  return c;
}

// ---------------------------------------------------------------- splitting

SplitView plain_view(const Slice& c) {
  SplitView v;
  for (const auto& a : c.layers) v.push_back({a, 0});
  return v;
}

std::vector<int> splittable_colors(const AffineType& t) {
  std::vector<int> out;
  const int n = t.n;
  switch (t.family) {
    case Family::A1: break;
    case Family::B1:
    case Family::A2odd:
      out.push_back(kCube);
      for (int i = 2; i < n; ++i) out.push_back(i);
      break;
    case Family::C1:
    case Family::A2even:
      for (int i = 1; i <= n; ++i) out.push_back(i);
      break;
    case Family::D2:
      for (int i = 1; i < n; ++i) out.push_back(i);
      break;
  }
  return out;
}

namespace {

bool is_sup(Role r) { return r != Role::Covering; }
bool is_cov(Role r) { return r != Role::Supporting; }

struct Cand {
  int j;
  Role role;
  std::int64_t h;
};

// Fore-front layer among the highest.
int high_front(const std::vector<Cand>& v) {
  int best = -1;
  for (int k = 0; k < int(v.size()); ++k)
    if (best < 0 || v[k].h > v[best].h || (v[k].h == v[best].h && v[k].j < v[best].j)) best = k;
  return best;
}

// Very back layer among the lowest.
int low_back(const std::vector<Cand>& v) {
  int best = -1;
  for (int k = 0; k < int(v.size()); ++k)
    if (best < 0 || v[k].h < v[best].h || (v[k].h == v[best].h && v[k].j > v[best].j)) best = k;
  return best;
}

}  // namespace

bool split_one(const Pattern& p, SplitView& v, int color) {
  const bool bt = cube_family(p.type());
  std::vector<Cand> src, dst;
  for (int j = 0; j < int(v.size()); ++j) {
    if (v[j].adj != 0) continue;
    const Layer& a = v[j].layer;
    if (color == kCube) {
      if (a.part == Side::None && a.n > 0 && p.unit(a.n - 1).cube) src.push_back({j, Role::Both, p.height(a.n)});
      if (a.part == Side::None && p.unit(a.n).cube) dst.push_back({j, Role::Both, p.height(a.n)});
      continue;
    }
    for (const auto& b : top_blocks(p, a))
      if (b.color == color && (bt ? is_sup(b.role) : is_cov(b.role))) src.push_back({j, b.role, b.height});
    for (const auto& s : top_slots(p, a))
      if (s.color == color && (bt ? is_cov(s.role) : is_sup(s.role))) dst.push_back({j, s.role, s.height});
  }
  if (src.empty() || dst.empty()) return false;
  const Cand& a = src[high_front(src)];
  const Cand& b = dst[low_back(dst)];
  const int s = a.j, d = b.j;
  if (s == d) throw std::logic_error("split source and target coincide");
  v[s].adj = -1;
  v[d].adj = +1;
  return true;
}

SplitView i_split_form(const Slice& c, int color) {
  SplitView v = plain_view(c);
  while (split_one(*c.pat, v, color)) {
  }
  return v;
}

SplitView split_form(const Slice& c) {
  SplitView v = plain_view(c);
  for (int color : splittable_colors(c.type()))
    while (split_one(*c.pat, v, color)) {
    }
  return v;
}

// ------------------------------------------------------------------- rules

namespace {

enum class RuleSet { Simple, Paired };

struct Plan {
  int split = 0;
  bool has_split = false;
  RuleSet rules = RuleSet::Simple;
  bool swap = false;  // covering <-> supporting
};

Plan plan_for(const AffineType& t, int i) {
  const int n = t.n;
  Plan pl;
  auto split = [&](int c) {
    pl.has_split = true;
    pl.split = c;
  };
  switch (t.family) {
    case Family::A1: break;
    case Family::B1:
    case Family::A2odd:
      if (t.family == Family::A2odd && i == n) {
        split(n - 1);
        pl.rules = RuleSet::Paired;
      } else if (i == 2) {
        split(kCube);
      } else if (i >= 3) {
        split(i - 1);
      }
      break;
    case Family::A2even:
    case Family::C1:
      if (t.family == Family::C1 && i == 0) {
        split(1);
        pl.rules = RuleSet::Paired;
      } else if (i != n) {
        split(i + 1);
      }
      pl.swap = true;
      break;
    case Family::D2:
      // The two half n-blocks pair up like the full n-block of A_{2n}^(2).
      if (i != n) split(i + 1);
      pl.swap = true;
      break;
  }
  return pl;
}

class Engine {
 public:
  Engine(const Pattern& p, SplitView v, int color, bool swap) : p_(p), v_(std::move(v)), c_(color), swap_(swap) {}

  std::vector<Cand> blocks() const {
    std::vector<Cand> out;
    for (int j = 0; j < int(v_.size()); ++j) {
      if (v_[j].adj) continue;
      for (const auto& b : top_blocks(p_, v_[j].layer))
        if (b.color == c_) out.push_back({j, b.role, b.height});
    }
    return out;
  }
  std::vector<Cand> slots() const {
    std::vector<Cand> out;
    for (int j = 0; j < int(v_.size()); ++j) {
      if (v_[j].adj) continue;
      for (const auto& s : top_slots(p_, v_[j].layer))
        if (s.color == c_) out.push_back({j, s.role, s.height});
    }
    return out;
  }
  bool sup(Role r) const { return swap_ ? is_cov(r) : is_sup(r); }
  bool cov(Role r) const { return swap_ ? is_sup(r) : is_cov(r); }

  std::vector<Cand> only(const std::vector<Cand>& v, bool want_sup) const {
    std::vector<Cand> out;
    for (const auto& x : v)
      if (want_sup ? sup(x.role) : cov(x.role)) out.push_back(x);
    return out;
  }

  void remove(int j) { v_[j].layer = remove_block(p_, v_[j].layer, c_); }
  void add(int j) { v_[j].layer = add_block(p_, v_[j].layer, c_); }

  bool simple_e() {
    auto bl = blocks();
    if (bl.empty()) return false;
    auto cv = only(bl, false);
    bool all_sup = cv.size() == 0 || std::all_of(bl.begin(), bl.end(), [&](const Cand& x) { return sup(x.role); });
    remove(all_sup ? bl[high_front(bl)].j : cv[high_front(cv)].j);
    return true;
  }

  bool simple_f() {
    auto sl = slots();
    if (sl.empty()) return false;
    auto sp = only(sl, true);
    bool all_cov = sp.size() == 0 || std::all_of(sl.begin(), sl.end(), [&](const Cand& x) { return cov(x.role); });
    add(all_cov ? sl[low_back(sl)].j : sp[low_back(sp)].j);
    return true;
  }

  // The two-block rules for n-blocks of A_{2n-1}^(2) (and 0-blocks of C_n^(1)).
  bool paired_e() {
    auto bl = blocks();
    if (bl.empty()) return false;
    auto cv = only(bl, false);
    if (cv.empty()) {
      if (bl.size() % 2) throw std::logic_error("odd number of paired blocks");
      take_two(bl, true);
    } else if (cv.size() == 1) {
      remove(cv[0].j);
      auto sp = only(blocks(), true);
      remove(sp[high_front(sp)].j);
    } else {
      take_two(cv, true);
    }
    return true;
  }

  bool paired_f() {
    auto sl = slots();
    if (sl.empty()) return false;
    auto sp = only(sl, true);
    if (sp.empty()) {
      if (sl.size() % 2) throw std::logic_error("odd number of paired slots");
      take_two(sl, false);
    } else if (sp.size() == 1) {
      add(sp[0].j);
      auto cv = only(slots(), false);
      add(cv[low_back(cv)].j);
    } else {
      take_two(sp, false);
    }
    return true;
  }

  const SplitView& view() const { return v_; }

 private:
  // Pick two layers from v: single out the extreme height; if only one
  // layer attains it, pair it with the next layer by position.
  void take_two(const std::vector<Cand>& v, bool removing) {
    std::int64_t ext = v[0].h;
    for (const auto& x : v) ext = removing ? std::max(ext, x.h) : std::min(ext, x.h);
    std::vector<int> chosen, rest;
    for (const auto& x : v) (x.h == ext ? chosen : rest).push_back(x.j);
    std::sort(chosen.begin(), chosen.end());
    std::sort(rest.begin(), rest.end());
    int a, b;
    if (chosen.size() == 1) {
      a = chosen[0];
      if (rest.empty()) throw std::logic_error("paired rule needs two layers");
      b = removing ? rest.front() : rest.back();
    } else if (removing) {
      a = chosen[0];
      b = chosen[1];
    } else {
      a = chosen[chosen.size() - 1];
      b = chosen[chosen.size() - 2];
    }
    if (removing) {
      remove(a);
      remove(b);
    } else {
      add(a);
      add(b);
    }
  }

  const Pattern& p_;
  SplitView v_;
  int c_;
  bool swap_;
};

std::optional<Slice> apply_physical(int i, const Slice& c, bool raise) {
  const AffineType& t = c.type();
  if (i < 0 || i > t.n) throw std::out_of_range("color " + std::to_string(i) + " out of range for " + t.name());
  Plan pl = plan_for(t, i);
  SplitView v = plain_view(c);
  if (pl.has_split)
    while (split_one(*c.pat, v, pl.split)) {
    }
  Engine eng(*c.pat, v, i, pl.swap);
  bool ok;
  if (pl.rules == RuleSet::Paired) {
    ok = raise ? eng.paired_e() : eng.paired_f();
  } else {
    ok = raise ? eng.simple_e() : eng.simple_f();
  }
  if (!ok) return std::nullopt;
  Slice r{c.pat, {}};
  for (const auto& s : eng.view()) r.layers.push_back(s.layer);
  std::string why;
  if (!is_valid(r, &why))
    throw std::logic_error(std::string(raise ? "e_" : "f_") + std::to_string(i) + " on " + to_string(c) +
                           " produced an invalid slice: " + why);
  return r;
}

}  // namespace

std::optional<Slice> e_physical(int i, const Slice& c) { return apply_physical(i, c, true); }
std::optional<Slice> f_physical(int i, const Slice& c) { return apply_physical(i, c, false); }

std::optional<Slice> e_slice(int i, const Slice& c) {
  auto r = e_physical(i, lift(c));
  if (r) r = normalize(*r);
  return r;
}

std::optional<Slice> f_slice(int i, const Slice& c) {
  auto r = f_physical(i, lift(c));
  if (r) r = normalize(*r);
  return r;
}

int eps_slice(int i, const Slice& c) {
  int k = 0;
  std::optional<Slice> cur = c;
  while ((cur = e_slice(i, *cur))) {
    if (++k > 100000) throw std::logic_error("eps_slice does not terminate");
  }
  return k;
}

int phi_slice(int i, const Slice& c) {
  int k = 0;
  std::optional<Slice> cur = c;
  while ((cur = f_slice(i, *cur))) {
    if (++k > 100000) throw std::logic_error("phi_slice does not terminate");
  }
  return k;
}

ClassicalWeight cwt_slice(const Slice& c) {
  ClassicalWeight w(c.type().size());
  for (int i = 0; i <= c.type().n; ++i) w[i] = phi_slice(i, c) - eps_slice(i, c);
  return w;
}

std::vector<Slice> all_slices(const AffineType& t, int l, int variant) {
  auto pat = pattern(t, variant);
  std::vector<Layer> states;
  for (int k = 0; k < pat->units(); ++k) {
    states.push_back({k, Side::None});
    if (pat->unit(k).cube) {
      states.push_back({k, Side::Back});
      states.push_back({k, Side::Front});
    }
  }
  const int L = layer_count(t, l);
  std::vector<Slice> out;
  Slice cur{pat, std::vector<Layer>(L)};
  auto rec = [&](auto&& self, int j) -> void {
    if (j == L) {
      if (is_valid(cur)) out.push_back(cur);
      return;
    }
    for (const auto& s : states) {
      if (j > 0 && !contains(cur.layers[j - 1], s)) continue;
      cur.layers[j] = s;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace affcrys
