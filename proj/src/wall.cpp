#include "affcrys/wall.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "affcrys/psi.hpp"

namespace affcrys {

namespace {

bool below(const std::pair<std::int64_t, std::int64_t>& a, const std::pair<std::int64_t, std::int64_t>& b) {
  return a.first <= b.first && a.second <= b.second;
}

}  // namespace

HalvingTable default_halving(const AffineType& t) {
  HalvingTable h(t.size(), Rational(1));
  if (t.family == Family::C1) h[0] = Rational(1, 2);
  if (t.family == Family::A2odd) h[t.n] = Rational(1, 2);
  return h;
}

WallCrystal::WallCrystal(const AffineType& t, const ClassicalWeight& lambda)
    : ground_state_(affcrys::ground_state(t, lambda)), check_flat_(t.family != Family::A1) {
  const std::int64_t vc = Pattern::variant_count(t);
  gpre_ = ground_state_.pre;
  gperiod_ = std::lcm<std::int64_t>(ground_state_.period, vc);
  const std::int64_t total = gpre_ + gperiod_;
  for (std::int64_t k = 0; k < total; ++k)
    ground_.push_back(lift(psi(t, level(), ground_state_.element(k), Pattern::column_variant(t, k))));
}

const Slice& WallCrystal::ground(std::int64_t k) const {
  if (k < 0) throw std::out_of_range("negative column index");
  if (k < gpre_) return ground_[k];
  return ground_[gpre_ + (k - gpre_) % gperiod_];
}

Slice WallCrystal::column(const Wall& w, std::int64_t k) const {
  if (k < static_cast<std::int64_t>(w.cols.size())) return w.cols[k];
  return ground(k);
}

Wall WallCrystal::trim(Wall w) const {
  while (!w.cols.empty() && w.cols.back() == ground(static_cast<std::int64_t>(w.cols.size()) - 1)) w.cols.pop_back();
  return w;
}

WallCrystal::Occ WallCrystal::occupancy(const Slice& c, std::int64_t k) const {
  const Pattern& p = *c.pat;
  Occ o;
  o.ground = k >= 0 && c == ground(k);
  // A split cube stays whole in the wall; other blocks split as in the slice.
  SplitView v = plain_view(c);
  for (int color : splittable_colors(c.type()))
    if (color != kCube)
      while (split_one(p, v, color)) {
      }
  for (const auto& s : v) {
    const std::int64_t h = base_height(p, s.layer) + s.adj;
    std::int64_t back = h, front = h;
    if (s.layer.part == Side::Back) back += p.unit(s.layer.n).height;
    if (s.layer.part == Side::Front) front += p.unit(s.layer.n).height;
    o.hw.push_back({back, front});
    o.flat.push_back(s.layer.part == Side::None && h % 2 == 0);
  }
  return o;
}


// occ[0..m-1] are the window columns and occ[m] the ground column after it.
bool WallCrystal::fits(const std::vector<Occ>& occ, std::int64_t m, std::int64_t k, const Occ& o, std::string* why) const {
  const int L = static_cast<int>(o.hw.size());
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  for (int j = 0; j < L; ++j) {
    if (!below(occ[k + 1].hw[j], o.hw[j]))
      return fail("free space right of column " + std::to_string(k + 1) + " in layer " + std::to_string(j + 1));
    if (k > 0 && !below(o.hw[j], occ[k - 1].hw[j]))
      return fail("free space right of column " + std::to_string(k) + " in layer " + std::to_string(j + 1));
    if (check_flat_ && o.flat[j])
      for (std::int64_t q = 0; q < m; ++q)
        if (q != k && !(occ[q].ground && o.ground) && occ[q].flat[j] && occ[q].hw[j].first == o.hw[j].first)
          return fail("columns " + std::to_string(q) + " and " + std::to_string(k) + " have the same flat height in layer " +
                      std::to_string(j + 1));
  }
  return true;
}

std::vector<Slice> WallCrystal::window(const Wall& w, std::int64_t m) const {
  std::vector<Slice> cols;
  for (std::int64_t k = 0; k <= m; ++k) cols.push_back(column(w, k));
  return cols;
}

bool WallCrystal::is_proper(const Wall& w, std::string* why) const {
  const std::int64_t m = std::max<std::int64_t>(w.cols.size(), gpre_) + gperiod_ + 1;
  auto cols = window(w, m);
  std::vector<Occ> occ;
  for (std::int64_t k = 0; k <= m; ++k) {
    std::string r;
    if (!is_valid(cols[k], &r)) {
      if (why) *why = r;
      return false;
    }
    occ.push_back(occupancy(cols[k], k));
  }
  for (std::int64_t k = 0; k < m; ++k)
    if (!fits(occ, static_cast<std::int64_t>(occ.size()) - 1, k, occ[k], why)) return false;
  return true;
}

bool WallCrystal::has_removable_delta(const Wall& w, std::int64_t k) const {
  Slice c = column(w, k);
  if (!can_sub_delta(c)) return false;
  Wall v = w;
  if (static_cast<std::int64_t>(v.cols.size()) <= k)
    for (std::int64_t q = v.cols.size(); q <= k; ++q) v.cols.push_back(ground(q));
  v.cols[k] = sub_delta(c);
  return is_proper(v);
}

bool WallCrystal::is_reduced(const Wall& w) const {
  if (!is_proper(w)) return false;
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(w.cols.size()); ++k)
    if (has_removable_delta(w, k)) return false;
  return true;
}

Wall WallCrystal::reduce(Wall w) const {
  for (bool again = true; again;) {
    again = false;
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(w.cols.size()); ++k)
      if (has_removable_delta(w, k)) {
        w.cols[k] = sub_delta(w.cols[k]);
        again = true;
        break;
      }
  }
  return trim(std::move(w));
}

void WallCrystal::extend(Window& v, const Wall& w, std::int64_t m) const {
  for (std::int64_t q = v.cols.size(); q <= m; ++q) {
    v.cols.push_back(column(w, q));
    v.occ.push_back(occupancy(v.cols.back(), q));
  }
}

Signature WallCrystal::signature_in(const Window& v, std::int64_t m, int i) const {
  const auto& cols = v.cols;
  const auto& occ = v.occ;
  // Symbols left to right, i.e. from column m-1 down to column 0.
  std::vector<std::pair<int, std::int64_t>> sym;
  for (std::int64_t k = m - 1; k >= 0; --k) {
    int eb = 0, fb = 0;
    for (auto c = e_physical(i, cols[k]); c && fits(occ, m, k, occupancy(*c, k), nullptr); c = e_physical(i, *c)) ++eb;
    for (auto c = f_physical(i, cols[k]); c && fits(occ, m, k, occupancy(*c, k), nullptr); c = f_physical(i, *c)) ++fb;
    for (int r = 0; r < eb; ++r) sym.push_back({1, k});
    for (int r = 0; r < fb; ++r) sym.push_back({0, k});
  }
  // Cancel (0,1) pairs.
  std::vector<std::pair<int, std::int64_t>> ones, zeros;
  for (const auto& s : sym) {
    if (s.first == 0) {
      zeros.push_back(s);
    } else if (!zeros.empty()) {
      zeros.pop_back();
    } else {
      ones.push_back(s);
    }
  }
  Signature sig;
  sig.ones = static_cast<int>(ones.size());
  sig.zeros = static_cast<int>(zeros.size());
  if (!ones.empty()) sig.e_at = ones.back().second;
  if (!zeros.empty()) sig.f_at = zeros.front().second;
  return sig;
}

std::pair<int, int> WallCrystal::column_signature(const Wall& w, std::int64_t k, int i) const {
  const std::int64_t m = std::max<std::int64_t>({static_cast<std::int64_t>(w.cols.size()), gpre_, k + 1}) + kWindow;
  auto cols = window(w, m);
  std::vector<Occ> occ;
  for (std::int64_t q = 0; q < static_cast<std::int64_t>(cols.size()); ++q) occ.push_back(occupancy(cols[q], q));
  int eb = 0, fb = 0;
  for (auto c = e_physical(i, cols[k]); c && fits(occ, static_cast<std::int64_t>(occ.size()) - 1, k, occupancy(*c, k), nullptr); c = e_physical(i, *c)) ++eb;
  for (auto c = f_physical(i, cols[k]); c && fits(occ, static_cast<std::int64_t>(occ.size()) - 1, k, occupancy(*c, k), nullptr); c = f_physical(i, *c)) ++fb;
  return {eb, fb};
}

Signature WallCrystal::wall_signature(const Wall& w, int i) const {
  Window v;
  return wall_signature(w, i, v);
}

Signature WallCrystal::wall_signature(const Wall& w, int i, Window& v) const {
  if (i < 0 || i > type().n) throw std::out_of_range("color " + std::to_string(i) + " out of range for " + type().name());
  const std::int64_t base = std::max<std::int64_t>(w.cols.size(), gpre_);
  extend(v, w, base + kWindow);
  Signature prev = signature_in(v, base + kWindow, i);
  for (int extra = kWindow + 1; extra <= kWindowCap; ++extra) {
    extend(v, w, base + extra);
    Signature cur = signature_in(v, base + extra, i);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw std::runtime_error("signature window did not stabilize for color " + std::to_string(i) + " on " + to_string(w));
}

namespace {

std::optional<Wall> act(const WallCrystal& W, const Wall& w, std::int64_t k, int i, bool raise) {
  if (k < 0) return std::nullopt;
  Wall v = w;
  for (std::int64_t q = v.cols.size(); q <= k; ++q) v.cols.push_back(W.ground(q));
  auto c = raise ? e_physical(i, v.cols[k]) : f_physical(i, v.cols[k]);
  if (!c) throw std::logic_error("signature selected a column the operator cannot act on");
  v.cols[k] = *c;
  return W.trim(std::move(v));
}

}  // namespace

std::optional<Wall> WallCrystal::f(int i, const Wall& w) const { return act(*this, w, wall_signature(w, i).f_at, i, false); }

std::optional<Wall> WallCrystal::e(int i, const Wall& w) const { return act(*this, w, wall_signature(w, i).e_at, i, true); }

ClassicalWeight WallCrystal::cwt(const Wall& w) const {
  ClassicalWeight c(type().size());
  Window v;
  for (int i = 0; i <= type().n; ++i) {
    Signature s = wall_signature(w, i, v);
    c[i] = s.zeros - s.ones;
  }
  return c;
}

std::vector<std::int64_t> WallCrystal::added_blocks(const Wall& w) const {
  std::vector<std::int64_t> k(type().size(), 0);
  for (std::int64_t q = 0; q < static_cast<std::int64_t>(w.cols.size()); ++q) {
    const Slice& a = w.cols[q];
    const Slice& g = ground(q);
    for (int i = 0; i <= type().n; ++i) {
      for (const auto& x : a.layers) k[i] += color_tokens(*a.pat, x, i);
      for (const auto& x : g.layers) k[i] -= color_tokens(*g.pat, x, i);
    }
  }
  return k;
}

AffineWeight WallCrystal::wt(const Wall& w, const HalvingTable& h) const {
  auto k = added_blocks(w);
  AffineWeight r{lambda(), Rational(0)};
  for (int i = 0; i <= type().n; ++i) r = r - scale(affine_root(type(), i), Rational(k[i]) * h[i]);
  return r;
}

Wall WallCrystal::realize(const std::vector<Slice>& classes) const {
  const std::int64_t N = classes.size();
  const std::int64_t m = std::max<std::int64_t>(N, gpre_) + kWindow;
  std::vector<Slice> cols = window(Wall{}, m);
  std::vector<Occ> occ;
  for (std::int64_t q = 0; q < static_cast<std::int64_t>(cols.size()); ++q) occ.push_back(occupancy(cols[q], q));
  const int cap = 4 * (static_cast<int>(N) + 4) * layer_count(type(), level());
  for (std::int64_t k = N - 1; k >= 0; --k) {
    if (classes[k].pat->variant() != Pattern::column_variant(type(), k))
      throw std::invalid_argument("column " + std::to_string(k) + " uses the wrong pattern variant");
    Slice c = normalize(classes[k]);
    for (int s = 0;; ++s) {
      if (s > cap) throw std::domain_error("no proper placement for column " + std::to_string(k));
      Occ o = occupancy(c, k);
      bool ok = true;
      for (size_t j = 0; ok && j < o.hw.size(); ++j) {
        if (!below(occ[k + 1].hw[j], o.hw[j])) ok = false;
        if (check_flat_ && o.flat[j])
          for (std::int64_t q = k + 1; ok && q < m; ++q)
            if (!(occ[q].ground && o.ground) && occ[q].flat[j] && occ[q].hw[j].first == o.hw[j].first) ok = false;
      }
      if (ok) {
        cols[k] = c;
        occ[k] = o;
        break;
      }
      c = add_delta(c);
    }
  }
  Wall w;
  w.cols.assign(cols.begin(), cols.begin() + N);
  w = trim(std::move(w));
  std::string why;
  if (!is_proper(w, &why)) throw std::domain_error("realized wall is not proper: " + why);
  if (!is_reduced(w)) throw std::domain_error("realized wall is not reduced");
  return w;
}

std::string WallCrystal::to_string(const Wall& w) const {
  std::string s = "lambda=" + lambda().str() + "; cols=";
  for (size_t k = 0; k < w.cols.size(); ++k) {
    if (k) s += ';';
    s += affcrys::to_string(w.cols[k]);
  }
  return s;
}

Wall WallCrystal::parse(const std::string& s) const {
  const std::string key = "; cols=";
  auto at = s.find(key);
  if (s.rfind("lambda=", 0) != 0 || at == std::string::npos) throw std::invalid_argument("bad wall '" + s + "'");
  ClassicalWeight lam = ClassicalWeight::parse(s.substr(7, at - 7));
  if (!(lam == lambda())) throw std::invalid_argument("wall weight " + lam.str() + " differs from " + lambda().str());
  Wall w;
  std::stringstream ss(s.substr(at + key.size()));
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    Slice c = parse_slice(type(), item);
    const std::int64_t k = w.cols.size();
    if (c.pat->variant() != Pattern::column_variant(type(), k))
      throw std::invalid_argument("column " + std::to_string(k) + " uses the wrong pattern variant");
    if (static_cast<int>(c.layers.size()) != layer_count(type(), level()))
      throw std::invalid_argument("column " + std::to_string(k) + " has the wrong number of layers");
    w.cols.push_back(c);
  }
  return w;
}

}  // namespace affcrys
