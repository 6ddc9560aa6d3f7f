#include "affcrys/coord.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace affcrys {

bool has_x0(const AffineType& t) { return t.family == Family::B1 || t.family == Family::D2; }
bool has_bar(const AffineType& t) { return t.family != Family::A1; }

std::vector<int> flat(const AffineType& t, const CoordElement& b) {
  if (!has_bar(t)) return b.x;
  std::vector<int> v;
  for (int i = 1; i <= t.n; ++i) v.push_back(b.x[i]);
  if (has_x0(t)) v.push_back(b.x[0]);
  for (int i = t.n; i >= 1; --i) v.push_back(b.xb[i]);
  return v;
}

bool canonical_less(const AffineType& t, const CoordElement& a, const CoordElement& b) {
  return flat(t, a) < flat(t, b);
}

std::string to_string(const AffineType& t, const CoordElement& b) {
  auto join = [](auto first, auto last) {
    std::string s;
    for (auto it = first; it != last; ++it) {
      if (it != first) s += ',';
      s += std::to_string(*it);
    }
    return s;
  };
  if (!has_bar(t)) return join(b.x.begin(), b.x.end());
  std::string s = join(b.x.begin() + 1, b.x.end());
  if (has_x0(t)) s += "|" + std::to_string(b.x[0]);
  s += "|" + join(b.xb.rbegin(), b.xb.rend() - 1);
  return s;
}

namespace {

std::vector<int> parse_ints(const std::string& s, const std::string& whole) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int x;
    try {
      x = std::stoi(item, &used);
    } catch (...) {
      throw std::invalid_argument("bad element '" + whole + "'");
    }
    if (used != item.size() || x < 0) throw std::invalid_argument("bad element '" + whole + "'");
    v.push_back(x);
  }
  return v;
}

}  // namespace

CoordElement parse_coord(const AffineType& t, const std::string& s) {
  CoordElement b;
  const int n = t.n;
  if (!has_bar(t)) {
    b.x = parse_ints(s, s);
    if (int(b.x.size()) != n + 1) throw std::invalid_argument("bad element '" + s + "'");
    return b;
  }
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string p;
  while (std::getline(ss, p, '|')) parts.push_back(p);
  if (int(parts.size()) != (has_x0(t) ? 3 : 2)) throw std::invalid_argument("bad element '" + s + "'");
  auto xs = parse_ints(parts.front(), s), xbs = parse_ints(parts.back(), s);
  if (int(xs.size()) != n || int(xbs.size()) != n) throw std::invalid_argument("bad element '" + s + "'");
  b.x.assign(n + 1, 0);
  b.xb.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    b.x[i] = xs[i - 1];
    b.xb[i] = xbs[n - i];
  }
  if (has_x0(t)) {
    auto x0 = parse_ints(parts[1], s);
    if (x0.size() != 1) throw std::invalid_argument("bad element '" + s + "'");
    b.x[0] = x0[0];
  }
  return b;
}

bool is_valid(const AffineType& t, int l, const CoordElement& b) {
  const int n = t.n;
  if (!has_bar(t)) {
    if (int(b.x.size()) != n + 1) return false;
    int s = 0;
    for (int v : b.x) {
      if (v < 0) return false;
      s += v;
    }
    return s == l;
  }
  if (int(b.x.size()) != n + 1 || int(b.xb.size()) != n + 1) return false;
  int s = 0;
  for (int i = 1; i <= n; ++i) {
    if (b.x[i] < 0 || b.xb[i] < 0) return false;
    s += b.x[i] + b.xb[i];
  }
  if (b.xb[0] != 0) return false;
  int x0 = b.x[0];
  if (has_x0(t)) {
    if (x0 != 0 && x0 != 1) return false;
  } else if (x0 != 0) {
    return false;
  }
  switch (t.family) {
    case Family::B1: return x0 + s == l;
    case Family::C1: return s % 2 == 0 && s <= 2 * l;
    case Family::A2odd: return s == l;
    case Family::A2even: return s <= l;
    case Family::D2: return x0 + s <= l;
    default: return false;
  }
}

std::vector<CoordElement> enumerate(const AffineType& t, int l) {
  if (l < 1) throw std::invalid_argument("level must be >= 1");
  const int n = t.n;
  // Generate every tuple in display order with entries bounded by the
  // largest possible coordinate, then keep the valid ones.
  const int len = has_bar(t) ? 2 * n + (has_x0(t) ? 1 : 0) : n + 1;
  const int cap = t.family == Family::C1 ? 2 * l : l;
  std::vector<CoordElement> out;
  std::vector<int> cur(len, 0);
  auto emit = [&] {
    CoordElement b;
    if (!has_bar(t)) {
      b.x = cur;
    } else {
      b.x.assign(n + 1, 0);
      b.xb.assign(n + 1, 0);
      int k = 0;
      for (int i = 1; i <= n; ++i) b.x[i] = cur[k++];
      if (has_x0(t)) b.x[0] = cur[k++];
      for (int i = n; i >= 1; --i) b.xb[i] = cur[k++];
    }
    if (is_valid(t, l, b)) out.push_back(std::move(b));
  };
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == len) {
      emit();
      return;
    }
    for (int v = 0; used + v <= cap; ++v) {
      cur[pos] = v;
      self(self, pos + 1, used + v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, 0);
  return out;  // lexicographic by construction
}

namespace bn {

namespace {
int pos(int v) { return std::max(0, v); }
}  // namespace

int phi(int n, int i, const CoordElement& b) {
  const auto &x = b.x, &y = b.xb;
  if (i == 0) return y[1] + pos(y[2] - x[2]);
  if (i == n) return 2 * x[n] + x[0];
  return x[i] + pos(y[i + 1] - x[i + 1]);
}

int eps(int n, int i, const CoordElement& b) {
  const auto &x = b.x, &y = b.xb;
  if (i == 0) return x[1] + pos(x[2] - y[2]);
  if (i == n) return 2 * y[n] + x[0];
  return y[i] + pos(x[i + 1] - y[i + 1]);
}

std::optional<CoordElement> e(int n, int i, const CoordElement& b) {
  if (eps(n, i, b) == 0) return std::nullopt;
  CoordElement r = b;
  auto &x = r.x, &y = r.xb;
  if (i == 0) {
    if (b.x[2] > b.xb[2]) {
      --x[2];
      ++y[1];
    } else {
      --x[1];
      ++y[2];
    }
  } else if (i == n) {
    if (b.x[0] == 1) {
      ++x[n];
      --x[0];
    } else {
      ++x[0];
      --y[n];
    }
  } else {
    if (b.x[i + 1] > b.xb[i + 1]) {
      ++x[i];
      --x[i + 1];
    } else {
      ++y[i + 1];
      --y[i];
    }
  }
  return r;
}

std::optional<CoordElement> f(int n, int i, const CoordElement& b) {
  if (phi(n, i, b) == 0) return std::nullopt;
  CoordElement r = b;
  auto &x = r.x, &y = r.xb;
  if (i == 0) {
    if (b.x[2] >= b.xb[2]) {
      ++x[2];
      --y[1];
    } else {
      ++x[1];
      --y[2];
    }
  } else if (i == n) {
    if (b.x[0] == 0) {
      --x[n];
      ++x[0];
    } else {
      --x[0];
      ++y[n];
    }
  } else {
    if (b.x[i + 1] >= b.xb[i + 1]) {
      --x[i];
      ++x[i + 1];
    } else {
      --y[i + 1];
      ++y[i];
    }
  }
  return r;
}

}  // namespace bn

}  // namespace affcrys
