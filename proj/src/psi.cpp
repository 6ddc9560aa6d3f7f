#include "affcrys/psi.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace affcrys {

namespace {

int pos(int v) { return std::max(0, v); }

bool cube_family(const AffineType& t) { return t.family == Family::B1 || t.family == Family::A2odd; }

// Which multiplicity a building block feeds.
struct Slot {
  char kind;  // 't' (w_0 of C/A_{2n}/D), 'u', 'v'
  int index;
};

struct Block {
  Slot slot;
  Layer layer;  // representative inside (0, period]
};

std::vector<Block> building_blocks(const Pattern& p) {
  const AffineType& t = p.type();
  const int n = t.n;
  std::vector<Block> out;
  auto put = [&](char k, int i, std::int64_t units, Side s = Side::None) {
    out.push_back({{k, i}, {units, s}});
  };
  switch (t.family) {
    case Family::A1:
      for (int i = 0; i <= n; ++i) put('u', i, ((i - p.variant()) % (n + 1) + n + 1) % (n + 1) + 1);
      break;
    case Family::B1:
    case Family::A2odd: {
      const Unit& cube = p.unit(0);
      put('u', 1, 0, cube.back == 0 ? Side::Back : Side::Front);
      put('v', 1, 0, cube.back == 1 ? Side::Back : Side::Front);
      for (int i = 2; i <= n; ++i) put('u', i, i - 1);
      put('u', 0, n);
      put('v', n, n + 1);
      for (int i = 2; i < n; ++i) put('v', i, 2 * n - i + 1);
      break;
    }
    case Family::C1:
    case Family::A2even:
      put('t', 0, 1);
      put('u', 1, 2);
      for (int i = 2; i <= n; ++i) put('u', i, i + 1);
      put('v', n, n + 2);
      for (int i = 1; i < n; ++i) put('v', i, 2 * n + 2 - i);
      break;
    case Family::D2:
      put('t', 0, 1);
      put('u', 1, 2);
      for (int i = 2; i <= n; ++i) put('u', i, i + 1);
      put('u', 0, n + 2);
      put('v', n, n + 3);
      for (int i = 1; i < n; ++i) put('v', i, 2 * n + 3 - i);
      break;
  }
  return out;
}

int& entry(Bracket& br, const Slot& s) {
  if (s.kind == 't') return br.t0;
  return s.kind == 'u' ? br.u[s.index] : br.v[s.index];
}

Bracket blank(const AffineType& t) {
  Bracket br;
  br.u.assign(t.n + 1, 0);
  br.v.assign(t.n + 1, 0);
  return br;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s;
}

std::vector<int> ints(const std::string& s, const std::string& whole) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int x;
    try {
      x = std::stoi(item, &used);
    } catch (...) {
      throw std::invalid_argument("bad bracket '" + whole + "'");
    }
    if (used != item.size() || x < 0) throw std::invalid_argument("bad bracket '" + whole + "'");
    v.push_back(x);
  }
  return v;
}

}  // namespace

Bracket bracket_of_coord(const AffineType& t, int l, const CoordElement& b) {
  const int n = t.n;
  Bracket br = blank(t);
  if (t.family == Family::A1) {
    for (int i = 0; i <= n; ++i) br.u[i] = b.x[i];
    return br;
  }
  if (cube_family(t)) {
    const auto &x = b.x, &y = b.xb;
    for (int i = 1; i <= n; ++i) {
      int carry = i > 1 ? std::min(x[i - 1], y[i - 1]) : 0;
      br.u[i] = pos(x[i] - y[i]) + carry;
      br.v[i] = pos(y[i] - x[i]) + carry;
    }
    br.u[0] = (t.family == Family::B1 ? x[0] : 0) + 2 * std::min(x[n], y[n]);
    return br;
  }
  int s = 0;
  for (int i = 1; i <= n; ++i) {
    br.u[i] = b.x[i];
    br.v[i] = b.xb[i];
    s += b.x[i] + b.xb[i];
  }
  if (t.family == Family::C1) {
    br.t0 = 2 * l - s;
  } else if (t.family == Family::A2even) {
    br.t0 = l - s;
  } else {
    br.u[0] = b.x[0];
    br.t0 = l - s - b.x[0];
  }
  return br;
}

CoordElement coord_of_bracket(const AffineType& t, const Bracket& br) {
  const int n = t.n;
  CoordElement b;
  if (t.family == Family::A1) {
    b.x = br.u;
    return b;
  }
  b.x.assign(n + 1, 0);
  b.xb.assign(n + 1, 0);
  if (cube_family(t)) {
    const auto &y = br.u, &yb = br.v;
    for (int i = 1; i <= n; ++i) {
      int carry = i < n ? std::min(y[i + 1], yb[i + 1]) : br.u[0] / 2;
      b.x[i] = pos(y[i] - yb[i]) + carry;
      b.xb[i] = pos(yb[i] - y[i]) + carry;
    }
    if (t.family == Family::B1) b.x[0] = br.u[0] % 2;
    return b;
  }
  for (int i = 1; i <= n; ++i) {
    b.x[i] = br.u[i];
    b.xb[i] = br.v[i];
  }
  if (t.family == Family::D2) b.x[0] = br.u[0];
  return b;
}

bool bracket_valid(const AffineType& t, int l, const Bracket& br, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (int(br.u.size()) != t.n + 1 || int(br.v.size()) != t.n + 1) return fail("wrong length");
  int total = br.t0;
  if (br.t0 < 0) return fail("negative entry");
  for (int i = 0; i <= t.n; ++i) {
    if (br.u[i] < 0 || br.v[i] < 0) return fail("negative entry");
    total += br.u[i] + br.v[i];
  }
  if (total != layer_count(t, l)) return fail("entries do not add up to the number of layers");
  if (cube_family(t) && br.u[1] * br.v[1] != 0) return fail("y_1 and ybar_1 both non-zero");
  if (t.family == Family::A2odd && br.u[0] % 2) return fail("odd x'_0");
  if (t.family == Family::C1 && br.t0 % 2) return fail("odd t_0");
  if (t.family == Family::D2 && br.u[0] > 1) return fail("x_0 > 1");
  CoordElement b = coord_of_bracket(t, br);
  if (!is_valid(t, l, b)) return fail("no coordinate element with this label");
  if (!(bracket_of_coord(t, l, b) == br)) return fail("label is not in the image");
  return true;
}

std::string to_string(const AffineType& t, const Bracket& br) {
  const int n = t.n;
  if (t.family == Family::A1) return "[" + join(br.u) + "]";
  std::vector<int> xs(br.u.begin() + 1, br.u.end()), xbs(br.v.rbegin(), br.v.rend() - 1);
  std::string s = "[";
  if (!cube_family(t)) s += std::to_string(br.t0) + "|";
  s += join(xs);
  if (cube_family(t) || t.family == Family::D2) s += "|" + std::to_string(br.u[0]);
  s += "|" + join(xbs) + "]";
  (void)n;
  return s;
}

Bracket parse_bracket(const AffineType& t, const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("bad bracket '" + s + "'");
  std::string body = s.substr(1, s.size() - 2);
  std::vector<std::string> parts;
  std::stringstream ss(body);
  std::string p;
  while (std::getline(ss, p, '|')) parts.push_back(p);
  const int n = t.n;
  Bracket br = blank(t);
  auto need = [&](size_t k) {
    if (parts.size() != k) throw std::invalid_argument("bad bracket '" + s + "'");
  };
  auto fill = [&](const std::string& xs, const std::string& xbs) {
    auto a = ints(xs, s), b = ints(xbs, s);
    if (int(a.size()) != n || int(b.size()) != n) throw std::invalid_argument("bad bracket '" + s + "'");
    for (int i = 1; i <= n; ++i) {
      br.u[i] = a[i - 1];
      br.v[i] = b[n - i];
    }
  };
  auto single = [&](const std::string& x) {
    auto a = ints(x, s);
    if (a.size() != 1) throw std::invalid_argument("bad bracket '" + s + "'");
    return a[0];
  };
  switch (t.family) {
    case Family::A1: {
      need(1);
      br.u = ints(parts[0], s);
      if (int(br.u.size()) != n + 1) throw std::invalid_argument("bad bracket '" + s + "'");
      break;
    }
    case Family::B1:
    case Family::A2odd:
      need(3);
      fill(parts[0], parts[2]);
      br.u[0] = single(parts[1]);
      break;
    case Family::C1:
    case Family::A2even:
      need(3);
      br.t0 = single(parts[0]);
      fill(parts[1], parts[2]);
      break;
    case Family::D2:
      need(4);
      br.t0 = single(parts[0]);
      fill(parts[1], parts[3]);
      br.u[0] = single(parts[2]);
      break;
  }
  return br;
}

Slice slice_of_bracket(const AffineType& t, int l, const Bracket& br, int variant) {
  std::string why;
  if (!bracket_valid(t, l, br, &why)) throw std::invalid_argument("invalid label " + to_string(t, br) + ": " + why);
  auto pat = pattern(t, variant);
  Bracket want = br;
  Slice c{pat, {}};
  for (const auto& blk : building_blocks(*pat)) {
    int& k = entry(want, blk.slot);
    for (; k > 0; --k) c.layers.push_back(blk.layer);
  }
  std::sort(c.layers.begin(), c.layers.end(), [](const Layer& a, const Layer& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.part < b.part;
  });
  if (!is_valid(c, &why)) throw std::logic_error("pasting failed: " + why);
  return normalize(c);
}

Bracket bracket_of_slice(const Slice& c, int l) {
  const Pattern& p = *c.pat;
  const AffineType& t = p.type();
  if (int(c.layers.size()) != layer_count(t, l)) throw std::invalid_argument("slice has the wrong number of layers");
  std::map<std::pair<std::int64_t, int>, Slot> table;
  const std::int64_t U = p.units();
  auto key = [&](const Layer& a) { return std::make_pair(((a.n % U) + U) % U, static_cast<int>(a.part)); };
  for (const auto& blk : building_blocks(p)) table.emplace(key(blk.layer), blk.slot);
  Bracket br = blank(t);
  for (const auto& a : c.layers) {
    auto it = table.find(key(a));
    if (it == table.end()) throw std::logic_error("layer state outside the image of psi in " + to_string(c));
    ++entry(br, it->second);
  }
  return br;
}

Slice psi(const AffineType& t, int l, const CoordElement& b, int variant) {
  if (!is_valid(t, l, b)) throw std::invalid_argument("invalid element " + to_string(t, b));
  return slice_of_bracket(t, l, bracket_of_coord(t, l, b), variant);
}

CoordElement psi_inverse(const Slice& c, int l) {
  const AffineType& t = c.type();
  Bracket br = bracket_of_slice(normalize(c), l);
  std::string why;
  if (!bracket_valid(t, l, br, &why)) throw std::logic_error("slice " + to_string(c) + " not in the image: " + why);
  return coord_of_bracket(t, br);
}

}  // namespace affcrys
