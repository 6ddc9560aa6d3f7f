#pragma once

// Brute-force oracles that do not use the library: exhaustive tuple scans
// filtered by the defining constraints, and plain matrix arithmetic.

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::string join(const std::vector<int>& v, size_t from, size_t to) {
  std::string s;
  for (size_t i = from; i < to; ++i) s += (i > from ? "," : "") + std::to_string(v[i]);
  return s;
}

// Calls visit on every tuple in [0, hi]^len.
inline void each_tuple(int len, int hi, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> v(len, 0);
  for (;;) {
    visit(v);
    int i = len - 1;
    while (i >= 0 && v[i] == hi) v[i--] = 0;
    if (i < 0) return;
    ++v[i];
  }
}

// Level-l coordinate set of the family named as in the CLI ("A1", "B1", "C1",
// "A2odd", "A2even", "D2") and rank n, rendered in the text format
// x_1..x_n|x_0|x̄_n..x̄_1 (A: x_0..x_n; no |x_0| block outside B, D).
inline std::set<std::string> coords(const std::string& fam, int n, int l) {
  std::set<std::string> out;
  if (fam == "A1") {
    each_tuple(n + 1, l, [&](const std::vector<int>& v) {
      int s = 0;
      for (int x : v) s += x;
      if (s == l) out.insert(join(v, 0, v.size()));
    });
    return out;
  }
  const bool flag = fam == "B1" || fam == "D2";
  for (int x0 = 0; x0 <= (flag ? 1 : 0); ++x0)
    each_tuple(2 * n, 2 * l, [&](const std::vector<int>& v) {
      int s = 0;
      for (int x : v) s += x;
      bool ok = false;
      if (fam == "B1") ok = x0 + s == l;
      if (fam == "C1") ok = s % 2 == 0 && s <= 2 * l;
      if (fam == "A2odd") ok = s == l;
      if (fam == "A2even") ok = s <= l;
      if (fam == "D2") ok = x0 + s <= l;
      if (!ok) return;
      std::string t = join(v, 0, n) + "|";
      if (flag) t += std::to_string(x0) + "|";
      out.insert(t + join(v, n, 2 * n));
    });
  return out;
}

using Mat = std::vector<std::vector<int>>;

inline std::vector<long> mul(const Mat& a, const std::vector<int>& x, bool transpose) {
  const size_t n = a.size();
  std::vector<long> y(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) y[i] += long(transpose ? a[j][i] : a[i][j]) * x[j];
  return y;
}

// Dominant weights a_0..a_n with Σ c_i a_i = l.
inline std::set<std::vector<int>> dominant(const std::vector<int>& comarks, int l) {
  std::set<std::vector<int>> out;
  each_tuple(static_cast<int>(comarks.size()), l, [&](const std::vector<int>& v) {
    int s = 0;
    for (size_t i = 0; i < v.size(); ++i) s += comarks[i] * v[i];
    if (s == l) out.insert(v);
  });
  return out;
}

}  // namespace oracle
