#include "affcrys/crystal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>

#include "affcrys/psi.hpp"

namespace affcrys {

PerfectCrystal::PerfectCrystal(const AffineType& t, int l) : type_(t), level_(l), elems_(enumerate(t, l)) {
  const int m = t.size(), N = size();
  f_.assign(m, std::vector<int>(N, kNull));
  e_ = f_;
  eps_.assign(m, std::vector<int>(N, 0));
  phi_ = eps_;
  auto id = [&](const std::optional<CoordElement>& b) {
    if (!b) return kNull;
    int k = index(*b);
    if (k == kNull) throw std::logic_error("operator left the crystal: " + to_string(t, *b));
    return k;
  };
  if (t.family == Family::B1) {
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < N; ++k) {
        f_[i][k] = id(bn::f(t.n, i, elems_[k]));
        e_[i][k] = id(bn::e(t.n, i, elems_[k]));
      }
  } else {
    // Transport through ψ.
    std::vector<Slice> img;
    for (const auto& b : elems_) img.push_back(psi(t, l, b));
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < N; ++k) {
        auto fs = f_slice(i, img[k]);
        auto es = e_slice(i, img[k]);
        f_[i][k] = fs ? id(psi_inverse(*fs, l)) : kNull;
        e_[i][k] = es ? id(psi_inverse(*es, l)) : kNull;
      }
  }
  // String lengths by iteration; for B_n^(1) the closed forms are checked
  // against these in the tests.
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < N; ++k) {
      int c = 0;
      for (int x = e_[i][k]; x != kNull; x = e_[i][x])
        if (++c > N) throw std::logic_error("e-string does not terminate");
      eps_[i][k] = c;
      c = 0;
      for (int x = f_[i][k]; x != kNull; x = f_[i][x])
        if (++c > N) throw std::logic_error("f-string does not terminate");
      phi_[i][k] = c;
    }
}

int PerfectCrystal::index(const CoordElement& b) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), b,
                             [&](const CoordElement& a, const CoordElement& c) { return canonical_less(type_, a, c); });
  if (it == elems_.end() || !(*it == b)) return kNull;
  return static_cast<int>(it - elems_.begin());
}

ClassicalWeight PerfectCrystal::eps_weight(int id) const {
  ClassicalWeight w(type_.size());
  for (int i = 0; i < type_.size(); ++i) w[i] = eps_[i][id];
  return w;
}

ClassicalWeight PerfectCrystal::phi_weight(int id) const {
  ClassicalWeight w(type_.size());
  for (int i = 0; i < type_.size(); ++i) w[i] = phi_[i][id];
  return w;
}

ClassicalWeight PerfectCrystal::cwt(int id) const { return phi_weight(id) - eps_weight(id); }

int PerfectCrystal::b_lower(const ClassicalWeight& lambda) const {
  int found = kNull;
  for (int k = 0; k < size(); ++k)
    if (phi_weight(k) == lambda) {
      if (found != kNull) throw std::runtime_error("perfectness violation: b_lambda not unique for " + lambda.str());
      found = k;
    }
  if (found == kNull) throw std::runtime_error("perfectness violation: no b_lambda for " + lambda.str());
  return found;
}

int PerfectCrystal::b_upper(const ClassicalWeight& lambda) const {
  int found = kNull;
  for (int k = 0; k < size(); ++k)
    if (eps_weight(k) == lambda) {
      if (found != kNull) throw std::runtime_error("perfectness violation: b^lambda not unique for " + lambda.str());
      found = k;
    }
  if (found == kNull) throw std::runtime_error("perfectness violation: no b^lambda for " + lambda.str());
  return found;
}

std::shared_ptr<const PerfectCrystal> perfect_crystal(const AffineType& t, int l) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const PerfectCrystal>> cache;
  auto key = std::make_tuple(static_cast<int>(t.family), t.n, l);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto B = std::make_shared<const PerfectCrystal>(t, l);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, B).first->second;
}

namespace {

int checked_index(const PerfectCrystal& B, const CoordElement& b) {
  int k = B.index(b);
  if (k == PerfectCrystal::kNull)
    throw std::invalid_argument("not an element of B^(" + std::to_string(B.level()) + "): " + to_string(B.type(), b));
  return k;
}

void check_color(const AffineType& t, int i) {
  if (i < 0 || i > t.n) throw std::out_of_range("color " + std::to_string(i) + " out of range for " + t.name());
}

}  // namespace

std::optional<CoordElement> f_coord(const AffineType& t, int l, int i, const CoordElement& b) {
  check_color(t, i);
  auto B = perfect_crystal(t, l);
  int k = B->f(i, checked_index(*B, b));
  if (k == PerfectCrystal::kNull) return std::nullopt;
  return B->element(k);
}

std::optional<CoordElement> e_coord(const AffineType& t, int l, int i, const CoordElement& b) {
  check_color(t, i);
  auto B = perfect_crystal(t, l);
  int k = B->e(i, checked_index(*B, b));
  if (k == PerfectCrystal::kNull) return std::nullopt;
  return B->element(k);
}

int eps_coord(const AffineType& t, int l, int i, const CoordElement& b) {
  check_color(t, i);
  if (t.family == Family::B1) return bn::eps(t.n, i, b);
  auto B = perfect_crystal(t, l);
  return B->eps(i, checked_index(*B, b));
}

int phi_coord(const AffineType& t, int l, int i, const CoordElement& b) {
  check_color(t, i);
  if (t.family == Family::B1) return bn::phi(t.n, i, b);
  auto B = perfect_crystal(t, l);
  return B->phi(i, checked_index(*B, b));
}

ClassicalWeight cwt_coord(const AffineType& t, int l, const CoordElement& b) {
  ClassicalWeight w(t.size());
  for (int i = 0; i <= t.n; ++i) w[i] = phi_coord(t, l, i, b) - eps_coord(t, l, i, b);
  return w;
}

CoordElement find_b_lambda(const AffineType& t, int l, const ClassicalWeight& lambda) {
  auto B = perfect_crystal(t, l);
  return B->element(B->b_lower(lambda));
}

CoordElement find_b_upper(const AffineType& t, int l, const ClassicalWeight& lambda) {
  auto B = perfect_crystal(t, l);
  return B->element(B->b_upper(lambda));
}

GroundState ground_state(const AffineType& t, const ClassicalWeight& lambda) {
  if (lambda.size() != t.size()) throw std::invalid_argument("weight " + lambda.str() + " has the wrong length for " + t.name());
  if (!lambda.dominant()) throw std::invalid_argument("weight " + lambda.str() + " is not dominant");
  const auto l = level(t, lambda);
  if (l <= 0) throw std::invalid_argument("weight " + lambda.str() + " has level 0");
  GroundState g;
  g.type = t;
  g.level = static_cast<int>(l);
  g.lambda = lambda;
  g.crystal = perfect_crystal(t, g.level);
  std::map<ClassicalWeight, int> seen;
  ClassicalWeight w = lambda;
  while (!seen.count(w)) {
    seen[w] = static_cast<int>(g.seq.size());
    int b = g.crystal->b_lower(w);
    g.seq.push_back(b);
    w = g.crystal->eps_weight(b);
  }
  g.pre = seen[w];
  g.period = static_cast<int>(g.seq.size()) - g.pre;
  return g;
}

std::vector<std::string> check_axioms(const PerfectCrystal& B) {
  std::vector<std::string> bad;
  const AffineType& t = B.type();
  auto name = [&](int k) { return to_string(t, B.element(k)); };
  for (int k = 0; k < B.size(); ++k) {
    ClassicalWeight w = B.cwt(k);
    for (int i = 0; i <= t.n; ++i) {
      auto tag = [&](const std::string& what) {
        bad.push_back(what + " at color " + std::to_string(i) + ", element " + name(k));
      };
      if (B.phi(i, k) != B.eps(i, k) + w[i]) tag("(1) phi != eps + <h,wt>");
      if (B.eps(i, k) < 0 || B.phi(i, k) < 0) tag("(7) negative string length");
      ClassicalWeight a = classical_root(t, i);
      int up = B.e(i, k), dn = B.f(i, k);
      if (up != PerfectCrystal::kNull) {
        if (!(B.cwt(up) == w + a)) tag("(2) wt(e b) != wt(b) + alpha");
        if (B.eps(i, up) != B.eps(i, k) - 1) tag("(4) eps(e b) != eps(b) - 1");
        if (B.phi(i, up) != B.phi(i, k) + 1) tag("(4) phi(e b) != phi(b) + 1");
        if (B.f(i, up) != k) tag("(6) f(e b) != b");
      } else if (B.eps(i, k) != 0) {
        tag("e b = 0 with eps > 0");
      }
      if (dn != PerfectCrystal::kNull) {
        if (!(B.cwt(dn) == w - a)) tag("(3) wt(f b) != wt(b) - alpha");
        if (B.eps(i, dn) != B.eps(i, k) + 1) tag("(5) eps(f b) != eps(b) + 1");
        if (B.phi(i, dn) != B.phi(i, k) - 1) tag("(5) phi(f b) != phi(b) - 1");
        if (B.e(i, dn) != k) tag("(6) e(f b) != b");
      } else if (B.phi(i, k) != 0) {
        tag("f b = 0 with phi > 0");
      }
      if (t.family == Family::B1) {
        if (bn::eps(t.n, i, B.element(k)) != B.eps(i, k)) tag("closed-form eps differs from iteration");
        if (bn::phi(t.n, i, B.element(k)) != B.phi(i, k)) tag("closed-form phi differs from iteration");
      }
    }
  }
  return bad;
}

namespace {

// Solve sum_{i>=1} k_i cl(α_i) = d exactly; true when every k_i lies in (1/d_0)Z_{>=0}.
bool in_negative_cone(const AffineType& t, const ClassicalWeight& d) {
  const int n = t.n;
  auto A = cartan_matrix(t);
  // Augmented system over rows 1..n, columns 1..n.
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) M[r][c] = Rational(A[r + 1][c + 1]);
    M[r][n] = Rational(d[r + 1]);
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (M[piv][c].num() == 0) ++piv;
    std::swap(M[piv], M[c]);
    Rational inv(M[c][c].den(), M[c][c].num());
    for (int k = c; k <= n; ++k) M[c][k] = M[c][k] * inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || M[r][c].num() == 0) continue;
      Rational f = M[r][c];
      for (int k = c; k <= n; ++k) M[r][k] -= f * M[c][k];
    }
  }
  Rational row0(0);
  for (int c = 0; c < n; ++c) {
    const Rational& k = M[c][n];
    if (d0(t) % k.den() != 0 || k.num() < 0) return false;
    row0 += Rational(A[0][c + 1]) * k;
  }
  return row0 == Rational(d[0]);
}

}  // namespace

PerfectReport check_perfect(const AffineType& t, int l) {
  PerfectReport rep;
  auto Bp = perfect_crystal(t, l);
  const auto& B = *Bp;
  const int N = B.size(), m = t.size();

  // B ⊗ B under the signature rule, connectivity via e and f.
  std::vector<char> seen(size_t(N) * N, 0);
  std::queue<int> q;
  seen[0] = 1;
  q.push(0);
  size_t count = 1;
  auto visit = [&](int a, int b) {
    if (a == PerfectCrystal::kNull || b == PerfectCrystal::kNull) return;
    size_t key = size_t(a) * N + b;
    if (!seen[key]) {
      seen[key] = 1;
      ++count;
      q.push(static_cast<int>(key));
    }
  };
  while (!q.empty()) {
    int key = q.front();
    q.pop();
    int a = key / N, b = key % N;
    for (int i = 0; i < m; ++i) {
      if (B.phi(i, a) > B.eps(i, b)) {
        visit(B.f(i, a), b);
      } else {
        visit(a, B.f(i, b));
      }
      if (B.phi(i, a) >= B.eps(i, b)) {
        visit(B.e(i, a), b);
      } else {
        visit(a, B.e(i, b));
      }
    }
  }
  rep.connected = count == size_t(N) * N;
  if (!rep.connected) rep.violations.push_back("B (x) B is not connected");

  rep.level_bound = true;
  for (int k = 0; k < N; ++k)
    if (level(t, B.eps_weight(k)) < l) {
      rep.level_bound = false;
      rep.violations.push_back("<c, eps(b)> < l for " + to_string(t, B.element(k)));
    }

  rep.extremal_unique = true;
  for (const auto& lam : dominant_weights(t, l)) {
    try {
      B.b_lower(lam);
      B.b_upper(lam);
    } catch (const std::exception& ex) {
      rep.extremal_unique = false;
      rep.violations.push_back(ex.what());
    }
  }

  // Some weight λ_0 occurs exactly once and dominates all of wt(B).
  for (int top = 0; top < N && !rep.weight_cone; ++top) {
    ClassicalWeight w0 = B.cwt(top);
    bool good = true;
    int mult = 0;
    for (int k = 0; k < N && good; ++k) {
      ClassicalWeight w = B.cwt(k);
      if (w == w0) ++mult;
      good = in_negative_cone(t, w0 - w);
    }
    rep.weight_cone = good && mult == 1;
  }
  if (!rep.weight_cone) rep.violations.push_back("no lambda_0 with wt(B) in lambda_0 - Q_+ of multiplicity one");
  return rep;
}

}  // namespace affcrys
