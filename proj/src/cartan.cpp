#include "affcrys/cartan.hpp"

#include <sstream>

namespace affcrys {

namespace {

int min_rank(Family f) {
  switch (f) {
    case Family::A1: return 1;
    case Family::B1: return 3;
    case Family::C1: return 2;
    case Family::A2odd: return 3;
    case Family::A2even: return 1;
    case Family::D2: return 2;
  }
  return 1;
}

}  // namespace

AffineType::AffineType(Family f, int rank) : family(f), n(rank) {
  if (rank < min_rank(f)) {
    AffineType probe;
    probe.family = f;
    probe.n = rank;
    throw std::invalid_argument("rank n=" + std::to_string(rank) + " out of range for " + probe.pretty() +
                                " (need n >= " + std::to_string(min_rank(f)) + ")");
  }
}

AffineType AffineType::parse(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad type '" + s + "'");
  std::string head = s.substr(0, colon);
  int num = 0;
  try {
    size_t used = 0;
    num = std::stoi(s.substr(colon + 1), &used);
    if (used != s.size() - colon - 1) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("bad type '" + s + "'");
  }
  auto make = [&](Family f, int rank) {
    if (rank < min_rank(f))
      throw std::invalid_argument("type '" + s + "' has rank n=" + std::to_string(rank) +
                                  " below the minimum " + std::to_string(min_rank(f)));
    return AffineType(f, rank);
  };
  if (head == "A1") return make(Family::A1, num);
  if (head == "B1") return make(Family::B1, num);
  if (head == "C1") return make(Family::C1, num);
  if (head == "D2") return make(Family::D2, num - 1);
  if (head == "A2") {
    if (num % 2 == 1) return make(Family::A2odd, (num + 1) / 2);
    return make(Family::A2even, num / 2);
  }
  throw std::invalid_argument("unknown type family '" + head + "'");
}

std::string AffineType::name() const {
  switch (family) {
    case Family::A1: return "A1:" + std::to_string(n);
    case Family::B1: return "B1:" + std::to_string(n);
    case Family::C1: return "C1:" + std::to_string(n);
    case Family::A2odd: return "A2:" + std::to_string(2 * n - 1);
    case Family::A2even: return "A2:" + std::to_string(2 * n);
    case Family::D2: return "D2:" + std::to_string(n + 1);
  }
  return "?";
}

std::string AffineType::pretty() const {
  switch (family) {
    case Family::A1: return "A_" + std::to_string(n) + "^(1)";
    case Family::B1: return "B_" + std::to_string(n) + "^(1)";
    case Family::C1: return "C_" + std::to_string(n) + "^(1)";
    case Family::A2odd: return "A_" + std::to_string(2 * n - 1) + "^(2)";
    case Family::A2even: return "A_" + std::to_string(2 * n) + "^(2)";
    case Family::D2: return "D_" + std::to_string(n + 1) + "^(2)";
  }
  return "?";
}

// a_ij = <h_i, alpha_j>, Kac's conventions.
Matrix cartan_matrix(const AffineType& t) {
  const int n = t.n, m = n + 1;
  Matrix a(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) a[i][i] = 2;
  auto link = [&](int i, int j, int aij, int aji) {
    a[i][j] += aij;
    a[j][i] += aji;
  };
  switch (t.family) {
    case Family::A1:
      if (n == 1) {
        link(0, 1, -2, -2);
      } else {
        for (int i = 0; i < m; ++i) link(i, (i + 1) % m, -1, -1);
      }
      break;
    case Family::B1:
      link(0, 2, -1, -1);
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
      link(n - 1, n, -1, -2);
      break;
    case Family::A2odd:
      link(0, 2, -1, -1);
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
      link(n - 1, n, -2, -1);
      break;
    case Family::C1:
      link(0, 1, -1, -2);
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
      link(n - 1, n, -2, -1);
      break;
    case Family::A2even:
      if (n == 1) {
        link(0, 1, -4, -1);
      } else {
        link(0, 1, -2, -1);
        for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
        link(n - 1, n, -2, -1);
      }
      break;
    case Family::D2:
      link(0, 1, -2, -1);
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
      link(n - 1, n, -1, -2);
      break;
  }
  return a;
}

std::vector<int> marks(const AffineType& t) {
  const int n = t.n;
  std::vector<int> a(n + 1, 1);
  switch (t.family) {
    case Family::A1: break;
    case Family::B1:
      for (int i = 2; i <= n; ++i) a[i] = 2;
      break;
    case Family::A2odd:
      for (int i = 2; i < n; ++i) a[i] = 2;
      break;
    case Family::C1:
      for (int i = 1; i < n; ++i) a[i] = 2;
      break;
    case Family::A2even:
      for (int i = 0; i < n; ++i) a[i] = 2;
      break;
    case Family::D2: break;
  }
  return a;
}

std::vector<int> comarks(const AffineType& t) {
  const int n = t.n;
  std::vector<int> c(n + 1, 1);
  switch (t.family) {
    case Family::A1: break;
    case Family::B1:
      for (int i = 2; i < n; ++i) c[i] = 2;
      break;
    case Family::A2odd:
      for (int i = 2; i <= n; ++i) c[i] = 2;
      break;
    case Family::C1: break;
    case Family::A2even:
      for (int i = 1; i <= n; ++i) c[i] = 2;
      break;
    case Family::D2:
      for (int i = 1; i < n; ++i) c[i] = 2;
      break;
  }
  return c;
}

int d0(const AffineType& t) { return marks(t)[0]; }

bool check_kernels(const AffineType& t, std::string* why) {
  auto a = cartan_matrix(t);
  auto mk = marks(t), cm = comarks(t);
  const int m = t.size();
  auto fail = [&](const std::string& s) {
    if (why) *why = t.name() + ": " + s;
    return false;
  };
  for (int i = 0; i < m; ++i) {
    if (a[i][i] != 2) return fail("diagonal");
    long r = 0, c = 0;
    for (int j = 0; j < m; ++j) {
      if (i != j && a[i][j] > 0) return fail("positive off-diagonal");
      r += long(a[i][j]) * mk[j];
      c += long(a[j][i]) * cm[j];
    }
    if (r != 0) return fail("A*marks != 0 at row " + std::to_string(i));
    if (c != 0) return fail("A^T*comarks != 0 at column " + std::to_string(i));
  }
  int gm = 0, gc = 0;
  for (int i = 0; i < m; ++i) {
    if (mk[i] <= 0 || cm[i] <= 0) return fail("non-positive mark");
    gm = std::gcd(gm, mk[i]);
    gc = std::gcd(gc, cm[i]);
  }
  if (gm != 1 || gc != 1) return fail("marks not coprime");
  return true;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) num = -num, den = -den;
  auto g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator-(const Rational& o) const { return *this + (-o); }
Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}
std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

ClassicalWeight ClassicalWeight::operator+(const ClassicalWeight& o) const {
  ClassicalWeight r(*this);
  for (int i = 0; i < size(); ++i) r.c[i] += o.c[i];
  return r;
}
ClassicalWeight ClassicalWeight::operator-(const ClassicalWeight& o) const {
  ClassicalWeight r(*this);
  for (int i = 0; i < size(); ++i) r.c[i] -= o.c[i];
  return r;
}
bool ClassicalWeight::dominant() const {
  for (auto v : c)
    if (v < 0) return false;
  return true;
}
std::string ClassicalWeight::str() const {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}
ClassicalWeight ClassicalWeight::parse(const std::string& s) {
  ClassicalWeight w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    long long v;
    try {
      v = std::stoll(item, &used);
    } catch (...) {
      throw std::invalid_argument("bad weight '" + s + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad weight '" + s + "'");
    w.c.push_back(v);
  }
  return w;
}

std::string AffineWeight::str() const {
  std::string s;
  bool first = true;
  for (int i = 0; i < lambda.size(); ++i) {
    if (!lambda[i]) continue;
    if (!first || lambda[i] < 0) s += lambda[i] < 0 ? "-" : "+";
    auto a = lambda[i] < 0 ? -lambda[i] : lambda[i];
    if (a != 1) s += std::to_string(a);
    s += "L" + std::to_string(i);
    first = false;
  }
  if (delta.num()) {
    s += delta.num() < 0 ? "-" : (first ? "" : "+");
    Rational a = delta.num() < 0 ? -delta : delta;
    if (!(a == Rational(1))) s += a.str();
    s += "d";
    first = false;
  }
  return first ? "0" : s;
}

std::int64_t level(const AffineType& t, const ClassicalWeight& w) {
  auto c = comarks(t);
  std::int64_t s = 0;
  for (int i = 0; i < t.size(); ++i) s += c[i] * w[i];
  return s;
}

ClassicalWeight classical_root(const AffineType& t, int j) {
  if (j < 0 || j > t.n) throw std::out_of_range("color " + std::to_string(j));
  auto a = cartan_matrix(t);
  ClassicalWeight w(t.size());
  for (int i = 0; i < t.size(); ++i) w[i] = a[i][j];
  return w;
}

// alpha_0 = sum_i a_i0 Λ_i + δ/d_0; the other simple roots have no δ-part.
AffineWeight affine_root(const AffineType& t, int j) {
  AffineWeight w{classical_root(t, j), Rational(0)};
  if (j == 0) w.delta = Rational(1, d0(t));
  return w;
}

AffineWeight operator-(const AffineWeight& w, const AffineWeight& a) {
  return {w.lambda - a.lambda, w.delta - a.delta};
}
AffineWeight operator+(const AffineWeight& w, const AffineWeight& a) {
  return {w.lambda + a.lambda, w.delta + a.delta};
}
AffineWeight scale(const AffineWeight& a, const Rational& k) {
  if (k.den() != 1 && k.den() != 2) throw std::domain_error("unsupported root multiplicity");
  // λ-part stays integral only when the count is; callers pass whole multiples there.
  AffineWeight r{ClassicalWeight(a.lambda.size()), a.delta * k};
  for (int i = 0; i < a.lambda.size(); ++i) {
    Rational v = Rational(a.lambda[i]) * k;
    if (v.den() != 1) throw std::domain_error("non-integral classical weight");
    r.lambda[i] = v.num();
  }
  return r;
}

std::vector<ClassicalWeight> dominant_weights(const AffineType& t, int l) {
  auto c = comarks(t);
  std::vector<ClassicalWeight> out;
  ClassicalWeight cur(t.size());
  auto rec = [&](auto&& self, int i, int rest) -> void {
    if (i == t.size()) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    for (int v = 0; v * c[i] <= rest; ++v) {
      cur[i] = v;
      self(self, i + 1, rest - v * c[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, l);
  return out;
}

}  // namespace affcrys
