#include "affcrys/path.hpp"

#include <sstream>
#include <stdexcept>

#include "affcrys/psi.hpp"

namespace affcrys {

PathCrystal::PathCrystal(const AffineType& t, const ClassicalWeight& lambda) : gs_(affcrys::ground_state(t, lambda)) {}

int PathCrystal::factor(const Path& p, std::int64_t k) const {
  if (k < static_cast<std::int64_t>(p.ids.size())) return p.ids[k];
  return gs_.at(k);
}

Path PathCrystal::trim(Path p) const {
  while (!p.ids.empty() && p.ids.back() == gs_.at(static_cast<std::int64_t>(p.ids.size()) - 1)) p.ids.pop_back();
  return p;
}

Signature PathCrystal::signature(const Path& p, int i) const {
  if (i < 0 || i > type().n) throw std::out_of_range("color " + std::to_string(i) + " out of range for " + type().name());
  const PerfectCrystal& B = crystal();
  const std::int64_t N = p.ids.size();
  std::vector<std::int64_t> zeros, ones;
  for (int r = 0; r < B.phi(i, gs_.at(N)); ++r) zeros.push_back(N);
  for (std::int64_t k = N - 1; k >= 0; --k) {
    const int b = p.ids[k];
    for (int r = 0; r < B.eps(i, b); ++r) {
      if (!zeros.empty()) {
        zeros.pop_back();
      } else {
        ones.push_back(k);
      }
    }
    for (int r = 0; r < B.phi(i, b); ++r) zeros.push_back(k);
  }
  Signature s;
  s.ones = static_cast<int>(ones.size());
  s.zeros = static_cast<int>(zeros.size());
  if (!ones.empty()) s.e_at = ones.back();
  if (!zeros.empty()) s.f_at = zeros.front();
  return s;
}

namespace {

std::optional<Path> act(const PathCrystal& P, const Path& p, std::int64_t k, int i, bool raise) {
  if (k < 0) return std::nullopt;
  Path q = p;
  for (std::int64_t r = q.ids.size(); r <= k; ++r) q.ids.push_back(P.ground_state().at(r));
  const int b = raise ? P.crystal().e(i, q.ids[k]) : P.crystal().f(i, q.ids[k]);
  if (b == PerfectCrystal::kNull) throw std::logic_error("signature selected a factor the operator cannot act on");
  q.ids[k] = b;
  if (q.wt) {
    const AffineWeight a = affine_root(P.type(), i);
    q.wt = raise ? *q.wt + a : *q.wt - a;
  }
  return P.trim(std::move(q));
}

}  // namespace

std::optional<Path> PathCrystal::f(int i, const Path& p) const { return act(*this, p, signature(p, i).f_at, i, false); }

std::optional<Path> PathCrystal::e(int i, const Path& p) const { return act(*this, p, signature(p, i).e_at, i, true); }

ClassicalWeight PathCrystal::cwt(const Path& p) const {
  ClassicalWeight c(type().size());
  for (int i = 0; i <= type().n; ++i) {
    Signature s = signature(p, i);
    c[i] = s.zeros - s.ones;
  }
  return c;
}

std::string PathCrystal::to_string(const Path& p) const {
  std::string s = "lambda=" + lambda().str() + "; N=" + std::to_string(p.ids.size()) + "; p=";
  for (size_t k = 0; k < p.ids.size(); ++k) {
    if (k) s += ';';
    s += affcrys::to_string(type(), crystal().element(p.ids[k]));
  }
  return s;
}

Path PathCrystal::parse(const std::string& s) const {
  auto bad = [&] { return std::invalid_argument("bad path '" + s + "'"); };
  const auto a = s.find("; N="), b = s.find("; p=");
  if (s.rfind("lambda=", 0) != 0 || a == std::string::npos || b == std::string::npos || b < a) throw bad();
  ClassicalWeight lam = ClassicalWeight::parse(s.substr(7, a - 7));
  if (!(lam == lambda())) throw std::invalid_argument("path weight " + lam.str() + " differs from " + lambda().str());
  std::size_t used = 0;
  const std::string ns = s.substr(a + 4, b - a - 4);
  long N;
  try {
    N = std::stol(ns, &used);
  } catch (...) {
    throw bad();
  }
  if (used != ns.size() || N < 0) throw bad();
  Path p;
  std::stringstream ss(s.substr(b + 4));
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const int id = crystal().index(parse_coord(type(), item));
    if (id == PerfectCrystal::kNull) throw std::invalid_argument("'" + item + "' is not an element of level " + std::to_string(level()));
    p.ids.push_back(id);
  }
  if (static_cast<long>(p.ids.size()) != N) throw std::invalid_argument("N does not match the number of factors");
  return p;
}

Path phi_map(const WallCrystal& W, const PathCrystal& P, const Wall& w) {
  if (!W.is_reduced(w)) throw std::domain_error("Φ is only defined on reduced proper walls");
  Path p;
  for (const auto& c : w.cols) {
    const int id = P.crystal().index(psi_inverse(c, W.level()));
    if (id == PerfectCrystal::kNull) throw std::logic_error("column outside the perfect crystal");
    p.ids.push_back(id);
  }
  p.wt = W.wt(w);
  return P.trim(std::move(p));
}

Wall phi_map_inverse(const WallCrystal& W, const PathCrystal& P, const Path& p) {
  std::vector<Slice> classes;
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(p.ids.size()); ++k)
    classes.push_back(psi(W.type(), W.level(), P.crystal().element(p.ids[k]), Pattern::column_variant(W.type(), k)));
  return W.realize(classes);
}

}  // namespace affcrys
