#include "affcrys/verify.hpp"

#include <map>
#include <random>
#include <set>
#include <tuple>

#include "affcrys/crystal.hpp"
#include "affcrys/psi.hpp"

namespace affcrys {

void Report::check(bool good, const std::string& what) {
  ++checks;
  if (good) return;
  ++failures;
  if (counterexamples.size() < kMaxExamples) counterexamples.push_back(what);
}

void Report::merge(const Report& o) {
  checks += o.checks;
  failures += o.failures;
  weight_checks += o.weight_checks;
  weight_failures += o.weight_failures;
  for (const auto& c : o.counterexamples)
    if (counterexamples.size() < kMaxExamples) counterexamples.push_back(c);
  notes.insert(notes.end(), o.notes.begin(), o.notes.end());
}

std::vector<GridPoint> default_grid() {
  std::vector<GridPoint> g;
  for (const char* t : {"A1:2", "B1:3", "C1:2", "A2:5", "A2:2", "D2:3"})
    for (int l : {1, 2}) g.push_back({AffineType::parse(t), l});
  g.push_back({AffineType::parse("B1:3"), 3});
  return g;
}

namespace {

std::string tl(const AffineType& t, int l) { return t.name() + " l=" + std::to_string(l); }

}  // namespace

Report verify_axioms(const AffineType& t, int l) {
  Report r("axioms", {{"type", t.name()}, {"level", std::to_string(l)}});
  auto B = perfect_crystal(t, l);
  auto v = check_axioms(*B);
  r.checks = static_cast<std::uint64_t>(B->size()) * t.size();
  r.failures = v.size();
  for (size_t k = 0; k < v.size() && k < Report::kMaxExamples; ++k) r.counterexamples.push_back(tl(t, l) + ": " + v[k]);
  r.notes.push_back(tl(t, l) + " |B|=" + std::to_string(B->size()));
  return r;
}

Report verify_perfect(const AffineType& t, int l) {
  Report r("perfect", {{"type", t.name()}, {"level", std::to_string(l)}});
  auto p = check_perfect(t, l);
  r.check(p.connected, tl(t, l) + ": B⊗B not connected");
  r.check(p.level_bound, tl(t, l) + ": <c,ε(b)> < l for some b");
  r.check(p.extremal_unique, tl(t, l) + ": b^λ / b_λ missing or not unique");
  r.check(p.weight_cone, tl(t, l) + ": weight condition fails");
  for (const auto& v : p.violations)
    if (r.counterexamples.size() < Report::kMaxExamples) r.counterexamples.push_back(tl(t, l) + ": " + v);
  return r;
}

Report verify_intertwine(const AffineType& t, int l) {
  Report r("psi", {{"type", t.name()}, {"level", std::to_string(l)}});
  auto B = perfect_crystal(t, l);
  std::vector<Slice> img;
  for (int k = 0; k < B->size(); ++k) img.push_back(psi(t, l, B->element(k)));
  auto name = [&](int k) { return tl(t, l) + " b=" + to_string(t, B->element(k)); };
  for (int k = 0; k < B->size(); ++k) {
    const CoordElement& b = B->element(k);
    r.check(psi_inverse(img[k], l) == b, name(k) + ": ψ^-1 ψ(b) != b");
    r.check(coord_of_bracket(t, bracket_of_coord(t, l, b)) == b, name(k) + ": bracket round trip");
    for (int v = 1; v < Pattern::variant_count(t); ++v)
      r.check(psi_inverse(psi(t, l, b, v), l) == b, name(k) + ": round trip in variant " + std::to_string(v));
    for (int i = 0; i <= t.n; ++i) {
      const std::string at = name(k) + " i=" + std::to_string(i);
      auto fs = f_slice(i, img[k]);
      const int fb = B->f(i, k);
      r.check(fb == PerfectCrystal::kNull ? !fs : (fs && *fs == img[fb]), at + ": ψ(f b) !~ f ψ(b)");
      auto es = e_slice(i, img[k]);
      const int eb = B->e(i, k);
      r.check(eb == PerfectCrystal::kNull ? !es : (es && *es == img[eb]), at + ": ψ(e b) !~ e ψ(b)");
      r.check(eps_slice(i, img[k]) == B->eps(i, k), at + ": ε differs");
      r.check(phi_slice(i, img[k]) == B->phi(i, k), at + ": φ differs");
    }
    r.check(cwt_slice(img[k]) == B->cwt(k), name(k) + ": cwt differs");
  }
  // Bijectivity against the direct generator.
  std::set<Slice> a(img.begin(), img.end());
  const auto all = all_slices(t, l);
  std::set<Slice> b(all.begin(), all.end());
  r.check(a.size() == img.size(), tl(t, l) + ": ψ not injective");
  r.check(a == b, tl(t, l) + ": image of ψ (" + std::to_string(a.size()) + ") != normalized slices (" +
                      std::to_string(b.size()) + ")");
  return r;
}

namespace {

// Weight identities on one f̃_i edge.
template <class At>
void check_weights(Report& r, const WallCrystal& W, const Wall& w, const Wall& fw, int i, const At& at) {
  const AffineWeight a = W.wt(w), b = W.wt(fw);
  const ClassicalWeight c = W.cwt(fw);
  const bool step = b == a - affine_root(W.type(), i), cl = b.lambda == c;
  r.weight_checks += 2;
  r.weight_failures += !step + !cl;
  r.check_lazy(step, [&] { return at() + ": wt(f W) != wt(W) - α_" + std::to_string(i); });
  r.check_lazy(cl, [&] { return at() + ": cl(wt) " + b.lambda.str() + " != cwt " + c.str(); });
}

}  // namespace

Report verify_iso(const AffineType& t, const ClassicalWeight& lambda, int depth) {
  Report r("iso", {{"type", t.name()}, {"weight", lambda.str()}, {"depth", std::to_string(depth)}});
  const std::string tag = t.name() + " λ=" + lambda.str();
  WallCrystal W(t, lambda);
  PathCrystal P(t, lambda);

  // Walls.
  std::map<std::string, int> wdepth;
  std::vector<Wall> walls{W.ground_wall()};
  std::set<std::tuple<std::string, std::string, int>> wedges;
  std::string why;
  r.check(W.is_proper(W.ground_wall(), &why), tag + ": Y_λ is not proper: " + why);
  r.check(W.is_reduced(W.ground_wall()), tag + ": Y_λ is not reduced");
  wdepth[W.to_string(walls[0])] = 0;
  for (size_t u = 0; u < walls.size(); ++u) {
    const Wall w = walls[u];
    const std::string wk = W.to_string(w);
    const int d = wdepth[wk];
    if (d >= depth) continue;
    for (int i = 0; i <= t.n; ++i) {
      const std::string at = tag + " " + wk + " f_" + std::to_string(i);
      std::optional<Wall> fw;
      try {
        fw = W.f(i, w);
      } catch (const std::exception& ex) {
        r.fail(at + ": " + ex.what());
        continue;
      }
      if (!fw) continue;
      const std::string fk = W.to_string(*fw);
      r.check(W.is_proper(*fw, &why), at + ": improper result " + fk + " (" + why + ")");
      r.check(W.is_reduced(*fw), at + ": result not reduced " + fk);
      auto ew = W.e(i, *fw);
      r.check(ew && *ew == w, at + ": e∘f != id");
      check_weights(r, W, w, *fw, i, [&] { return at; });
      wedges.insert({wk, fk, i});
      if (!wdepth.count(fk)) {
        wdepth[fk] = d + 1;
        walls.push_back(*fw);
      }
    }
  }

  // Paths, computed independently.
  std::map<std::string, int> pdepth;
  std::map<std::string, Path> paths;
  std::vector<Path> order{P.ground_path()};
  std::set<std::tuple<std::string, std::string, int>> pedges;
  pdepth[P.to_string(order[0])] = 0;
  paths[P.to_string(order[0])] = order[0];
  for (size_t u = 0; u < order.size(); ++u) {
    const Path p = order[u];
    const std::string pk = P.to_string(p);
    const int d = pdepth[pk];
    if (d >= depth) continue;
    for (int i = 0; i <= t.n; ++i) {
      auto fp = P.f(i, p);
      if (!fp) continue;
      const std::string fk = P.to_string(*fp);
      pedges.insert({pk, fk, i});
      if (!pdepth.count(fk)) {
        pdepth[fk] = d + 1;
        paths[fk] = *fp;
        order.push_back(*fp);
      }
    }
  }

  // Per-depth counts.
  std::map<int, int> cw, cp;
  for (const auto& [k, d] : wdepth) ++cw[d];
  for (const auto& [k, d] : pdepth) ++cp[d];
  std::string counts;
  for (int d = 0; d <= depth; ++d) {
    counts += (d ? " " : "") + std::to_string(cw[d]) + "/" + std::to_string(cp[d]);
    r.check(cw[d] == cp[d], tag + ": depth " + std::to_string(d) + " has " + std::to_string(cw[d]) + " walls and " +
                                std::to_string(cp[d]) + " paths");
  }
  r.notes.push_back(tag + " walls/paths per depth: " + counts);

  // Φ on vertices and edges.
  std::map<std::string, std::string> phi;
  std::set<std::string> image;
  for (const auto& w : walls) {
    const std::string wk = W.to_string(w);
    Path p;
    try {
      p = phi_map(W, P, w);
    } catch (const std::exception& ex) {
      r.fail(tag + " " + wk + ": Φ failed: " + ex.what());
      continue;
    }
    const std::string pk = P.to_string(p);
    phi[wk] = pk;
    image.insert(pk);
    auto it = paths.find(pk);
    if (it == paths.end()) {
      r.fail(tag + " " + wk + ": Φ(W) = " + pk + " is not in the path BFS");
      continue;
    }
    r.check(pdepth[pk] == wdepth[wk], tag + " " + wk + ": depth differs under Φ");
    r.check(W.wt(w) == *it->second.wt, tag + " " + wk + ": wt " + W.wt(w).str() + " != path wt " + it->second.wt->str());
    r.check(W.cwt(w) == P.cwt(p), tag + " " + wk + ": cwt differs under Φ");
    try {
      r.check(phi_map_inverse(W, P, p) == w, tag + " " + wk + ": Φ^-1 Φ(W) != W");
    } catch (const std::exception& ex) {
      r.fail(tag + " " + wk + ": Φ^-1 failed: " + ex.what());
    }
  }
  r.check(image.size() == walls.size(), tag + ": Φ is not injective on the BFS");
  r.check(image.size() == paths.size(), tag + ": Φ is not onto the path BFS");
  std::set<std::tuple<std::string, std::string, int>> mapped;
  for (const auto& [a, b, i] : wedges)
    if (phi.count(a) && phi.count(b)) mapped.insert({phi[a], phi[b], i});
  r.check(mapped == pedges, tag + ": edge sets differ under Φ (" + std::to_string(mapped.size()) + " vs " +
                                std::to_string(pedges.size()) + ")");
  return r;
}

namespace {

struct Walker {
  const WallCrystal& W;
  std::mt19937_64& rng;

  int color() { return std::uniform_int_distribution<int>(0, W.type().n)(rng); }
  bool lower() { return std::uniform_int_distribution<int>(0, 3)(rng) != 0; }
};

std::string word_text(const std::vector<std::pair<char, int>>& word) {
  std::string s;
  for (const auto& [op, i] : word) s += std::string(s.empty() ? "" : " ") + op + std::to_string(i);
  return s.empty() ? "(empty)" : s;
}

}  // namespace

Report verify_signatures(const AffineType& t, const std::vector<ClassicalWeight>& weights, const WalkOptions& o) {
  Report r("signatures",
           {{"type", t.name()}, {"samples", std::to_string(o.samples)}, {"seed", std::to_string(o.seed)}});
  std::vector<WallCrystal> Ws;
  std::vector<PathCrystal> Ps;
  for (const auto& l : weights) {
    Ws.emplace_back(t, l);
    Ps.emplace_back(t, l);
  }
  std::mt19937_64 rng(o.seed);
  for (int s = 0; s < o.samples; ++s) {
    const WallCrystal& W = Ws[s % Ws.size()];
    const PathCrystal& P = Ps[s % Ps.size()];
    Walker walk{W, rng};
    const int len = std::uniform_int_distribution<int>(0, o.max_len)(rng);
    Wall w = W.ground_wall();
    std::vector<std::pair<char, int>> word;
    try {
      for (int step = 0; step < len; ++step) {
        const int i = walk.color();
        const bool down = walk.lower();
        auto x = down ? W.f(i, w) : W.e(i, w);
        if (x) {
          w = *x;
          word.push_back({down ? 'f' : 'e', i});
        }
      }
      const std::string at = t.name() + " λ=" + W.lambda().str() + " word " + word_text(word);
      const Path p = phi_map(W, P, w);
      for (int i = 0; i <= t.n; ++i) {
        const Signature a = W.wall_signature(w, i), b = P.signature(p, i);
        const std::string ai = at + " i=" + std::to_string(i);
        r.check(a.f_at == b.f_at, ai + ": f acts on column " + std::to_string(a.f_at) + " vs factor " + std::to_string(b.f_at));
        r.check(a.e_at == b.e_at, ai + ": e acts on column " + std::to_string(a.e_at) + " vs factor " + std::to_string(b.e_at));
        auto fw = W.f(i, w);
        auto fp = P.f(i, p);
        r.check(bool(fw) == bool(fp) && (!fw || phi_map(W, P, *fw) == *fp), ai + ": Φ f W != f Φ W");
        if (fw) check_weights(r, W, w, *fw, i, [&] { return ai; });
        auto ew = W.e(i, w);
        auto ep = P.e(i, p);
        r.check(bool(ew) == bool(ep) && (!ew || phi_map(W, P, *ew) == *ep), ai + ": Φ e W != e Φ W");
      }
    } catch (const std::exception& ex) {
      r.fail(t.name() + " λ=" + W.lambda().str() + " word " + word_text(word) + ": " + ex.what());
    }
  }
  return r;
}

Report verify_closure(const AffineType& t, const std::vector<ClassicalWeight>& weights, const WalkOptions& o) {
  Report r("reduced-closure",
           {{"type", t.name()}, {"samples", std::to_string(o.samples)}, {"seed", std::to_string(o.seed)}});
  std::vector<WallCrystal> Ws;
  for (const auto& l : weights) Ws.emplace_back(t, l);
  std::mt19937_64 rng(o.seed);
  std::string why;
  for (int s = 0; s < o.samples; ++s) {
    const WallCrystal& W = Ws[s % Ws.size()];
    Walker walk{W, rng};
    Wall w = W.ground_wall();
    std::vector<std::pair<char, int>> word;
    for (int step = 0; step < o.max_len; ++step) {
      const int i = walk.color();
      const bool down = walk.lower();
      auto at = [&] {
        return t.name() + " λ=" + W.lambda().str() + " word " + word_text(word) + " then " + (down ? "f" : "e") +
               std::to_string(i);
      };
      std::optional<Wall> x;
      try {
        x = down ? W.f(i, w) : W.e(i, w);
      } catch (const std::exception& ex) {
        r.fail(at() + ": " + ex.what());
        break;
      }
      if (!x) continue;
      const bool proper = W.is_proper(*x, &why);
      const bool reduced = W.is_reduced(*x);
      r.check_lazy(proper, [&] { return at() + ": improper (" + why + ")"; });
      r.check_lazy(reduced, [&] { return at() + ": removable δ"; });
      if (down)
        check_weights(r, W, w, *x, i, at);
      else
        check_weights(r, W, *x, w, i, at);
      if (!proper) break;
      w = *x;
      word.push_back({down ? 'f' : 'e', i});
    }
  }
  return r;
}

std::vector<HalvingVerdict> adjudicate_halving(const AffineType& t, const ClassicalWeight& lambda, int depth) {
  const int n = t.n;
  auto table = [&](std::initializer_list<int> halved) {
    HalvingTable h(t.size(), Rational(1));
    for (int i : halved) h[i] = Rational(1, 2);
    return h;
  };
  std::vector<HalvingVerdict> v;
  for (auto [name, h] : std::vector<std::pair<std::string, HalvingTable>>{{"default", default_halving(t)},
                                                                         {"all 1", table({})},
                                                                         {"1/2 at 0", table({0})},
                                                                         {"1/2 at n", table({n})},
                                                                         {"1/2 at 0 and n", table({0, n})}}) {
    HalvingVerdict x;
    x.name = name;
    x.table = h;
    v.push_back(x);
  }
  // Drop duplicates of the default.
  for (size_t k = v.size(); k-- > 1;)
    if (v[k].table == v[0].table) v.erase(v.begin() + k);

  WallCrystal W(t, lambda);
  std::vector<std::pair<Wall, int>> walls{{W.ground_wall(), 0}};
  std::map<std::string, size_t> seen{{W.to_string(W.ground_wall()), 0}};
  struct Edge {
    size_t u, v;
    int i;
  };
  std::vector<Edge> edges;
  for (size_t u = 0; u < walls.size(); ++u) {
    if (walls[u].second >= depth) continue;
    for (int i = 0; i <= n; ++i) {
      auto fw = W.f(i, walls[u].first);
      if (!fw) continue;
      auto [it, fresh] = seen.emplace(W.to_string(*fw), walls.size());
      if (fresh) walls.push_back({*fw, walls[u].second + 1});
      edges.push_back({u, it->second, i});
    }
  }
  for (auto& h : v) {
    h.ok = true;
    try {
      for (const auto& [w, d] : walls) {
        if (W.wt(w, h.table).lambda == W.cwt(w)) continue;
        h.ok = false;
        h.first_failure = W.to_string(w) + ": cl(wt) " + W.wt(w, h.table).lambda.str() + " != cwt " + W.cwt(w).str();
        break;
      }
      if (!h.ok) continue;
      for (const auto& e : edges) {
        const AffineWeight want = W.wt(walls[e.u].first, h.table) - affine_root(t, e.i);
        if (W.wt(walls[e.v].first, h.table) == want) continue;
        h.ok = false;
        h.first_failure = W.to_string(walls[e.v].first) + ": wt(f_" + std::to_string(e.i) + " W) != wt(W) - α";
        break;
      }
    } catch (const std::domain_error& ex) {
      h.ok = false;
      h.first_failure = ex.what();
    }
  }
  return v;
}

}  // namespace affcrys
