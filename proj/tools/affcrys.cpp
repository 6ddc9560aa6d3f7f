// Command-line explorer: enumerate, graph, map, ground, verify.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "affcrys/crystal.hpp"
#include "affcrys/graph.hpp"
#include "affcrys/path.hpp"
#include "affcrys/psi.hpp"
#include "affcrys/verify.hpp"
#include "affcrys/wall.hpp"

using namespace affcrys;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string type, weight, model = "wall", format, out, suite, direction, element;
  int level = 0, depth = 2, samples = -1;
  std::uint64_t seed = 1;
};

AffineType parse_type(const std::string& s) {
  if (s.empty()) throw UsageError("--type is required");
  try {
    return AffineType::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

ClassicalWeight parse_weight(const AffineType& t, const std::string& s) {
  if (s.empty()) throw UsageError("--weight is required");
  ClassicalWeight w;
  try {
    w = ClassicalWeight::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (w.size() != t.size()) throw UsageError("weight needs " + std::to_string(t.size()) + " coefficients");
  if (!w.dominant() || level(t, w) <= 0) throw UsageError("weight " + s + " is not dominant of positive level");
  return w;
}

int require_level(const Args& a) {
  if (a.level <= 0) throw UsageError("--level must be a positive integer");
  return a.level;
}

void emit(const Args& a, const std::string& text) {
  if (a.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(a.out);
  if (!f) throw UsageError("cannot write " + a.out);
  f << text;
}

int cmd_enumerate(const Args& a) {
  const AffineType t = parse_type(a.type);
  const int l = require_level(a);
  const auto elems = enumerate(t, l);
  if (a.format == "json") {
    json j{{"type", t.name()}, {"rank", t.n}, {"level", l}, {"size", elems.size()}, {"elements", json::array()}};
    for (const auto& b : elems) j["elements"].push_back(to_string(t, b));
    emit(a, j.dump(2) + "\n");
  } else {
    std::string s;
    for (const auto& b : elems) s += to_string(t, b) + "\n";
    emit(a, s);
  }
  return kPass;
}

int cmd_graph(const Args& a) {
  const AffineType t = parse_type(a.type);
  if (a.depth < 0) throw UsageError("--depth must be non-negative");
  GraphDump g;
  if (a.model == "slice-perfect") {
    g = slice_graph(t, require_level(a));
  } else {
    const ClassicalWeight w = parse_weight(t, a.weight);
    if (a.model == "wall")
      g = wall_graph(WallCrystal(t, w), a.depth);
    else
      g = path_graph(PathCrystal(t, w), a.depth);
  }
  emit(a, a.format == "json" ? to_json(g) : to_dot(g));
  return kPass;
}

// Level of a wall or path text, read from its lambda= prefix.
ClassicalWeight lambda_of(const AffineType& t, const std::string& s) {
  const auto semi = s.find(';');
  if (s.rfind("lambda=", 0) != 0 || semi == std::string::npos) throw UsageError("expected 'lambda=...; ...'");
  return parse_weight(t, s.substr(7, semi - 7));
}

int cmd_map(const Args& a) {
  const AffineType t = parse_type(a.type);
  const std::string& x = a.element;
  std::string res;
  try {
    if (a.direction == "coord-bracket") {
      const int l = require_level(a);
      const CoordElement b = parse_coord(t, x);
      if (!is_valid(t, l, b)) throw std::domain_error(x + " is not in the level-" + std::to_string(l) + " crystal");
      res = to_string(t, bracket_of_coord(t, l, b));
    } else if (a.direction == "bracket-coord") {
      const int l = require_level(a);
      const Bracket br = parse_bracket(t, x);
      std::string why;
      if (!bracket_valid(t, l, br, &why)) throw std::domain_error(why);
      res = to_string(t, coord_of_bracket(t, br));
    } else if (a.direction == "coord-slice") {
      const int l = require_level(a);
      const CoordElement b = parse_coord(t, x);
      if (!is_valid(t, l, b)) throw std::domain_error(x + " is not in the level-" + std::to_string(l) + " crystal");
      res = to_string(psi(t, l, b));
    } else if (a.direction == "slice-coord") {
      const Slice c = parse_slice(t, x);
      std::string why;
      if (!is_valid(c, &why)) throw std::domain_error(why);
      res = to_string(t, psi_inverse(c, static_cast<int>(c.layers.size()) / layer_count(t, 1)));
    } else if (a.direction == "wall-path") {
      const ClassicalWeight w = lambda_of(t, x);
      WallCrystal W(t, w);
      PathCrystal P(t, w);
      const Wall y = W.parse(x);
      std::string why;
      if (!W.is_proper(y, &why)) throw std::domain_error("wall is not proper: " + why);
      res = P.to_string(phi_map(W, P, y));
    } else if (a.direction == "path-wall") {
      const ClassicalWeight w = lambda_of(t, x);
      WallCrystal W(t, w);
      PathCrystal P(t, w);
      res = W.to_string(phi_map_inverse(W, P, P.parse(x)));
    } else {
      throw UsageError("unknown direction '" + a.direction + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(a, res + "\n");
  return kPass;
}

int cmd_ground(const Args& a) {
  const AffineType t = parse_type(a.type);
  const ClassicalWeight w = parse_weight(t, a.weight);
  WallCrystal W(t, w);
  PathCrystal P(t, w);
  const GroundState& g = W.ground_state();
  const int shown = std::max(a.depth, g.pre + g.period);
  json j{{"type", t.name()}, {"lambda", w.str()}, {"level", g.level}, {"pre", g.pre}, {"period", g.period}};
  j["columns"] = json::array();
  for (int k = 0; k < shown; ++k)
    j["columns"].push_back({{"k", k}, {"b", to_string(t, g.element(k))}, {"column", to_string(W.ground(k))}});
  std::string why;
  j["proper"] = W.is_proper(W.ground_wall(), &why);
  if (!why.empty()) j["why"] = why;
  j["reduced"] = W.is_reduced(W.ground_wall());
  j["path"] = P.to_string(phi_map(W, P, W.ground_wall()));
  if (a.format == "json") {
    emit(a, j.dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << t.pretty() << " lambda=" << w.str() << " level " << g.level << " pre " << g.pre << " period " << g.period << "\n";
    for (const auto& c : j["columns"])
      s << "  k=" << c["k"].get<int>() << "  b=" << c["b"].get<std::string>() << "  column " << c["column"].get<std::string>()
        << "\n";
    s << "proper " << j["proper"].get<bool>() << "  reduced " << j["reduced"].get<bool>() << "\n";
    emit(a, s.str());
  }
  return kPass;
}

int cmd_verify(const Args& a) {
  static const std::vector<std::string> suites{"axioms", "perfect", "psi", "iso", "signatures", "reduced-closure"};
  if (std::find(suites.begin(), suites.end(), a.suite) == suites.end()) throw UsageError("unknown suite '" + a.suite + "'");
  std::vector<GridPoint> grid;
  if (!a.type.empty()) {
    const AffineType t = parse_type(a.type);
    if (a.level > 0) {
      grid.push_back({t, a.level});
    } else if (!a.weight.empty()) {
      grid.push_back({t, static_cast<int>(level(t, parse_weight(t, a.weight)))});
    } else {
      for (const auto& g : default_grid())
        if (g.type == t) grid.push_back(g);
      if (grid.empty()) grid = {{t, 1}, {t, 2}};
    }
  } else {
    if (!a.weight.empty()) throw UsageError("--weight needs --type");
    grid = default_grid();
  }
  const auto t0 = std::chrono::steady_clock::now();
  Report total(a.suite);
  for (const auto& g : grid) {
    std::vector<ClassicalWeight> weights;
    if (!a.weight.empty())
      weights = {parse_weight(g.type, a.weight)};
    else
      weights = dominant_weights(g.type, g.level);
    WalkOptions o;
    o.seed = a.seed;
    if (a.suite == "axioms") {
      total.merge(verify_axioms(g.type, g.level));
    } else if (a.suite == "perfect") {
      total.merge(verify_perfect(g.type, g.level));
    } else if (a.suite == "psi") {
      total.merge(verify_intertwine(g.type, g.level));
    } else if (a.suite == "iso") {
      for (const auto& w : weights) total.merge(verify_iso(g.type, w, a.depth));
    } else if (a.suite == "signatures") {
      o.samples = a.samples < 0 ? 1000 : a.samples;
      total.merge(verify_signatures(g.type, weights, o));
    } else {
      o.samples = a.samples < 0 ? 10000 : a.samples;
      total.merge(verify_closure(g.type, weights, o));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json grid_j = json::array();
  for (const auto& g : grid) grid_j.push_back({{"type", g.type.name()}, {"level", g.level}});
  json j{{"suite", a.suite},
         {"seed", a.seed},
         {"grid", grid_j},
         {"checks", total.checks},
         {"failures", total.failures},
         {"pass", total.ok()},
         {"counterexamples", total.counterexamples},
         {"notes", total.notes},
         {"seconds", secs}};
  if (!a.weight.empty()) j["weight"] = a.weight;
  if (a.suite == "iso") j["depth"] = a.depth;
  if (a.suite == "signatures" || a.suite == "reduced-closure") j["samples"] = a.samples < 0 ? (a.suite == "signatures" ? 1000 : 10000) : a.samples;
  emit(a, j.dump(2) + "\n");
  std::cerr << "verify " << a.suite << " seed=" << a.seed << ": " << total.checks << " checks, " << total.failures
            << " failures -> " << (total.ok() ? "PASS" : "FAIL") << "\n";
  return total.ok() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine crystals: coordinates, slices, Young walls and paths"};
  app.require_subcommand(1);
  Args a;
  auto common = [&](CLI::App* s) {
    s->add_option("--type", a.type, "affine type, e.g. B1:3, A2:5, D2:3");
    s->add_option("--out", a.out, "write output to this file");
  };

  auto* en = app.add_subcommand("enumerate", "list the elements of the level-l perfect crystal");
  common(en);
  en->add_option("--level", a.level, "level l")->required();
  en->add_option("--format", a.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* gr = app.add_subcommand("graph", "crystal graph by BFS from the highest-weight element");
  common(gr);
  gr->add_option("--weight", a.weight, "dominant weight c0,...,cn");
  gr->add_option("--level", a.level, "level (slice-perfect model)");
  gr->add_option("--depth", a.depth, "BFS depth bound");
  gr->add_option("--model", a.model, "wall | path | slice-perfect")->check(CLI::IsMember({"wall", "path", "slice-perfect"}));
  gr->add_option("--format", a.format, "dot | json")->check(CLI::IsMember({"dot", "json"}));

  auto* mp = app.add_subcommand("map", "translate an element between models");
  common(mp);
  mp->add_option("--level", a.level, "level (coordinate and bracket directions)");
  mp->add_option("--direction", a.direction,
                 "coord-bracket | bracket-coord | coord-slice | slice-coord | wall-path | path-wall")
      ->required();
  mp->add_option("element", a.element, "element text")->required();

  auto* gd = app.add_subcommand("ground", "ground-state sequence, wall and path");
  common(gd);
  gd->add_option("--weight", a.weight, "dominant weight c0,...,cn");
  gd->add_option("--depth", a.depth, "number of columns to show");
  gd->add_option("--format", a.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* vf = app.add_subcommand("verify", "run a verification suite; exit 1 on any violation");
  common(vf);
  vf->add_option("--suite", a.suite, "axioms | perfect | psi | iso | signatures | reduced-closure")->required();
  vf->add_option("--level", a.level, "restrict to one level");
  vf->add_option("--weight", a.weight, "restrict to one dominant weight");
  auto* vdepth = vf->add_option("--depth", a.depth, "BFS depth for iso (default 6)");
  vf->add_option("--samples", a.samples, "random walls (signatures) or words (reduced-closure)");
  vf->add_option("--seed", a.seed, "PRNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }
  if (*vf && vdepth->count() == 0) a.depth = 6;
  try {
    if (*en) return cmd_enumerate(a);
    if (*gr) return cmd_graph(a);
    if (*mp) return cmd_map(a);
    if (*gd) return cmd_ground(a);
    return cmd_verify(a);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
